#include "weylpol/symtensor.hpp"

#include <functional>
#include <stdexcept>

namespace weylpol {

int Monomial::multidegree(int i) const {
  int d = 0;
  for (int k = 1; k <= m; ++k) d += exp(i, k);
  return d;
}

std::vector<int> Monomial::multidegrees() const {
  std::vector<int> d(n);
  for (int i = 1; i <= n; ++i) d[i - 1] = multidegree(i);
  return d;
}

std::vector<int> Monomial::variable_weight() const {
  std::vector<int> w(m, 0);
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= m; ++k) w[k - 1] += exp(i, k);
  return w;
}

SymTensor SymTensor::monomial(const Monomial& mo, const Rational& c) {
  SymTensor t(mo.n, mo.m);
  t.add_term(mo, c);
  return t;
}

void SymTensor::add_term(const Monomial& mo, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(mo);
  if (it == terms_.end()) {
    terms_.emplace(mo, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SymTensor& SymTensor::operator+=(const SymTensor& o) {
  for (const auto& [mo, c] : o.terms_) add_term(mo, c);
  return *this;
}

SymTensor& SymTensor::operator-=(const SymTensor& o) {
  for (const auto& [mo, c] : o.terms_) add_term(mo, -c);
  return *this;
}

SymTensor& SymTensor::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [mo, v] : terms_) v *= c;
  return *this;
}

SymTensor apply_elementary(int i, int j, const SymTensor& t) {
  SymTensor out(t.n(), t.m());
  for (const auto& [mo, c] : t.terms()) {
    if (i == j) {
      out.add_term(mo, c * mo.multidegree(i));
      continue;
    }
    for (int k = 1; k <= t.m(); ++k) {
      int ejk = mo.exp(j, k);
      if (ejk == 0) continue;
      Monomial nm = mo;
      nm.set_exp(j, k, ejk - 1);
      nm.set_exp(i, k, nm.exp(i, k) + 1);
      out.add_term(nm, c * ejk);
    }
  }
  return out;
}

namespace {

// Nonzero entries of a shift matrix, processed in a fixed order.
struct Entry {
  int i, j, c;
};

std::vector<Entry> nonzero_entries(const ShiftMatrix& s) {
  std::vector<Entry> es;
  for (int i = 1; i <= s.n(); ++i)
    for (int j = 1; j <= s.n(); ++j)
      if (s(i, j) > 0) es.push_back({i, j, s(i, j)});
  return es;
}

// Enumerate μ_1..μ_m with Σμ_k = total, μ_k ≤ cap(k); weight picks up
// C(cap(k), μ_k) per part.
void compositions_capped(int m, int total, const std::function<int(int)>& cap,
                         std::vector<int>& mu, int k, int left, const Integer& w,
                         const std::function<void(const std::vector<int>&, const Integer&)>& emit) {
  if (k == m) {
    int c = cap(m);
    if (left > c) return;
    mu[m - 1] = left;
    emit(mu, w * binomial(c, left));
    return;
  }
  int c = cap(k);
  int hi = left < c ? left : c;
  for (int v = 0; v <= hi; ++v) {
    mu[k - 1] = v;
    compositions_capped(m, total, cap, mu, k + 1, left - v, w * binomial(c, v), emit);
  }
}

void apply_weyl_monomial(const ShiftMatrix& s, const Monomial& mo, const Rational& coeff,
                         SymTensor& out) {
  auto entries = nonzero_entries(s);
  int m = mo.m;
  // rem[j][k]: letters of variable k still unselected in slot j.
  std::vector<std::vector<int>> rem(mo.n + 1, std::vector<int>(m + 1));
  for (int j = 1; j <= mo.n; ++j)
    for (int k = 1; k <= m; ++k) rem[j][k] = mo.exp(j, k);
  std::vector<int> delta(static_cast<size_t>(mo.n) * m, 0);

  std::function<void(size_t, const Integer&)> rec = [&](size_t idx, const Integer& w) {
    if (idx == entries.size()) {
      Monomial nm = mo;
      for (size_t p = 0; p < nm.e.size(); ++p) nm.e[p] += delta[p];
      out.add_term(nm, coeff * Rational(w));
      return;
    }
    const Entry& en = entries[idx];
    std::vector<int> mu(m);
    compositions_capped(
        m, en.c, [&](int k) { return rem[en.j][k]; }, mu, 1, en.c, Integer(1),
        [&](const std::vector<int>& muv, const Integer& w2) {
          for (int k = 1; k <= m; ++k) {
            rem[en.j][k] -= muv[k - 1];
            delta[static_cast<size_t>(en.j - 1) * m + (k - 1)] -= muv[k - 1];
            delta[static_cast<size_t>(en.i - 1) * m + (k - 1)] += muv[k - 1];
          }
          rec(idx + 1, w * w2);
          for (int k = 1; k <= m; ++k) {
            rem[en.j][k] += muv[k - 1];
            delta[static_cast<size_t>(en.j - 1) * m + (k - 1)] += muv[k - 1];
            delta[static_cast<size_t>(en.i - 1) * m + (k - 1)] -= muv[k - 1];
          }
        });
  };
  rec(0, Integer(1));
}

Integer falling_factorial(int x, int d) {
  Integer r = 1;
  for (int t = 0; t < d; ++t) r *= (x - t);
  return r;
}

void apply_weyl_diff_monomial(const ShiftMatrix& s, const Monomial& mo, const Rational& coeff,
                              SymTensor& out) {
  auto entries = nonzero_entries(s);
  int m = mo.m;
  // deriv[j][k]: accumulated derivative order; mult[i][k]: accumulated
  // multiplications.
  std::vector<std::vector<int>> deriv(mo.n + 1, std::vector<int>(m + 1, 0));
  std::vector<std::vector<int>> mult(mo.n + 1, std::vector<int>(m + 1, 0));

  std::function<void(size_t, const Integer&)> rec = [&](size_t idx, const Integer& w) {
    if (idx == entries.size()) {
      Integer f = w;
      Monomial nm = mo;
      for (int j = 1; j <= mo.n; ++j)
        for (int k = 1; k <= m; ++k) {
          int d = deriv[j][k];
          if (d == 0) continue;
          int e = nm.exp(j, k);
          if (d > e) return;
          f *= falling_factorial(e, d);
          nm.set_exp(j, k, e - d);
        }
      for (int i = 1; i <= mo.n; ++i)
        for (int k = 1; k <= m; ++k)
          if (mult[i][k] > 0) nm.set_exp(i, k, nm.exp(i, k) + mult[i][k]);
      out.add_term(nm, coeff * Rational(f));
      return;
    }
    const Entry& en = entries[idx];
    std::vector<int> nu(m);
    // multinomial weight σ_{i,j}!/∏ν_k! assembled as ∏ C(left, ν_k).
    compositions_capped(
        m, en.c, [&](int) { return en.c; }, nu, 1, en.c, Integer(1),
        [&](const std::vector<int>& nuv, const Integer&) {
          Integer w2 = factorial(en.c);
          for (int k = 1; k <= m; ++k) w2 /= factorial(nuv[k - 1]);
          for (int k = 1; k <= m; ++k) {
            deriv[en.j][k] += nuv[k - 1];
            mult[en.i][k] += nuv[k - 1];
          }
          rec(idx + 1, w * w2);
          for (int k = 1; k <= m; ++k) {
            deriv[en.j][k] -= nuv[k - 1];
            mult[en.i][k] -= nuv[k - 1];
          }
        });
  };
  rec(0, Integer(1));
}

}  // namespace

SymTensor apply_weyl(const ShiftMatrix& s, const SymTensor& t) {
  SymTensor out(t.n(), t.m());
  if (s.n() != t.n()) throw std::invalid_argument("apply_weyl: slot count mismatch");
  for (const auto& [mo, c] : t.terms()) apply_weyl_monomial(s, mo, c, out);
  return out;
}

SymTensor apply_weyl_differential(const ShiftMatrix& s, const SymTensor& t) {
  SymTensor out(t.n(), t.m());
  if (s.n() != t.n()) throw std::invalid_argument("apply_weyl_differential: slot count mismatch");
  for (const auto& [mo, c] : t.terms()) apply_weyl_diff_monomial(s, mo, c, out);
  Rational norm(1);
  norm /= Rational(shift_factorial(s));
  return norm * out;
}

SymTensor apply_weyl_by_selections(const ShiftMatrix& s, const SymTensor& t) {
  SymTensor out(t.n(), t.m());
  int n = t.n(), m = t.m();
  for (const auto& [mo, c] : t.terms()) {
    // Expand the monomial into explicit letters per slot.
    std::vector<std::vector<int>> letters(n + 1);
    for (int i = 1; i <= n; ++i)
      for (int k = 1; k <= m; ++k)
        for (int r = 0; r < mo.exp(i, k); ++r) letters[i].push_back(k);
    DegreeVector alpha;
    alpha.degrees.resize(n);
    for (int i = 1; i <= n; ++i) alpha.degrees[i - 1] = static_cast<int>(letters[i].size());
    for (const auto& fam : enumerate_selections(s, alpha)) {
      Monomial nm(n, m);
      // Letters selected out of slot j land in slot i; the rest stay put.
      std::vector<std::vector<bool>> taken(n + 1);
      for (int j = 1; j <= n; ++j) taken[j].assign(letters[j].size(), false);
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
          for (int pos : fam.sets[i - 1][j - 1]) {
            taken[j][pos - 1] = true;
            nm.set_exp(i, letters[j][pos - 1], nm.exp(i, letters[j][pos - 1]) + 1);
          }
      for (int j = 1; j <= n; ++j)
        for (size_t p = 0; p < letters[j].size(); ++p)
          if (!taken[j][p]) nm.set_exp(j, letters[j][p], nm.exp(j, letters[j][p]) + 1);
      out.add_term(nm, c);
    }
  }
  return out;
}

Integer diagonal_reduction_factor(const ShiftMatrix& s, const DegreeVector& alpha) {
  Integer f = 1;
  for (int i = 1; i <= s.n(); ++i) {
    int off = s.col_sum(i) - s(i, i);
    f *= binomial(alpha.degrees[i - 1] - off, s(i, i));
  }
  return f;
}

}  // namespace weylpol
