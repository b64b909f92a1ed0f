#include "weylpol/pbw.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace weylpol {

GeneratorOrder GeneratorOrder::standard(int n) {
  GeneratorOrder o;
  o.n = n;
  for (int i = 2; i <= n; ++i)
    for (int j = 1; j < i; ++j) o.gens.push_back({i, j});
  for (int i = 1; i <= n; ++i) o.gens.push_back({i, i});
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) o.gens.push_back({i, j});
  return o;
}

GeneratorOrder GeneratorOrder::reversed_lowering(int n) {
  GeneratorOrder o = standard(n);
  std::reverse(o.gens.begin(), o.gens.begin() + n * (n - 1) / 2);
  return o;
}

int GeneratorOrder::index(int i, int j) const {
  for (size_t p = 0; p < gens.size(); ++p)
    if (gens[p] == std::make_pair(i, j)) return static_cast<int>(p);
  throw std::invalid_argument("GeneratorOrder: unknown generator");
}

UElement UElement::one(const GeneratorOrder& o) {
  UElement u(o);
  u.terms.emplace(std::vector<int>(o.gens.size(), 0), Rational(1));
  return u;
}

void UElement::add_term(const std::vector<int>& mono, const Rational& c) {
  if (c == 0) return;
  auto it = terms.find(mono);
  if (it == terms.end()) {
    terms.emplace(mono, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

UElement& UElement::operator+=(const UElement& o) {
  for (const auto& [mo, c] : o.terms) add_term(mo, c);
  return *this;
}

UElement& UElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms.clear();
    return *this;
  }
  for (auto& [mo, v] : terms) v *= c;
  return *this;
}

VermaVector VermaVector::highest_weight(const GeneratorOrder& o, std::vector<Rational> lambda) {
  VermaVector v;
  v.n = o.n;
  v.order = o;
  v.lambda = std::move(lambda);
  v.terms.emplace(std::vector<int>(o.gens.size(), 0), Rational(1));
  return v;
}

void VermaVector::add_term(const std::vector<int>& mono, const Rational& c) {
  if (c == 0) return;
  auto it = terms.find(mono);
  if (it == terms.end()) {
    terms.emplace(mono, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

namespace {

// g · m for a single PBW monomial m, recursively bubbling g into place via
// [E_{ij}, E_{kl}] = δ_{jk}E_{il} − δ_{li}E_{kj}.
void left_mul_mono(int gi, int gj, const GeneratorOrder& o, const std::vector<int>& mono,
                   const Rational& coeff, UElement& out) {
  int gpos = o.index(gi, gj);
  int first = -1;
  for (size_t p = 0; p < mono.size(); ++p)
    if (mono[p] > 0) {
      first = static_cast<int>(p);
      break;
    }
  if (first < 0 || gpos <= first) {
    std::vector<int> nm = mono;
    nm[gpos] += 1;
    out.add_term(nm, coeff);
    return;
  }
  auto [hi, hj] = o.gens[first];
  std::vector<int> rest = mono;
  rest[first] -= 1;
  // g·h·rest = h·g·rest + [g,h]·rest
  UElement tail(o);
  left_mul_mono(gi, gj, o, rest, coeff, tail);
  for (const auto& [mo, c] : tail.terms) left_mul_mono(hi, hj, o, mo, c, out);
  if (gj == hi) left_mul_mono(gi, hj, o, rest, coeff, out);
  if (hj == gi) left_mul_mono(hi, gj, o, rest, -coeff, out);
}

}  // namespace

UElement left_mul_generator(int i, int j, const UElement& u) {
  UElement out(u.order);
  for (const auto& [mo, c] : u.terms) left_mul_mono(i, j, u.order, mo, c, out);
  return out;
}

UElement straighten(const ElementaryWord& w, const GeneratorOrder& order) {
  UElement u = UElement::one(order);
  for (auto it = w.factors.rbegin(); it != w.factors.rend(); ++it)
    u = left_mul_generator(it->first, it->second, u);
  return u;
}

namespace {

UElement polar_to_pbw_rec(const ShiftMatrix& s, const GeneratorOrder& order,
                          std::map<ShiftMatrix, UElement>& memo) {
  auto hit = memo.find(s);
  if (hit != memo.end()) return hit->second;
  int pi = 0, pj = 0;
  for (int i = 1; i <= s.n() && pi == 0; ++i)
    for (int j = 1; j <= s.n(); ++j)
      if (s(i, j) > 0) {
        pi = i;
        pj = j;
        break;
      }
  if (pi == 0) return UElement::one(order);
  ShiftMatrix prev = s;
  prev.set(pi, pj, s(pi, pj) - 1);
  UElement acc = left_mul_generator(pi, pj, polar_to_pbw_rec(prev, order, memo));
  if (pi == pj) {
    UElement low = polar_to_pbw_rec(prev, order, memo);
    low *= Rational(-prev.row_sum(pi));
    acc += low;
  } else {
    for (int k = 1; k <= s.n(); ++k) {
      auto adj = adjusted(prev, {{pi, k, 1}, {pj, k, -1}});
      if (!adj) continue;
      UElement low = polar_to_pbw_rec(*adj, order, memo);
      low *= Rational(-(prev(pi, k) + 1));
      acc += low;
    }
  }
  Rational inv(1);
  inv /= s(pi, pj);
  acc *= inv;
  memo.emplace(s, acc);
  return acc;
}

std::map<std::pair<std::vector<std::pair<int, int>>, ShiftMatrix>, UElement>& pbw_cache() {
  static std::map<std::pair<std::vector<std::pair<int, int>>, ShiftMatrix>, UElement> cache;
  return cache;
}
std::mutex& pbw_cache_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

UElement polar_to_pbw(const ShiftMatrix& s, const GeneratorOrder& order) {
  {
    std::lock_guard<std::mutex> lock(pbw_cache_mutex());
    auto it = pbw_cache().find({order.gens, s});
    if (it != pbw_cache().end()) return it->second;
  }
  std::map<ShiftMatrix, UElement> memo;
  UElement u = polar_to_pbw_rec(s, order, memo);
  std::lock_guard<std::mutex> lock(pbw_cache_mutex());
  pbw_cache().emplace(std::make_pair(order.gens, s), u);
  return u;
}

UElement combo_to_pbw(const PolarCombo& c, const GeneratorOrder& order) {
  UElement out(order);
  for (const auto& [s, v] : c.terms()) {
    UElement u = polar_to_pbw(s, order);
    u *= v;
    out += u;
  }
  return out;
}

std::vector<int> pbw_monomial(const ShiftMatrix& s, const GeneratorOrder& order) {
  std::vector<int> mono(order.gens.size(), 0);
  for (int i = 1; i <= s.n(); ++i)
    for (int j = 1; j <= s.n(); ++j)
      if (s(i, j) > 0) {
        if (i <= j) throw std::invalid_argument("pbw_monomial: not strictly lower-triangular");
        mono[order.index(i, j)] = s(i, j);
      }
  return mono;
}

namespace {

// Reduce a normal-form monomial against the highest-weight vector: any
// raising exponent kills it; Cartan exponents evaluate at λ.
void reduce_mono(const GeneratorOrder& o, const std::vector<Rational>& lambda,
                 const std::vector<int>& mono, const Rational& coeff, VermaVector& out) {
  std::vector<int> low(mono.size(), 0);
  Rational c = coeff;
  for (size_t p = 0; p < mono.size(); ++p) {
    if (mono[p] == 0) continue;
    auto [i, j] = o.gens[p];
    if (i > j) {
      low[p] = mono[p];
    } else if (i == j) {
      for (int t = 0; t < mono[p]; ++t) c *= lambda[i - 1];
    } else {
      return;
    }
  }
  out.add_term(low, c);
}

}  // namespace

VermaVector act_on_verma(const UElement& u, const VermaVector& v) {
  if (u.n != v.n) throw std::invalid_argument("act_on_verma: size mismatch");
  VermaVector out;
  out.n = v.n;
  out.order = v.order;
  out.lambda = v.lambda;
  for (const auto& [mu, cu] : u.terms) {
    // Multiply mu onto each monomial of v, generator by generator from the
    // right.
    UElement cur(v.order);
    for (const auto& [mv, cv] : v.terms) cur.add_term(mv, cv * cu);
    for (size_t p = mu.size(); p-- > 0;) {
      auto [i, j] = u.order.gens[p];
      for (int t = 0; t < mu[p]; ++t) cur = left_mul_generator(i, j, cur);
    }
    for (const auto& [mo, c] : cur.terms) reduce_mono(v.order, v.lambda, mo, c, out);
  }
  return out;
}

SymTensor apply_uelement(const UElement& u, const SymTensor& t) {
  SymTensor out(t.n(), t.m());
  for (const auto& [mo, c] : u.terms) {
    SymTensor cur = t;
    for (size_t p = mo.size(); p-- > 0;) {
      auto [i, j] = u.order.gens[p];
      for (int q = 0; q < mo[p]; ++q) cur = apply_elementary(i, j, cur);
    }
    out += c * cur;
  }
  return out;
}

bool singular_check(const PolarCombo& c, const VermaTriple& tau) {
  GeneratorOrder o = GeneratorOrder::standard(tau.n);
  VermaVector hw = VermaVector::highest_weight(o, tau.lambda);
  VermaVector w = act_on_verma(combo_to_pbw(c, o), hw);
  // Weight of a lowering monomial: Σ exps·(e_i − e_j).
  for (const auto& [mo, v] : w.terms) {
    std::vector<int> wt(tau.n, 0);
    for (size_t p = 0; p < mo.size(); ++p) {
      auto [i, j] = o.gens[p];
      wt[i - 1] += mo[p];
      wt[j - 1] -= mo[p];
    }
    std::vector<int> want(tau.n, 0);
    want[tau.i - 1] = -tau.r;
    want[tau.j - 1] = tau.r;
    if (wt != want) return false;
  }
  for (int p = 1; p < tau.n; ++p) {
    UElement raise(o);
    raise.add_term([&] {
      std::vector<int> mo(o.gens.size(), 0);
      mo[o.index(p, p + 1)] = 1;
      return mo;
    }(), Rational(1));
    if (!act_on_verma(raise, w).is_zero()) return false;
  }
  return true;
}

Rational shapovalov_coefficient(const PolarCombo& c, int i, int j, int r,
                                const GeneratorOrder& order) {
  UElement u = combo_to_pbw(c, order);
  auto it = u.terms.find(pbw_monomial(sigma_zero(order.n, i, j, r), order));
  return it == u.terms.end() ? Rational(0) : it->second;
}

bool leading_coefficient_check(const ShiftMatrix& s, const GeneratorOrder& order) {
  UElement u = polar_to_pbw(s, order);
  std::vector<int> lead = pbw_monomial(s, order);
  Rational want(1);
  want /= Rational(shift_factorial(s));
  int w = total_weight(s);
  for (const auto& [mo, c] : u.terms) {
    if (mo == lead) {
      if (c != want) return false;
      continue;
    }
    int mw = 0;
    for (int v : mo) mw += v;
    if (mw >= w) return false;
  }
  return u.terms.count(lead) == 1;
}

}  // namespace weylpol
