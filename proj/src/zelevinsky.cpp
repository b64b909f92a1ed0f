#include "weylpol/zelevinsky.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace weylpol {

ZelTerm::ZelTerm(const Permutation& p, const DegreeVector& a) : pi(p), alpha(a) {
  b.resize(p.n());
  for (int k = 1; k <= p.n(); ++k) b[k - 1] = a.degrees[k - 1] - k + p(k);
}

bool ZelTerm::is_zero_space() const {
  for (int v : b)
    if (v < 0) return true;
  return false;
}

Integer ZelTerm::dimension(int m) const {
  if (is_zero_space()) return Integer(0);
  Integer d(1);
  for (int v : b) d *= binomial(v + m - 1, m - 1);
  return d;
}

std::vector<Monomial> ZelTerm::basis(int m) const {
  std::vector<Monomial> out;
  if (is_zero_space()) return out;
  int n = pi.n();
  Monomial mo(n, m);
  std::function<void(int)> slot = [&](int i) {
    if (i > n) {
      out.push_back(mo);
      return;
    }
    std::function<void(int, int)> comp = [&](int k, int left) {
      if (k == m) {
        mo.set_exp(i, m, left);
        slot(i + 1);
        return;
      }
      for (int v = 0; v <= left; ++v) {
        mo.set_exp(i, k, v);
        comp(k + 1, left - v);
      }
      mo.set_exp(i, k, 0);
    };
    comp(1, b[i - 1]);
    for (int k = 1; k <= m; ++k) mo.set_exp(i, k, 0);
  };
  slot(1);
  return out;
}

void RationalMatrix::add(int r, int c, const Rational& v) {
  if (v == 0) return;
  auto key = std::make_pair(r, c);
  auto it = entries.find(key);
  if (it == entries.end()) {
    entries.emplace(key, v);
  } else {
    it->second += v;
    if (it->second == 0) entries.erase(it);
  }
}

Rational RationalMatrix::at(int r, int c) const {
  auto it = entries.find({r, c});
  return it == entries.end() ? Rational(0) : it->second;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("multiply: shape mismatch");
  // Index b by row for sparse traversal.
  std::map<int, std::vector<std::pair<int, const Rational*>>> brows;
  for (const auto& [rc, v] : b.entries) brows[rc.first].push_back({rc.second, &v});
  RationalMatrix out(a.rows, b.cols);
  for (const auto& [rc, va] : a.entries) {
    auto it = brows.find(rc.second);
    if (it == brows.end()) continue;
    for (const auto& [c, vb] : it->second) out.add(rc.first, c, va * *vb);
  }
  return out;
}

int rank(const RationalMatrix& a) {
  // Dense fraction-free elimination over integers after clearing row
  // denominators.
  std::vector<std::vector<Integer>> m(a.rows, std::vector<Integer>(a.cols, Integer(0)));
  std::vector<Integer> lcm(a.rows, Integer(1));
  for (const auto& [rc, v] : a.entries) {
    Integer d = v.get_den();
    lcm[rc.first] = lcm[rc.first] / gcd(lcm[rc.first], d) * d;
  }
  for (const auto& [rc, v] : a.entries)
    m[rc.first][rc.second] = v.get_num() * (lcm[rc.first] / v.get_den());
  int r = 0;
  Integer prev(1);
  for (int c = 0; c < a.cols && r < a.rows; ++c) {
    int piv = -1;
    for (int i = r; i < a.rows; ++i)
      if (m[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    for (int i = r + 1; i < a.rows; ++i) {
      for (int j = c + 1; j < a.cols; ++j)
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

Integer ZelComplex::level_dimension(int k) const {
  Integer d(0);
  for (const auto& t : levels[k]) d += t.dimension(m);
  return d;
}

Integer zel_amplitude(const ShiftMatrix& s, const ArrowPair& a) {
  int i = a.i, j = a.j, r = a.r;
  if (!shift_subordinate(s, i, j, r))
    throw std::invalid_argument("zel_amplitude: shift not subordinate to arrow");
  Integer amp = factorial(r);
  for (int k = i + 1; k < j; ++k) {
    int rk = route_flow(s, k);
    Rational bin = binomial_general(Rational(a.source(i) - a.source(k)), r - rk);
    amp *= factorial(rk) * factorial(r - rk) * bin.get_num();
    if (bin.get_den() != 1) throw std::logic_error("zel_amplitude: non-integer");
  }
  return amp;
}

PolarCombo differential_block(const ArrowPair& a, const SignatureTable& sgn) {
  PolarCombo out(a.source.n());
  int sg = sgn.sign(a.source, a.target);
  for (const auto& s : term_set(a.source.n(), a.i, a.j, a.r))
    out.add_term(s, Rational(sg * zel_amplitude(s, a)));
  return out;
}

ZelComplex build_complex(const DegreeVector& alpha, int m, const SignatureTable& sgn) {
  ZelComplex c;
  c.n = alpha.n();
  c.m = m;
  c.alpha = alpha;
  c.sgn = sgn;
  c.levels.resize(c.n * (c.n - 1) / 2 + 1);
  Permutation w = Permutation::identity(c.n);
  do {
    c.levels[w.length()].emplace_back(w, alpha);
  } while (std::next_permutation(w.p.begin(), w.p.end()));
  for (auto& lvl : c.levels)
    std::sort(lvl.begin(), lvl.end(),
              [](const ZelTerm& a, const ZelTerm& b) { return a.pi < b.pi; });
  for (const auto& a : arrow_pairs(c.n))
    c.blocks.emplace(std::make_pair(a.source, a.target), differential_block(a, sgn));
  return c;
}

namespace {

struct LevelBasis {
  std::vector<std::pair<int, Monomial>> elems;
  std::map<std::pair<int, Monomial>, int> index;
};

LevelBasis level_basis(const ZelComplex& c, int k) {
  LevelBasis lb;
  for (size_t t = 0; t < c.levels[k].size(); ++t)
    for (const auto& mo : c.levels[k][t].basis(c.m)) {
      lb.index[{static_cast<int>(t), mo}] = static_cast<int>(lb.elems.size());
      lb.elems.push_back({static_cast<int>(t), mo});
    }
  return lb;
}

// Fill the columns of d_k for the given subset of source basis elements,
// using a row lookup into the target basis.
void fill_columns(const ZelComplex& c, int k, const LevelBasis& src, const LevelBasis& dst,
                  RationalMatrix& out) {
  const auto& up = c.levels[k];
  const auto& down = c.levels[k - 1];
  std::map<Permutation, int> down_idx;
  for (size_t t = 0; t < down.size(); ++t) down_idx[down[t].pi] = static_cast<int>(t);
  for (size_t col = 0; col < src.elems.size(); ++col) {
    const auto& [t, mo] = src.elems[col];
    const ZelTerm& term = up[t];
    for (const auto& [key, combo] : c.blocks) {
      if (key.first != term.pi) continue;
      auto dit = down_idx.find(key.second);
      if (dit == down_idx.end()) continue;
      if (down[dit->second].is_zero_space()) continue;
      SymTensor img = apply_combo(combo, SymTensor::monomial(mo));
      for (const auto& [rm, v] : img.terms()) {
        auto rit = dst.index.find({dit->second, rm});
        if (rit == dst.index.end())
          throw std::logic_error("realize_matrix: image outside target basis");
        out.add(rit->second, static_cast<int>(col), v);
      }
    }
  }
}

}  // namespace

RationalMatrix realize_matrix(const ZelComplex& c, int k) {
  if (k < 1 || k >= static_cast<int>(c.levels.size()))
    throw std::invalid_argument("realize_matrix: level out of range");
  LevelBasis src = level_basis(c, k);
  LevelBasis dst = level_basis(c, k - 1);
  RationalMatrix out(static_cast<int>(dst.elems.size()), static_cast<int>(src.elems.size()));
  fill_columns(c, k, src, dst, out);
  return out;
}

namespace {

// The polarizations only move letters between slots, so every differential
// preserves the total degree of each variable. Splitting bases by that
// weight vector keeps the elimination blocks small.
std::map<std::vector<int>, LevelBasis> split_by_weight(const LevelBasis& lb) {
  std::map<std::vector<int>, LevelBasis> out;
  for (const auto& el : lb.elems) {
    LevelBasis& blk = out[el.second.variable_weight()];
    blk.index[el] = static_cast<int>(blk.elems.size());
    blk.elems.push_back(el);
  }
  return out;
}

std::map<std::vector<int>, RationalMatrix> realize_blocks(
    const ZelComplex& c, int k, const std::map<std::vector<int>, LevelBasis>& src,
    const std::map<std::vector<int>, LevelBasis>& dst) {
  std::map<std::vector<int>, RationalMatrix> out;
  for (const auto& [w, sb] : src) {
    auto dit = dst.find(w);
    LevelBasis empty;
    const LevelBasis& db = dit == dst.end() ? empty : dit->second;
    RationalMatrix m(static_cast<int>(db.elems.size()), static_cast<int>(sb.elems.size()));
    fill_columns(c, k, sb, db, m);
    out.emplace(w, std::move(m));
  }
  return out;
}

}  // namespace

bool check_dd_zero(const ZelComplex& c) {
  int top = static_cast<int>(c.levels.size()) - 1;
  auto bases = std::vector<std::map<std::vector<int>, LevelBasis>>();
  bases.reserve(top + 1);
  for (int k = 0; k <= top; ++k) bases.push_back(split_by_weight(level_basis(c, k)));
  for (int k = 2; k <= top; ++k) {
    auto dk = realize_blocks(c, k - 1, bases[k - 1], bases[k - 2]);
    auto dk1 = realize_blocks(c, k, bases[k], bases[k - 1]);
    for (const auto& [w, m1] : dk1) {
      auto it = dk.find(w);
      if (it == dk.end()) {
        if (m1.rows != 0 && !m1.is_zero()) return false;
        continue;
      }
      if (!multiply(it->second, m1).is_zero()) return false;
    }
  }
  return true;
}

std::vector<Integer> homology_dims(const ZelComplex& c) {
  int top = static_cast<int>(c.levels.size()) - 1;
  std::vector<Integer> dims(top + 1), ranks(top + 2, Integer(0));
  std::map<std::vector<int>, LevelBasis> prev = split_by_weight(level_basis(c, 0));
  dims[0] = static_cast<long>(level_basis(c, 0).elems.size());
  for (int k = 1; k <= top; ++k) {
    auto cur = split_by_weight(level_basis(c, k));
    long d = 0;
    for (const auto& [w, b] : cur) d += static_cast<long>(b.elems.size());
    dims[k] = d;
    for (const auto& [w, sb] : cur) {
      auto dit = prev.find(w);
      LevelBasis empty;
      const LevelBasis& db = dit == prev.end() ? empty : dit->second;
      RationalMatrix m(static_cast<int>(db.elems.size()), static_cast<int>(sb.elems.size()));
      fill_columns(c, k, sb, db, m);
      ranks[k] += rank(m);
    }
    prev = std::move(cur);
  }
  std::vector<Integer> h(top + 1);
  for (int k = 0; k <= top; ++k) h[k] = dims[k] - ranks[k] - ranks[k + 1];
  return h;
}

Integer schur_dimension_oracle(const DegreeVector& alpha, int m) {
  int n = alpha.n();
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      int d = alpha.degrees[i - 1] - i + j;
      a[i - 1][j - 1] = d < 0 ? Integer(0) : binomial(d + m - 1, m - 1);
    }
  // Fraction-free determinant.
  Integer prev(1);
  int sign = 1;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (a[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return Integer(0);
    if (piv != c) {
      std::swap(a[piv], a[c]);
      sign = -sign;
    }
    for (int i = c + 1; i < n; ++i) {
      for (int j = c + 1; j < n; ++j)
        a[i][j] = (a[c][c] * a[i][j] - a[i][c] * a[c][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[c][c];
  }
  return sign * a[n - 1][n - 1];
}

Integer hook_content_dimension(const DegreeVector& alpha, int m) {
  const auto& al = alpha.degrees;
  for (size_t i = 0; i + 1 < al.size(); ++i)
    if (al[i] < al[i + 1])
      throw std::invalid_argument("hook_content_dimension: not a partition");
  if (!al.empty() && al.back() < 0)
    throw std::invalid_argument("hook_content_dimension: not a partition");
  std::vector<int> conj;
  for (int c = 1; !al.empty() && c <= al[0]; ++c) {
    int h = 0;
    for (int v : al)
      if (v >= c) ++h;
    conj.push_back(h);
  }
  Rational d(1);
  for (size_t r = 0; r < al.size(); ++r)
    for (int c = 1; c <= al[r]; ++c) {
      int hook = (al[r] - c) + (conj[c - 1] - static_cast<int>(r) - 1) + 1;
      d *= Rational(m + c - 1 - static_cast<int>(r));
      d /= hook;
    }
  if (d.get_den() != 1) throw std::logic_error("hook_content_dimension: non-integer");
  return d.get_num();
}

}  // namespace weylpol
