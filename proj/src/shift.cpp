#include "weylpol/shift.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace weylpol {

ShiftMatrix::ShiftMatrix(int n, const std::vector<std::vector<int>>& rows)
    : ShiftMatrix(n) {
  if (static_cast<int>(rows.size()) != n)
    throw std::invalid_argument("ShiftMatrix: wrong row count");
  for (int i = 1; i <= n; ++i) {
    if (static_cast<int>(rows[i - 1].size()) != n)
      throw std::invalid_argument("ShiftMatrix: wrong column count");
    for (int j = 1; j <= n; ++j) set(i, j, rows[i - 1][j - 1]);
  }
}

ShiftMatrix ShiftMatrix::unit(int n, int i, int j, int c) {
  ShiftMatrix s(n);
  s.set(i, j, c);
  return s;
}

size_t ShiftMatrix::idx(int i, int j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_)
    throw std::invalid_argument("ShiftMatrix: index out of range");
  return static_cast<size_t>(i - 1) * n_ + (j - 1);
}

void ShiftMatrix::set(int i, int j, int v) {
  if (v < 0) throw std::invalid_argument("ShiftMatrix: negative entry");
  e_[idx(i, j)] = v;
}

int ShiftMatrix::row_sum(int i) const {
  int s = 0;
  for (int j = 1; j <= n_; ++j) s += (*this)(i, j);
  return s;
}

int ShiftMatrix::col_sum(int j) const {
  int s = 0;
  for (int i = 1; i <= n_; ++i) s += (*this)(i, j);
  return s;
}

std::vector<std::vector<int>> ShiftMatrix::rows() const {
  std::vector<std::vector<int>> r(n_, std::vector<int>(n_));
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j) r[i - 1][j - 1] = (*this)(i, j);
  return r;
}

std::optional<ShiftMatrix> adjusted(
    const ShiftMatrix& s, std::initializer_list<std::tuple<int, int, int>> deltas) {
  auto rows = s.rows();
  for (auto [i, j, c] : deltas) {
    rows[i - 1][j - 1] += c;
    if (rows[i - 1][j - 1] < 0) return std::nullopt;
  }
  return ShiftMatrix(s.n(), rows);
}

Integer shift_factorial(const ShiftMatrix& s) {
  Integer r(1);
  for (int i = 1; i <= s.n(); ++i)
    for (int j = 1; j <= s.n(); ++j) r *= factorial(s(i, j));
  return r;
}

std::vector<int> weight_vector(const ShiftMatrix& s) {
  std::vector<int> w(s.n());
  for (int i = 1; i <= s.n(); ++i) w[i - 1] = s.row_sum(i) - s.col_sum(i);
  return w;
}

int total_weight(const ShiftMatrix& s) {
  int t = 0;
  for (int i = 1; i <= s.n(); ++i) t += s.row_sum(i);
  return t;
}

ShiftMatrix reduced(const ShiftMatrix& s) {
  ShiftMatrix r = s;
  for (int i = 1; i <= s.n(); ++i) r.set(i, i, 0);
  return r;
}

namespace {

// Enumerate compositions of `total` into `parts` nonnegative summands.
void compositions(int total, int parts, std::vector<int>& cur,
                  const std::function<void(const std::vector<int>&)>& emit) {
  if (parts == 1) {
    cur.push_back(total);
    emit(cur);
    cur.pop_back();
    return;
  }
  for (int v = 0; v <= total; ++v) {
    cur.push_back(v);
    compositions(total - v, parts - 1, cur, emit);
    cur.pop_back();
  }
}

void term_set_rec(int n, int i, int j, int k, int inflow, ShiftMatrix& acc,
                  std::vector<ShiftMatrix>& out) {
  if (k == j) {
    out.push_back(acc);
    return;
  }
  // Column k carries `inflow` units into rows k+1..j; whatever lands on row
  // l < j flows onward out of node l.
  int rows = j - k;
  std::vector<int> cur;
  compositions(inflow, rows, cur, [&](const std::vector<int>& c) {
    for (int t = 0; t < rows; ++t) acc.set(k + 1 + t, k, c[t]);
    // Inflow of node k+1 = everything routed into row k+1 from columns i..k.
    int next_in = 0;
    for (int q = i; q <= k; ++q) next_in += acc(k + 1, q);
    term_set_rec(n, i, j, k + 1, next_in, acc, out);
    for (int t = 0; t < rows; ++t) acc.set(k + 1 + t, k, 0);
  });
}

}  // namespace

std::vector<ShiftMatrix> term_set(int n, int i, int j, int r) {
  if (!(1 <= i && i < j && j <= n))
    throw std::invalid_argument("term_set: need 1 <= i < j <= n");
  if (r < 1) throw std::invalid_argument("term_set: need r >= 1");
  std::vector<ShiftMatrix> out;
  ShiftMatrix acc(n);
  term_set_rec(n, i, j, i, r, acc, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool shift_subordinate(const ShiftMatrix& s, int i, int j, int r) {
  for (int p = 1; p <= s.n(); ++p)
    for (int q = 1; q <= s.n(); ++q)
      if (s(p, q) != 0 && !(i <= q && q < p && p <= j)) return false;
  if (s.col_sum(i) != r) return false;
  for (int k = i + 1; k < j; ++k)
    if (s.row_sum(k) != s.col_sum(k)) return false;
  return true;
}

int route_flow(const ShiftMatrix& s, int k) {
  int in = s.col_sum(k), out = s.row_sum(k);
  if (in != out) throw std::logic_error("route_flow: unbalanced at k");
  return in;
}

Integer selection_count(const ShiftMatrix& s, const DegreeVector& alpha) {
  if (alpha.n() != s.n())
    throw std::invalid_argument("selection_count: size mismatch");
  Integer total(1);
  for (int i = 1; i <= s.n(); ++i) {
    int a = alpha.degrees[i - 1];
    if (a < 0) throw std::invalid_argument("selection_count: negative degree");
    int used = s.col_sum(i);
    if (used > a) return Integer(0);
    Integer col = factorial(a);
    for (int j = 1; j <= s.n(); ++j) col /= factorial(s(j, i));
    col /= factorial(a - used);
    total *= col;
  }
  return total;
}

namespace {

// All ways to pick disjoint subsets of sizes szs[0..] from `pool`.
void pick_disjoint(const std::vector<int>& pool, const std::vector<int>& szs,
                   size_t which, std::vector<std::vector<int>>& acc,
                   const std::function<void(const std::vector<std::vector<int>>&)>& emit) {
  if (which == szs.size()) {
    emit(acc);
    return;
  }
  int sz = szs[which];
  std::vector<int> idx(sz);
  // choose sz elements of pool (combinations by index)
  std::function<void(int, int)> choose = [&](int start, int got) {
    if (got == sz) {
      std::vector<int> chosen, rest;
      std::vector<bool> mark(pool.size(), false);
      for (int t = 0; t < sz; ++t) mark[idx[t]] = true;
      for (size_t p = 0; p < pool.size(); ++p)
        (mark[p] ? chosen : rest).push_back(pool[p]);
      acc.push_back(chosen);
      pick_disjoint(rest, szs, which + 1, acc, emit);
      acc.pop_back();
      return;
    }
    for (int p = start; p <= static_cast<int>(pool.size()) - (sz - got); ++p) {
      idx[got] = p;
      choose(p + 1, got + 1);
    }
  };
  if (sz > static_cast<int>(pool.size())) return;
  choose(0, 0);
}

}  // namespace

std::vector<SelectionFamily> enumerate_selections(const ShiftMatrix& s,
                                                  const DegreeVector& alpha) {
  if (alpha.n() != s.n())
    throw std::invalid_argument("enumerate_selections: size mismatch");
  const int n = s.n();
  // Column by column: the column-j selection is independent of the others.
  std::vector<std::vector<std::vector<std::vector<int>>>> per_col(n);
  for (int j = 1; j <= n; ++j) {
    int a = alpha.degrees[j - 1];
    if (a < 0) throw std::invalid_argument("enumerate_selections: negative degree");
    std::vector<int> pool(a);
    for (int t = 0; t < a; ++t) pool[t] = t + 1;
    std::vector<int> szs(n);
    for (int i = 1; i <= n; ++i) szs[i - 1] = s(i, j);
    std::vector<std::vector<int>> acc;
    pick_disjoint(pool, szs, 0, acc, [&](const std::vector<std::vector<int>>& c) {
      per_col[j - 1].push_back(c);
    });
  }
  std::vector<SelectionFamily> out;
  std::vector<size_t> pos(n, 0);
  for (int j = 0; j < n; ++j)
    if (per_col[j].empty()) return out;
  while (true) {
    SelectionFamily f;
    f.n = n;
    f.sets.assign(n, std::vector<std::vector<int>>(n));
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) f.sets[i][j] = per_col[j][pos[j]][i];
    out.push_back(std::move(f));
    int j = n - 1;
    while (j >= 0 && ++pos[j] == per_col[j].size()) pos[j--] = 0;
    if (j < 0) break;
  }
  return out;
}

ShiftMatrix sigma_zero(int n, int i, int j, int r) {
  if (!(1 <= i && i < j && j <= n))
    throw std::invalid_argument("sigma_zero: need 1 <= i < j <= n");
  if (r < 1) throw std::invalid_argument("sigma_zero: need r >= 1");
  ShiftMatrix s(n);
  for (int k = i; k < j; ++k) s.set(k + 1, k, r);
  return s;
}

}  // namespace weylpol
