#pragma once

#include <compare>
#include <initializer_list>
#include <optional>
#include <tuple>
#include <vector>

#include "weylpol/rational.hpp"

namespace weylpol {

/// An N x N matrix of nonnegative integers (an N-shift). Indices are
/// 1-based throughout the public surface. Values are immutable by
/// convention: every operation returns a fresh matrix.
class ShiftMatrix {
 public:
  explicit ShiftMatrix(int n) : n_(n), e_(static_cast<size_t>(n) * n, 0) {
    if (n < 1) throw std::invalid_argument("ShiftMatrix: n must be >= 1");
  }
  ShiftMatrix(int n, const std::vector<std::vector<int>>& rows);

  /// E_{i,j} scaled by c (c >= 0).
  static ShiftMatrix unit(int n, int i, int j, int c = 1);

  int n() const { return n_; }
  int operator()(int i, int j) const { return e_[idx(i, j)]; }
  void set(int i, int j, int v);

  int row_sum(int i) const;
  int col_sum(int j) const;

  std::vector<std::vector<int>> rows() const;

  friend auto operator<=>(const ShiftMatrix& a, const ShiftMatrix& b) = default;

 private:
  size_t idx(int i, int j) const;
  int n_;
  std::vector<int> e_;  // row-major
};

/// σ + Σ c·E_{i,j}; absent if any entry would go negative (the
/// "P(σ')=0 for non-effective σ'" convention lives at the call sites).
std::optional<ShiftMatrix> adjusted(
    const ShiftMatrix& s, std::initializer_list<std::tuple<int, int, int>> deltas);

struct DegreeVector {
  std::vector<int> degrees;  // a_1..a_N, negative allowed (zero space)
  int n() const { return static_cast<int>(degrees.size()); }
  friend auto operator<=>(const DegreeVector&, const DegreeVector&) = default;
};

/// A σ-selection: pairwise-disjoint subsets C_{i,j} ⊆ {1..a_j} per column j,
/// with |C_{i,j}| = σ_{i,j}.
struct SelectionFamily {
  int n = 0;
  // sets[i-1][j-1] = sorted C_{i,j}
  std::vector<std::vector<std::vector<int>>> sets;
  friend bool operator==(const SelectionFamily&, const SelectionFamily&) = default;
};

Integer shift_factorial(const ShiftMatrix& s);
std::vector<int> weight_vector(const ShiftMatrix& s);
int total_weight(const ShiftMatrix& s);
ShiftMatrix reduced(const ShiftMatrix& s);

/// TERM(i,j,r): all N-shifts supported on i <= q < p <= j with column-i sum r
/// and flow conservation at every k strictly between i and j.
/// Canonical row-major lexicographic order.
std::vector<ShiftMatrix> term_set(int n, int i, int j, int r);

/// True iff s belongs to term_set(n, i, j, r).
bool shift_subordinate(const ShiftMatrix& s, int i, int j, int r);

/// Common value R_k(σ) of the column-k and row-k sums; throws if they differ.
int route_flow(const ShiftMatrix& s, int k);

Integer selection_count(const ShiftMatrix& s, const DegreeVector& alpha);
std::vector<SelectionFamily> enumerate_selections(const ShiftMatrix& s,
                                                  const DegreeVector& alpha);

/// σ0 = r·(E_{i+1,i} + ... + E_{j,j-1}), the maximal-weight member of
/// TERM(i,j,r).
ShiftMatrix sigma_zero(int n, int i, int j, int r);

}  // namespace weylpol
