#pragma once

#include <compare>
#include <map>
#include <vector>

#include "weylpol/rational.hpp"
#include "weylpol/shift.hpp"

namespace weylpol {

/// Monomial in N blocks of M variables: exponent e_{i,k} of variable k in
/// tensor slot i. Row-major storage, 1-based accessors.
struct Monomial {
  int n = 0, m = 0;
  std::vector<int> e;

  Monomial() = default;
  Monomial(int n_, int m_) : n(n_), m(m_), e(static_cast<size_t>(n_) * m_, 0) {}

  int exp(int i, int k) const { return e[static_cast<size_t>(i - 1) * m + (k - 1)]; }
  void set_exp(int i, int k, int v) { e[static_cast<size_t>(i - 1) * m + (k - 1)] = v; }
  int multidegree(int i) const;
  std::vector<int> multidegrees() const;
  /// Total degree of variable k across all slots (preserved by every
  /// polarization).
  std::vector<int> variable_weight() const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Exact-rational linear combination of monomials; elements of
/// S^{a_1}V ⊗ ... ⊗ S^{a_N}V for dim V = M. Zero coefficients are never
/// stored.
class SymTensor {
 public:
  SymTensor(int n, int m) : n_(n), m_(m) {}
  static SymTensor monomial(const Monomial& mo, const Rational& c = Rational(1));

  int n() const { return n_; }
  int m() const { return m_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& mo, const Rational& c);

  SymTensor& operator+=(const SymTensor& o);
  SymTensor& operator-=(const SymTensor& o);
  SymTensor& operator*=(const Rational& c);
  friend SymTensor operator+(SymTensor a, const SymTensor& b) { return a += b; }
  friend SymTensor operator-(SymTensor a, const SymTensor& b) { return a -= b; }
  friend SymTensor operator*(const Rational& c, SymTensor t) { return t *= c; }
  friend bool operator==(const SymTensor&, const SymTensor&) = default;

 private:
  int n_, m_;
  std::map<Monomial, Rational> terms_;
};

/// D_{i,j}: move one letter from slot j to slot i in all ways (i != j);
/// D_{i,i} multiplies by the slot-i multidegree.
SymTensor apply_elementary(int i, int j, const SymTensor& t);

/// Combinatorial Weyl polarization P(σ) (normalized): σ_{i,j} distinct
/// letters moved from slot j to slot i in all ways, no letter moved twice.
SymTensor apply_weyl(const ShiftMatrix& s, const SymTensor& t);

/// Differential Weyl polarization (1/σ!)·P0(σ), all derivatives applied
/// before all multiplications.
SymTensor apply_weyl_differential(const ShiftMatrix& s, const SymTensor& t);

/// Letter-level evaluation of P(σ) via explicit σ-selections. Slow;
/// retained as an independent oracle for small degrees.
SymTensor apply_weyl_by_selections(const ShiftMatrix& s, const SymTensor& t);

/// ∏_i C(a_i − Σ_{j≠i} σ_{j,i}, σ_{i,i}); relates P(σ) to P(reduced(σ)) on
/// the α-homogeneous component.
Integer diagonal_reduction_factor(const ShiftMatrix& s, const DegreeVector& alpha);

}  // namespace weylpol
