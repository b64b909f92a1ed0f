#pragma once

#include <map>
#include <vector>

#include "weylpol/bruhat.hpp"
#include "weylpol/rational.hpp"
#include "weylpol/shift.hpp"
#include "weylpol/symtensor.hpp"
#include "weylpol/weyl_ops.hpp"

namespace weylpol {

/// One term S^{b_1}V ⊗ ... ⊗ S^{b_N}V of the complex, with
/// b_k = a_k − k + π(k). The term is the zero space iff some b_k < 0.
struct ZelTerm {
  Permutation pi;
  DegreeVector alpha;
  std::vector<int> b;

  ZelTerm() = default;
  ZelTerm(const Permutation& p, const DegreeVector& a);
  bool is_zero_space() const;
  Integer dimension(int m) const;
  /// All monomials with multidegrees b, in lexicographic exponent order.
  std::vector<Monomial> basis(int m) const;
};

/// Sparse exact-rational matrix.
struct RationalMatrix {
  int rows = 0, cols = 0;
  std::map<std::pair<int, int>, Rational> entries;

  RationalMatrix() = default;
  RationalMatrix(int r, int c) : rows(r), cols(c) {}
  void add(int r, int c, const Rational& v);
  Rational at(int r, int c) const;
  bool is_zero() const { return entries.empty(); }
};

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);
/// Rank by fraction-free Bareiss elimination after clearing denominators.
int rank(const RationalMatrix& a);

struct ZelComplex {
  int n = 0, m = 0;
  DegreeVector alpha;
  SignatureTable sgn;
  std::vector<std::vector<ZelTerm>> levels;
  std::map<std::pair<Permutation, Permutation>, PolarCombo> blocks;

  Integer level_dimension(int k) const;
};

/// ⟨σ; π, π′⟩ = r!·∏_{k=i+1}^{j−1} R_k!·(r−R_k)!·C(π(i)−π(k), r−R_k).
Integer zel_amplitude(const ShiftMatrix& s, const ArrowPair& a);

/// sgn(a)·Σ_{σ ∈ TERM(i,j,r)} ⟨σ; a⟩·P(σ). Does not depend on α.
PolarCombo differential_block(const ArrowPair& a, const SignatureTable& sgn);

ZelComplex build_complex(const DegreeVector& alpha, int m, const SignatureTable& sgn);

/// Matrix of d_k : level k → level k−1 in the canonical bases (terms in
/// level order, monomials lexicographic).
RationalMatrix realize_matrix(const ZelComplex& c, int k);

/// True iff realize(d_k)·realize(d_{k+1}) = 0 for all k, checked blockwise
/// per conserved variable weight.
bool check_dd_zero(const ZelComplex& c);

/// Homology dimensions H_0..H_{C(n,2)}, by exact blockwise rank computation.
std::vector<Integer> homology_dims(const ZelComplex& c);

/// det C(a_i − i + j + M − 1, M − 1): the Schur polynomial s_α at
/// x = (1,...,1) via Jacobi–Trudi.
Integer schur_dimension_oracle(const DegreeVector& alpha, int m);

/// Hook-content product formula; valid for partitions only.
Integer hook_content_dimension(const DegreeVector& alpha, int m);

}  // namespace weylpol
