#pragma once

#include <vector>

#include "weylpol/bruhat.hpp"
#include "weylpol/rational.hpp"
#include "weylpol/shift.hpp"
#include "weylpol/weyl_ops.hpp"

namespace weylpol {

/// Verma triple for A_{n-1}: positive root λ_i − λ_j, positive integer r,
/// and a highest weight λ = (l_1,...,l_n) with l_i − l_j − i + j = r.
struct VermaTriple {
  int n = 0;
  int i = 0, j = 0;
  int r = 0;
  std::vector<Rational> lambda;

  bool verma_condition() const;
};

/// ⟨σ; τ⟩ = r!·∏_{k=i+1}^{j−1} R_k!·S_k!·C(l_i − l_k − i + k, S_k) with
/// S_k = r − R_k.
Rational vs_amplitude(const ShiftMatrix& s, const VermaTriple& tau);

/// The Verma–Shapovalov element Σ_{σ ∈ TERM(i,j,r)} ⟨σ;τ⟩·P(σ).
PolarCombo vs_element(const VermaTriple& tau);

/// Verma triple with l_k = π(k) + k + c; its amplitudes equal the
/// zel amplitudes of the arrow for every subordinate shift.
VermaTriple triple_from_arrow(const ArrowPair& a, const Rational& c);

/// Checks A_p(σ) + B_p(σ) + C_p(σ) = 0 for every σ in TERM(i,j,r) with
/// σ_{p+1,p} >= 1.
bool coefficient_identity_check(const VermaTriple& tau, int p);

/// True iff every member of TERM(i,j,r) has weight −r(e_i − e_j).
bool weight_check(const VermaTriple& tau);

}  // namespace weylpol
