#pragma once

#include <map>
#include <vector>

#include "weylpol/rational.hpp"
#include "weylpol/shift.hpp"
#include "weylpol/symtensor.hpp"
#include "weylpol/verma.hpp"
#include "weylpol/weyl_ops.hpp"

namespace weylpol {

/// Total order on the n² generators E_{i,j} of gl_n: lowering (i > j) first,
/// then Cartan, then raising. The order within the lowering group is a
/// parameter.
struct GeneratorOrder {
  int n = 0;
  std::vector<std::pair<int, int>> gens;

  /// Lowering generators in lexicographic order: E_{2,1}, E_{3,1}, E_{3,2}, ...
  static GeneratorOrder standard(int n);
  /// Reversed lowering order; used to test order-independence.
  static GeneratorOrder reversed_lowering(int n);

  int index(int i, int j) const;
  friend bool operator==(const GeneratorOrder&, const GeneratorOrder&) = default;
};

/// Element of the enveloping algebra of gl_n in PBW normal form: map from
/// exponent vectors (over the ordered generators) to coefficients.
struct UElement {
  int n = 0;
  GeneratorOrder order;
  std::map<std::vector<int>, Rational> terms;

  explicit UElement(GeneratorOrder o = {}) : n(o.n), order(std::move(o)) {}
  static UElement one(const GeneratorOrder& o);

  bool is_zero() const { return terms.empty(); }
  void add_term(const std::vector<int>& mono, const Rational& c);
  UElement& operator+=(const UElement& o);
  UElement& operator*=(const Rational& c);
  friend UElement operator+(UElement a, const UElement& b) { return a += b; }
  friend UElement operator*(const Rational& c, UElement u) { return u *= c; }
  friend bool operator==(const UElement&, const UElement&) = default;
};

/// Vector in the Verma module V_λ: combination of lowering-only PBW
/// monomials applied to the highest-weight vector.
struct VermaVector {
  int n = 0;
  GeneratorOrder order;
  std::vector<Rational> lambda;
  std::map<std::vector<int>, Rational> terms;

  static VermaVector highest_weight(const GeneratorOrder& o, std::vector<Rational> lambda);
  bool is_zero() const { return terms.empty(); }
  void add_term(const std::vector<int>& mono, const Rational& c);
  friend bool operator==(const VermaVector&, const VermaVector&) = default;
};

/// E_{i,j} · u, renormalized to PBW normal form.
UElement left_mul_generator(int i, int j, const UElement& u);

/// Normal form of a word in the generators.
UElement straighten(const ElementaryWord& w, const GeneratorOrder& order);

/// The element of the enveloping algebra acting as P(σ); lowering-only when
/// σ is strictly lower-triangular. Memoized.
UElement polar_to_pbw(const ShiftMatrix& s, const GeneratorOrder& order);

UElement combo_to_pbw(const PolarCombo& c, const GeneratorOrder& order);

/// The PBW monomial F_σ (exponent σ_{i,j} on each lowering E_{i,j}).
std::vector<int> pbw_monomial(const ShiftMatrix& s, const GeneratorOrder& order);

/// Action on the Verma module: straighten, kill raising monomials, evaluate
/// Cartan exponents at λ.
VermaVector act_on_verma(const UElement& u, const VermaVector& v);

/// Evaluate a PBW element on a tensor through the polarization action.
SymTensor apply_uelement(const UElement& u, const SymTensor& t);

/// True iff c·v_λ is a vector of weight λ − r(e_i − e_j) annihilated by
/// every simple raising generator.
bool singular_check(const PolarCombo& c, const VermaTriple& tau);

/// Coefficient of F_{σ0(i,j,r)} in combo_to_pbw(c, order).
Rational shapovalov_coefficient(const PolarCombo& c, int i, int j, int r,
                                const GeneratorOrder& order);

/// True iff polar_to_pbw(σ) has coefficient 1/σ! on F_σ and all other terms
/// have strictly smaller filtration weight.
bool leading_coefficient_check(const ShiftMatrix& s, const GeneratorOrder& order);

}  // namespace weylpol
