#pragma once

#include <map>
#include <vector>

#include "weylpol/rational.hpp"
#include "weylpol/shift.hpp"
#include "weylpol/symtensor.hpp"

namespace weylpol {

/// Formal rational combination of normalized Weyl polarizations P(σ),
/// closed under multiplication by elementary polarizations on either side.
class PolarCombo {
 public:
  explicit PolarCombo(int n) : n_(n) {}
  static PolarCombo identity(int n) { return single(ShiftMatrix(n)); }
  static PolarCombo single(const ShiftMatrix& s, const Rational& c = Rational(1));

  int n() const { return n_; }
  const std::map<ShiftMatrix, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const ShiftMatrix& s, const Rational& c);

  PolarCombo& operator+=(const PolarCombo& o);
  PolarCombo& operator-=(const PolarCombo& o);
  PolarCombo& operator*=(const Rational& c);
  friend PolarCombo operator+(PolarCombo a, const PolarCombo& b) { return a += b; }
  friend PolarCombo operator-(PolarCombo a, const PolarCombo& b) { return a -= b; }
  friend PolarCombo operator*(const Rational& c, PolarCombo p) { return p *= c; }
  friend bool operator==(const PolarCombo&, const PolarCombo&) = default;

 private:
  int n_;
  std::map<ShiftMatrix, Rational> terms_;
};

/// Word in elementary polarizations, leftmost factor first.
struct ElementaryWord {
  int n = 0;
  std::vector<std::pair<int, int>> factors;
};

/// D_{i,j} · combo, expanded into normalized polarizations.
PolarCombo left_mul_elementary(int i, int j, const PolarCombo& p);

/// combo · D_{i,j}.
PolarCombo right_mul_elementary(const PolarCombo& p, int i, int j);

/// [D_{p,q}, combo] = left_mul − right_mul.
PolarCombo commutator_elementary(int p, int q, const PolarCombo& c);

/// Expand a word D_{i1,j1}···D_{ir,jr} into normalized polarizations.
PolarCombo word_to_combo(const ElementaryWord& w);

/// Evaluate a combination on a tensor using the combinatorial action.
SymTensor apply_combo(const PolarCombo& p, const SymTensor& t);

}  // namespace weylpol
