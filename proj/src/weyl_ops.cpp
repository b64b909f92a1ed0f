#include "weylpol/weyl_ops.hpp"

#include <stdexcept>

namespace weylpol {

PolarCombo PolarCombo::single(const ShiftMatrix& s, const Rational& c) {
  PolarCombo p(s.n());
  p.add_term(s, c);
  return p;
}

void PolarCombo::add_term(const ShiftMatrix& s, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(s);
  if (it == terms_.end()) {
    terms_.emplace(s, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

PolarCombo& PolarCombo::operator+=(const PolarCombo& o) {
  for (const auto& [s, c] : o.terms_) add_term(s, c);
  return *this;
}

PolarCombo& PolarCombo::operator-=(const PolarCombo& o) {
  for (const auto& [s, c] : o.terms_) add_term(s, -c);
  return *this;
}

PolarCombo& PolarCombo::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, v] : terms_) v *= c;
  return *this;
}

PolarCombo left_mul_elementary(int i, int j, const PolarCombo& p) {
  PolarCombo out(p.n());
  for (const auto& [s, c] : p.terms()) {
    if (i == j) {
      // D_{i,i}P(σ) = (σ_{i,i}+1)P(σ+E_{i,i}) + (Σ_k σ_{i,k})P(σ)
      ShiftMatrix up = s;
      up.set(i, i, s(i, i) + 1);
      out.add_term(up, c * (s(i, i) + 1));
      out.add_term(s, c * s.row_sum(i));
      continue;
    }
    // D_{i,j}P(σ) = (σ_{i,j}+1)P(σ+E_{i,j})
    //             + Σ_k (σ_{i,k}+1)P(σ + E_{i,k} − E_{j,k})
    ShiftMatrix up = s;
    up.set(i, j, s(i, j) + 1);
    out.add_term(up, c * (s(i, j) + 1));
    for (int k = 1; k <= s.n(); ++k) {
      auto adj = adjusted(s, {{i, k, 1}, {j, k, -1}});
      if (adj) out.add_term(*adj, c * (s(i, k) + 1));
    }
  }
  return out;
}

PolarCombo right_mul_elementary(const PolarCombo& p, int i, int j) {
  PolarCombo out(p.n());
  for (const auto& [s, c] : p.terms()) {
    if (i == j) {
      // P(σ)D_{i,i} = (σ_{i,i}+1)P(σ+E_{i,i}) + (Σ_k σ_{k,i})P(σ)
      ShiftMatrix up = s;
      up.set(i, i, s(i, i) + 1);
      out.add_term(up, c * (s(i, i) + 1));
      out.add_term(s, c * s.col_sum(i));
      continue;
    }
    // P(σ)D_{i,j} = (σ_{i,j}+1)P(σ+E_{i,j})
    //             + Σ_k (σ_{k,j}+1)P(σ + E_{k,j} − E_{k,i})
    ShiftMatrix up = s;
    up.set(i, j, s(i, j) + 1);
    out.add_term(up, c * (s(i, j) + 1));
    for (int k = 1; k <= s.n(); ++k) {
      auto adj = adjusted(s, {{k, j, 1}, {k, i, -1}});
      if (adj) out.add_term(*adj, c * (s(k, j) + 1));
    }
  }
  return out;
}

PolarCombo commutator_elementary(int p, int q, const PolarCombo& c) {
  return left_mul_elementary(p, q, c) - right_mul_elementary(c, p, q);
}

PolarCombo word_to_combo(const ElementaryWord& w) {
  if (w.n <= 0) throw std::invalid_argument("word_to_combo: n must be positive");
  PolarCombo p = PolarCombo::identity(w.n);
  for (auto it = w.factors.rbegin(); it != w.factors.rend(); ++it)
    p = left_mul_elementary(it->first, it->second, p);
  return p;
}

SymTensor apply_combo(const PolarCombo& p, const SymTensor& t) {
  SymTensor out(t.n(), t.m());
  for (const auto& [s, c] : p.terms()) out += c * apply_weyl(s, t);
  return out;
}

}  // namespace weylpol
