#include "weylpol/verma.hpp"

#include <stdexcept>

namespace weylpol {

bool VermaTriple::verma_condition() const {
  return lambda[i - 1] - lambda[j - 1] - i + j == r;
}

Rational vs_amplitude(const ShiftMatrix& s, const VermaTriple& tau) {
  if (!shift_subordinate(s, tau.i, tau.j, tau.r))
    throw std::invalid_argument("vs_amplitude: shift not subordinate to triple");
  Rational amp(factorial(tau.r));
  for (int k = tau.i + 1; k < tau.j; ++k) {
    int rk = route_flow(s, k);
    int sk = tau.r - rk;
    Rational top = tau.lambda[tau.i - 1] - tau.lambda[k - 1] - tau.i + k;
    amp *= Rational(factorial(rk) * factorial(sk)) * binomial_general(top, sk);
  }
  return amp;
}

PolarCombo vs_element(const VermaTriple& tau) {
  if (!tau.verma_condition())
    throw std::invalid_argument("vs_element: Verma condition violated");
  PolarCombo out(tau.n);
  for (const auto& s : term_set(tau.n, tau.i, tau.j, tau.r))
    out.add_term(s, vs_amplitude(s, tau));
  return out;
}

VermaTriple triple_from_arrow(const ArrowPair& a, const Rational& c) {
  VermaTriple tau;
  tau.n = a.source.n();
  tau.i = a.i;
  tau.j = a.j;
  tau.r = a.r;
  tau.lambda.resize(tau.n);
  for (int k = 1; k <= tau.n; ++k) tau.lambda[k - 1] = Rational(a.source(k) + k) + c;
  return tau;
}

namespace {

Rational amplitude_or_zero(const std::optional<ShiftMatrix>& s, const VermaTriple& tau) {
  if (!s || !shift_subordinate(*s, tau.i, tau.j, tau.r)) return Rational(0);
  return vs_amplitude(*s, tau);
}

}  // namespace

bool coefficient_identity_check(const VermaTriple& tau, int p) {
  if (p < tau.i || p > tau.j - 1)
    throw std::invalid_argument("coefficient_identity_check: p out of range");
  for (const auto& s : term_set(tau.n, tau.i, tau.j, tau.r)) {
    if (s(p + 1, p) < 1) continue;
    Rational a = (tau.lambda[p - 1] - tau.lambda[p] - s.col_sum(p) + s.col_sum(p + 1) + 1) *
                 vs_amplitude(s, tau);
    Rational b(0);
    for (int k = tau.i; k < p; ++k)
      b += s(p, k) *
           amplitude_or_zero(adjusted(s, {{p + 1, k, 1}, {p, k, -1}, {p + 1, p, -1}}), tau);
    Rational c(0);
    for (int k = p + 2; k <= tau.j; ++k)
      c -= s(k, p + 1) *
           amplitude_or_zero(adjusted(s, {{k, p, 1}, {k, p + 1, -1}, {p + 1, p, -1}}), tau);
    if (a + b + c != 0) return false;
  }
  return true;
}

bool weight_check(const VermaTriple& tau) {
  std::vector<int> want(tau.n, 0);
  want[tau.i - 1] = -tau.r;
  want[tau.j - 1] = tau.r;
  for (const auto& s : term_set(tau.n, tau.i, tau.j, tau.r))
    if (weight_vector(s) != want) return false;
  return true;
}

}  // namespace weylpol
