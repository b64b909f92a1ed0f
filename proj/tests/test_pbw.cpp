#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "weylpol/pbw.hpp"
#include "weylpol/zelevinsky.hpp"

using namespace weylpol;

namespace {

SymTensor random_tensor(std::mt19937_64& rng, int n, int m, int maxdeg, int nterms) {
  SymTensor t(n, m);
  for (int q = 0; q < nterms; ++q) {
    Monomial mo(n, m);
    for (int i = 1; i <= n; ++i)
      for (int k = 1; k <= m; ++k) mo.set_exp(i, k, static_cast<int>(rng() % (maxdeg + 1)));
    long c = static_cast<long>(rng() % 11) - 5;
    t.add_term(mo, Rational(c == 0 ? 1 : c));
  }
  return t;
}

ShiftMatrix random_shift(std::mt19937_64& rng, int n, int maxweight) {
  ShiftMatrix s(n);
  int w = static_cast<int>(rng() % (maxweight + 1));
  for (int t = 0; t < w; ++t) {
    int i = 1 + static_cast<int>(rng() % n), j = 1 + static_cast<int>(rng() % n);
    s.set(i, j, s(i, j) + 1);
  }
  return s;
}

ShiftMatrix random_lower_shift(std::mt19937_64& rng, int n, int maxweight) {
  ShiftMatrix s(n);
  int w = static_cast<int>(rng() % maxweight) + 1;
  for (int t = 0; t < w; ++t) {
    int i = 2 + static_cast<int>(rng() % (n - 1));
    int j = 1 + static_cast<int>(rng() % (i - 1));
    s.set(i, j, s(i, j) + 1);
  }
  return s;
}

UElement generator(const GeneratorOrder& o, int i, int j) {
  return straighten(ElementaryWord{o.n, {{i, j}}}, o);
}

}  // namespace

TEST_CASE("generator orders") {
  GeneratorOrder o = GeneratorOrder::standard(3);
  REQUIRE(static_cast<int>(o.gens.size()) == 9);
  CHECK(o.gens[0] == std::pair<int, int>{2, 1});
  CHECK(o.gens[1] == std::pair<int, int>{3, 1});
  CHECK(o.gens[2] == std::pair<int, int>{3, 2});
  CHECK(o.gens[3] == std::pair<int, int>{1, 1});
  CHECK(o.index(3, 2) == 2);
  GeneratorOrder r = GeneratorOrder::reversed_lowering(3);
  CHECK(r.gens[0] == std::pair<int, int>{3, 2});
  CHECK(r.gens[2] == std::pair<int, int>{2, 1});
  CHECK(r.gens[3] == std::pair<int, int>{1, 1});
}

TEST_CASE("straighten fixtures") {
  GeneratorOrder o = GeneratorOrder::standard(3);
  // E_{2,3}E_{3,2} = E_{3,2}E_{2,3} + E_{2,2} - E_{3,3}
  UElement got = straighten(ElementaryWord{3, {{2, 3}, {3, 2}}}, o);
  UElement want = UElement::one(o);
  want.terms.clear();
  std::vector<int> m1(9, 0);
  m1[o.index(3, 2)] = 1;
  m1[o.index(2, 3)] = 1;
  want.add_term(m1, Rational(1));
  std::vector<int> m2(9, 0);
  m2[o.index(2, 2)] = 1;
  want.add_term(m2, Rational(1));
  std::vector<int> m3(9, 0);
  m3[o.index(3, 3)] = 1;
  want.add_term(m3, Rational(-1));
  CHECK(got == want);

  // Already-sorted words are untouched.
  UElement sorted = straighten(ElementaryWord{3, {{2, 1}, {3, 2}}}, o);
  std::vector<int> ms(9, 0);
  ms[o.index(2, 1)] = 1;
  ms[o.index(3, 2)] = 1;
  REQUIRE(sorted.terms.size() == 1);
  CHECK(sorted.terms.at(ms) == 1);

  CHECK(straighten(ElementaryWord{3, {}}, o) == UElement::one(o));
}

TEST_CASE("straighten is sound on the tensor representation") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);
    GeneratorOrder o = (trial % 2 == 0) ? GeneratorOrder::standard(n)
                                        : GeneratorOrder::reversed_lowering(n);
    int len = 1 + static_cast<int>(rng() % 4);
    ElementaryWord w{n, {}};
    for (int q = 0; q < len; ++q)
      w.factors.push_back({1 + static_cast<int>(rng() % n), 1 + static_cast<int>(rng() % n)});
    SymTensor t = random_tensor(rng, n, 2, 2, 2);
    SymTensor direct = t;
    for (auto it = w.factors.rbegin(); it != w.factors.rend(); ++it)
      direct = apply_elementary(it->first, it->second, direct);
    CHECK(apply_uelement(straighten(w, o), t) == direct);
  }
}

TEST_CASE("polar_to_pbw fixtures") {
  GeneratorOrder o = GeneratorOrder::standard(3);
  // P(2E_{2,1}) = (1/2)·E_{2,1}²
  UElement got = polar_to_pbw(ShiftMatrix::unit(3, 2, 1, 2), o);
  std::vector<int> m(9, 0);
  m[o.index(2, 1)] = 2;
  REQUIRE(got.terms.size() == 1);
  CHECK(got.terms.at(m) == Rational(1) / 2);

  // P(E_{2,1}+E_{3,2}) = E_{2,1}E_{3,2} as a single normal monomial.
  ShiftMatrix s(3);
  s.set(2, 1, 1);
  s.set(3, 2, 1);
  got = polar_to_pbw(s, o);
  std::vector<int> m2(9, 0);
  m2[o.index(2, 1)] = 1;
  m2[o.index(3, 2)] = 1;
  REQUIRE(got.terms.size() == 1);
  CHECK(got.terms.at(m2) == 1);

  CHECK(polar_to_pbw(ShiftMatrix(3), o) == UElement::one(o));
}

TEST_CASE("polar_to_pbw is sound on the tensor representation") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + static_cast<int>(rng() % 2);
    GeneratorOrder o = (trial % 2 == 0) ? GeneratorOrder::standard(n)
                                        : GeneratorOrder::reversed_lowering(n);
    ShiftMatrix s = random_shift(rng, n, 3);
    SymTensor t = random_tensor(rng, n, 2, 2, 2);
    CHECK(apply_uelement(polar_to_pbw(s, o), t) == apply_weyl(s, t));
  }
}

TEST_CASE("combo_to_pbw of the n=3 skip block") {
  GeneratorOrder o = GeneratorOrder::standard(3);
  // P(E_{3,1}) - P(E_{2,1}+E_{3,2}) = E_{3,1} - E_{2,1}E_{3,2}
  PolarCombo c(3);
  c.add_term(ShiftMatrix::unit(3, 3, 1), Rational(1));
  ShiftMatrix s(3);
  s.set(2, 1, 1);
  s.set(3, 2, 1);
  c.add_term(s, Rational(-1));
  UElement got = combo_to_pbw(c, o);
  std::vector<int> m1(9, 0), m2(9, 0);
  m1[o.index(3, 1)] = 1;
  m2[o.index(2, 1)] = 1;
  m2[o.index(3, 2)] = 1;
  REQUIRE(got.terms.size() == 2);
  CHECK(got.terms.at(m1) == 1);
  CHECK(got.terms.at(m2) == -1);
}

TEST_CASE("pbw_monomial") {
  GeneratorOrder o = GeneratorOrder::standard(3);
  ShiftMatrix s(3);
  s.set(2, 1, 2);
  s.set(3, 1, 1);
  auto m = pbw_monomial(s, o);
  CHECK(m[o.index(2, 1)] == 2);
  CHECK(m[o.index(3, 1)] == 1);
  CHECK_THROWS(pbw_monomial(ShiftMatrix::unit(3, 1, 2), o));
  CHECK_THROWS(pbw_monomial(ShiftMatrix::unit(3, 1, 1), o));
}

TEST_CASE("action on the Verma module") {
  GeneratorOrder o = GeneratorOrder::standard(3);
  std::vector<Rational> lambda = {Rational(3), Rational(5), Rational(4)};
  VermaVector v = VermaVector::highest_weight(o, lambda);

  // E_{1,2}E_{2,1}·v = (l_1 - l_2)·v
  UElement u = straighten(ElementaryWord{3, {{1, 2}, {2, 1}}}, o);
  VermaVector got = act_on_verma(u, v);
  VermaVector want = VermaVector::highest_weight(o, lambda);
  want.terms.clear();
  want.add_term(std::vector<int>(9, 0), lambda[0] - lambda[1]);
  CHECK(got == want);

  // E_{2,3}E_{3,2}²·v = 2(l_2 - l_3 - 1)·E_{3,2}·v
  UElement u2 = straighten(ElementaryWord{3, {{2, 3}, {3, 2}, {3, 2}}}, o);
  VermaVector got2 = act_on_verma(u2, v);
  VermaVector want2 = VermaVector::highest_weight(o, lambda);
  want2.terms.clear();
  std::vector<int> f32(9, 0);
  f32[o.index(3, 2)] = 1;
  want2.add_term(f32, (lambda[1] - lambda[2] - 1) * 2);
  CHECK(got2 == want2);

  // Raising generators kill the highest-weight vector.
  CHECK(act_on_verma(generator(o, 1, 2), v).is_zero());
  CHECK(act_on_verma(generator(o, 2, 3), v).is_zero());
  // Cartan generators scale it.
  VermaVector h = act_on_verma(generator(o, 2, 2), v);
  REQUIRE(h.terms.size() == 1);
  CHECK(h.terms.at(std::vector<int>(9, 0)) == lambda[1]);
}

TEST_CASE("singular vectors") {
  VermaTriple t131;
  t131.n = 3;
  t131.i = 1;
  t131.j = 3;
  t131.r = 1;
  t131.lambda = {Rational(3), Rational(5), Rational(4)};
  CHECK(singular_check(vs_element(t131), t131));

  // A perturbed combination is not singular.
  PolarCombo wrong = vs_element(t131);
  wrong.add_term(ShiftMatrix::unit(3, 3, 1), Rational(1));
  CHECK_FALSE(singular_check(wrong, t131));

  // The skip arrow in S_4: the computed interior coefficients (4,-2,4)
  // pass; replacing the last one with 2 fails.
  ArrowPair a = make_arrow(Permutation({2, 3, 4, 1}), Permutation({2, 1, 4, 3}));
  VermaTriple tau = triple_from_arrow(a, Rational(0));
  PolarCombo e = vs_element(tau);
  CHECK(singular_check(e, tau));
  PolarCombo forced = e;
  ShiftMatrix low = ShiftMatrix::unit(4, 4, 2, 2);
  forced.add_term(low, Rational(2) - forced.terms().at(low));
  CHECK(forced.terms().at(low) == 2);
  CHECK_FALSE(singular_check(forced, tau));
}

TEST_CASE("shapovalov coefficient") {
  GeneratorOrder o = GeneratorOrder::standard(3);
  VermaTriple t131;
  t131.n = 3;
  t131.i = 1;
  t131.j = 3;
  t131.r = 1;
  t131.lambda = {Rational(3), Rational(5), Rational(4)};
  PolarCombo e = vs_element(t131);
  CHECK(shapovalov_coefficient(e, 1, 3, 1, o) == 1);
  CHECK(shapovalov_coefficient(e, 1, 3, 1, GeneratorOrder::reversed_lowering(3)) == 1);

  // P(σ0) alone carries (r!)^{-(j-i)}... normalized: its F_{σ0} coefficient
  // is 1/σ0! = (r!)^{-(j-i)}.
  for (int r = 1; r <= 2; ++r) {
    PolarCombo p = PolarCombo::single(sigma_zero(3, 1, 3, r));
    Rational want(1);
    for (int q = 0; q < 2; ++q) want /= Rational(factorial(r));
    CHECK(shapovalov_coefficient(p, 1, 3, r, o) == want);
  }

  // Linearity.
  PolarCombo sum = e;
  sum += e;
  CHECK(shapovalov_coefficient(sum, 1, 3, 1, o) == 2);
}

TEST_CASE("leading coefficients") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);
    GeneratorOrder o = (trial % 2 == 0) ? GeneratorOrder::standard(n)
                                        : GeneratorOrder::reversed_lowering(n);
    ShiftMatrix s = random_lower_shift(rng, n, 5);
    CHECK(leading_coefficient_check(s, o));
  }
}

TEST_CASE("order independence of the verma action") {
  VermaTriple t131;
  t131.n = 3;
  t131.i = 1;
  t131.j = 3;
  t131.r = 1;
  t131.lambda = {Rational(3), Rational(5), Rational(4)};
  PolarCombo e = vs_element(t131);
  for (int p = 1; p < 3; ++p) {
    for (const GeneratorOrder& o :
         {GeneratorOrder::standard(3), GeneratorOrder::reversed_lowering(3)}) {
      UElement u = combo_to_pbw(e, o);
      UElement moved = left_mul_generator(p, p + 1, u);
      CHECK(act_on_verma(moved, VermaVector::highest_weight(o, t131.lambda)).is_zero());
    }
  }
}
