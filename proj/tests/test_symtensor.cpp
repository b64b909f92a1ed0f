#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "weylpol/symtensor.hpp"

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

// x1x2x3 ⊗ y1 ⊗ z1z2 with x,y,z the variables of slots 1..3 (M=3 letters
// suffice: variables 1,2,3 play x1..x3 etc.).
SymTensor paper_example_tensor() {
  Monomial mo(3, 3);
  mo.set_exp(1, 1, 1);
  mo.set_exp(1, 2, 1);
  mo.set_exp(1, 3, 1);
  mo.set_exp(2, 1, 1);
  mo.set_exp(3, 1, 1);
  mo.set_exp(3, 2, 1);
  return SymTensor::monomial(mo);
}

}  // namespace

TEST_CASE("apply_elementary moves one letter in all ways") {
  SymTensor t = paper_example_tensor();
  SymTensor d13 = apply_elementary(1, 3, t);
  REQUIRE(d13.terms().size() == 2);
  // x1x2x3z1 ⊗ y1 ⊗ z2  and  x1x2x3z2 ⊗ y1 ⊗ z1
  Monomial a(3, 3), b(3, 3);
  a.set_exp(1, 1, 2);
  a.set_exp(1, 2, 1);
  a.set_exp(1, 3, 1);
  a.set_exp(2, 1, 1);
  a.set_exp(3, 2, 1);
  b.set_exp(1, 1, 1);
  b.set_exp(1, 2, 2);
  b.set_exp(1, 3, 1);
  b.set_exp(2, 1, 1);
  b.set_exp(3, 1, 1);
  CHECK(d13.terms().at(a) == 1);
  CHECK(d13.terms().at(b) == 1);

  SymTensor d11 = apply_elementary(1, 1, t);
  SymTensor scaled = t;
  scaled *= Rational(3);
  CHECK(d11 == scaled);

  SymTensor empty_slot(2, 2);
  Monomial mo(2, 2);
  mo.set_exp(1, 1, 2);
  empty_slot.add_term(mo, Rational(1));
  CHECK(apply_elementary(1, 2, empty_slot).is_zero());
}

TEST_CASE("apply_weyl basics") {
  std::mt19937_64 rng(11);
  SymTensor t = random_tensor(rng, 3, 2, 3, 3);
  CHECK(apply_weyl(ShiftMatrix(3), t) == t);

  // Elementary shifts agree with apply_elementary.
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      CHECK(apply_weyl(ShiftMatrix::unit(3, i, j), t) == apply_elementary(i, j, t));
}

TEST_CASE("grading: multidegree shifts by the weight vector") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + static_cast<int>(rng() % 2), m = 1 + static_cast<int>(rng() % 3);
    ShiftMatrix s = random_shift(rng, n, 3);
    Monomial mo(n, m);
    for (int i = 1; i <= n; ++i)
      for (int k = 1; k <= m; ++k) mo.set_exp(i, k, static_cast<int>(rng() % 3));
    SymTensor out = apply_weyl(s, SymTensor::monomial(mo));
    auto wt = weight_vector(s);
    auto base = mo.multidegrees();
    for (const auto& [om, c] : out.terms()) {
      auto d = om.multidegrees();
      for (int i = 0; i < n; ++i) CHECK(d[i] == base[i] + wt[i]);
      CHECK(om.variable_weight() == mo.variable_weight());
    }
  }
}

TEST_CASE("diagonal reduction") {
  // P(σ2)ω = C(a1-1, 2)·P(σ3)ω with σ2=[[2,1],[1,0]], σ3=[[0,1],[1,0]].
  ShiftMatrix s2(2, {{2, 1}, {1, 0}});
  ShiftMatrix s3(2, {{0, 1}, {1, 0}});
  std::mt19937_64 rng(17);
  for (int a1 = 0; a1 <= 4; ++a1)
    for (int a2 = 0; a2 <= 3; ++a2) {
      Monomial mo(2, 2);
      mo.set_exp(1, 1, a1 > 0 ? a1 - 1 : 0);
      mo.set_exp(1, 2, a1 > 0 ? 1 : 0);
      mo.set_exp(2, 1, a2);
      DegreeVector alpha{mo.multidegrees()};
      Integer f = diagonal_reduction_factor(s2, alpha);
      CHECK(f == binomial(alpha.degrees[0] - 1, 2));
      SymTensor t = SymTensor::monomial(mo);
      SymTensor rhs = apply_weyl(s3, t);
      rhs *= Rational(f);
      CHECK(apply_weyl(s2, t) == rhs);
    }

  CHECK(diagonal_reduction_factor(reduced(s2), DegreeVector{{5, 2}}) == 1);
  CHECK(diagonal_reduction_factor(ShiftMatrix::unit(1, 1, 1), DegreeVector{{7}}) == 7);

  // General random property on homogeneous inputs.
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + static_cast<int>(rng() % 3), m = 1 + static_cast<int>(rng() % 2);
    ShiftMatrix s = random_shift(rng, n, 3);
    Monomial mo(n, m);
    for (int i = 1; i <= n; ++i)
      for (int k = 1; k <= m; ++k) mo.set_exp(i, k, static_cast<int>(rng() % 3));
    SymTensor t = SymTensor::monomial(mo);
    SymTensor rhs = apply_weyl(reduced(s), t);
    rhs *= Rational(diagonal_reduction_factor(s, DegreeVector{mo.multidegrees()}));
    CHECK(apply_weyl(s, t) == rhs);
  }
}

TEST_CASE("combinatorial equals differential equals selection oracle") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng() % 3), m = 1 + static_cast<int>(rng() % 3);
    ShiftMatrix s = random_shift(rng, n, 3);
    SymTensor t = random_tensor(rng, n, m, 3, 3);
    SymTensor a = apply_weyl(s, t);
    CHECK(a == apply_weyl_differential(s, t));
    if (trial < 60) CHECK(a == apply_weyl_by_selections(s, t));
  }
}

TEST_CASE("non-normalized differential action is sigma! times the normalized one") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    ShiftMatrix s = random_shift(rng, 2, 4);
    SymTensor t = random_tensor(rng, 2, 2, 3, 2);
    SymTensor lhs = apply_weyl_differential(s, t);
    lhs *= Rational(shift_factorial(s));
    // P0 = σ!·P: recompute through the combinatorial side.
    SymTensor rhs = apply_weyl(s, t);
    rhs *= Rational(shift_factorial(s));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("commutation relations of elementary polarizations") {
  std::mt19937_64 rng(23);
  for (int n = 2; n <= 4; ++n) {
    SymTensor t = random_tensor(rng, n, 2, 2, 3);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          for (int l = 1; l <= n; ++l) {
            SymTensor lhs = apply_elementary(i, j, apply_elementary(k, l, t));
            lhs -= apply_elementary(k, l, apply_elementary(i, j, t));
            SymTensor rhs(n, 2);
            if (j == k) rhs += apply_elementary(i, l, t);
            if (i == l) rhs -= apply_elementary(k, j, t);
            CHECK(lhs == rhs);
          }
  }
}

TEST_CASE("naturality under simultaneous substitution") {
  // Substitute x -> x, y -> x + y in both variables of every slot; the
  // polarization actions commute with the substitution.
  auto substitute = [](const SymTensor& t) {
    SymTensor out(t.n(), t.m());
    for (const auto& [mo, c] : t.terms()) {
      // expand (x)^(e1) (x+y)^(e2) per slot
      SymTensor cur(t.n(), t.m());
      Monomial base(t.n(), t.m());
      cur.add_term(base, c);
      for (int i = 1; i <= t.n(); ++i) {
        // multiply by x^{e_{i,1}}
        SymTensor next(t.n(), t.m());
        for (const auto& [m2, c2] : cur.terms()) {
          Monomial m3 = m2;
          m3.set_exp(i, 1, m3.exp(i, 1) + mo.exp(i, 1));
          next.add_term(m3, c2);
        }
        cur = next;
        for (int rep = 0; rep < mo.exp(i, 2); ++rep) {
          SymTensor acc(t.n(), t.m());
          for (const auto& [m2, c2] : cur.terms()) {
            Monomial mx = m2, my = m2;
            mx.set_exp(i, 1, mx.exp(i, 1) + 1);
            my.set_exp(i, 2, my.exp(i, 2) + 1);
            acc.add_term(mx, c2);
            acc.add_term(my, c2);
          }
          cur = acc;
        }
      }
      out += cur;
    }
    return out;
  };
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    ShiftMatrix s = random_shift(rng, 2, 3);
    SymTensor t = random_tensor(rng, 2, 2, 2, 2);
    CHECK(substitute(apply_weyl(s, t)) == apply_weyl(s, substitute(t)));
  }
}
