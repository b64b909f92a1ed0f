#include "weylpol/verify.hpp"

#include <atomic>
#include <cstdlib>
#include <functional>
#include <random>
#include <stdexcept>
#include <thread>

#include "weylpol/bruhat.hpp"
#include "weylpol/pbw.hpp"
#include "weylpol/shift.hpp"
#include "weylpol/symtensor.hpp"
#include "weylpol/verma.hpp"
#include "weylpol/weyl_ops.hpp"
#include "weylpol/zelevinsky.hpp"

namespace weylpol {

bool SuiteReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::vector<std::string> suite_names() {
  return {"equivalence", "recurrences", "signatures", "complex", "vs", "pbw", "all"};
}

int thread_limit() {
  if (const char* env = std::getenv("WEYLPOL_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(hc) : 1;
}

namespace {

using Rng = std::mt19937_64;

int pick(Rng& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

SymTensor random_tensor(Rng& rng, int n, int m, int maxdeg, int nterms) {
  SymTensor t(n, m);
  for (int q = 0; q < nterms; ++q) {
    Monomial mo(n, m);
    for (int i = 1; i <= n; ++i)
      for (int k = 1; k <= m; ++k) mo.set_exp(i, k, pick(rng, 0, maxdeg));
    int c = pick(rng, -5, 5);
    t.add_term(mo, Rational(c == 0 ? 1 : c));
  }
  return t;
}

ShiftMatrix random_shift(Rng& rng, int n, int maxweight) {
  ShiftMatrix s(n);
  int w = pick(rng, 0, maxweight);
  for (int t = 0; t < w; ++t) {
    int i = pick(rng, 1, n), j = pick(rng, 1, n);
    s.set(i, j, s(i, j) + 1);
  }
  return s;
}

ShiftMatrix random_lower_shift(Rng& rng, int n, int weight) {
  ShiftMatrix s(n);
  for (int t = 0; t < weight; ++t) {
    int i = pick(rng, 2, n), j = pick(rng, 1, i - 1);
    s.set(i, j, s(i, j) + 1);
  }
  return s;
}

// Run indexed independent cases on up to thread_limit() threads; results land
// by index, so reports are deterministic.
std::vector<bool> run_cases(int count, const std::function<bool(int)>& fn) {
  std::vector<bool> results(count, false);
  int threads = std::min(thread_limit(), count > 0 ? count : 1);
  if (threads <= 1) {
    for (int i = 0; i < count; ++i) results[i] = fn(i);
    return results;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  std::vector<char> res(count, 0);
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) res[i] = fn(i) ? 1 : 0;
    });
  for (auto& th : pool) th.join();
  for (int i = 0; i < count; ++i) results[i] = res[i] != 0;
  return results;
}

bool all_of(const std::vector<bool>& v) {
  for (bool b : v)
    if (!b) return false;
  return true;
}

void suite_equivalence(Rng& rng, SuiteReport& rep) {
  bool defs = true, oracle = true;
  for (int t = 0; t < 200; ++t) {
    int n = pick(rng, 1, 3), m = pick(rng, 1, 3);
    ShiftMatrix s = random_shift(rng, n, 3);
    SymTensor x = random_tensor(rng, n, m, 3, 3);
    SymTensor a = apply_weyl(s, x);
    if (!(a == apply_weyl_differential(s, x))) defs = false;
    if (t < 50 && !(a == apply_weyl_by_selections(s, x))) oracle = false;
  }
  rep.checks.push_back({"equivalence/combinatorial-vs-differential", defs});
  rep.checks.push_back({"equivalence/selection-oracle", oracle});

  bool reduction = true;
  for (int t = 0; t < 100; ++t) {
    int n = pick(rng, 1, 3), m = pick(rng, 1, 3);
    ShiftMatrix s = random_shift(rng, n, 3);
    // Homogeneous input of one multidegree.
    Monomial mo(n, m);
    for (int i = 1; i <= n; ++i)
      for (int k = 1; k <= m; ++k) mo.set_exp(i, k, pick(rng, 0, 2));
    SymTensor x = SymTensor::monomial(mo, Rational(pick(rng, 1, 5)));
    DegreeVector alpha{mo.multidegrees()};
    SymTensor lhs = apply_weyl(s, x);
    SymTensor rhs = apply_weyl(reduced(s), x);
    rhs *= Rational(diagonal_reduction_factor(s, alpha));
    if (!(lhs == rhs)) reduction = false;
  }
  rep.checks.push_back({"equivalence/diagonal-reduction", reduction});
}

void suite_recurrences(Rng& rng, SuiteReport& rep) {
  bool left = true, right = true, comm = true;
  for (int t = 0; t < 200; ++t) {
    int n = pick(rng, 2, 3), m = pick(rng, 1, 3);
    ShiftMatrix s = random_shift(rng, n, 3);
    SymTensor x = random_tensor(rng, n, m, 2, 3);
    int i = pick(rng, 1, n), j = pick(rng, 1, n);
    PolarCombo ps = PolarCombo::single(s);
    if (!(apply_combo(left_mul_elementary(i, j, ps), x) ==
          apply_elementary(i, j, apply_weyl(s, x))))
      left = false;
    if (!(apply_combo(right_mul_elementary(ps, i, j), x) ==
          apply_weyl(s, apply_elementary(i, j, x))))
      right = false;
    if (t < 60) {
      SymTensor lhs = apply_elementary(i, j, apply_weyl(s, x));
      lhs -= apply_weyl(s, apply_elementary(i, j, x));
      if (!(lhs == apply_combo(commutator_elementary(i, j, ps), x))) comm = false;
    }
  }
  rep.checks.push_back({"recurrences/left-multiplication", left});
  rep.checks.push_back({"recurrences/right-multiplication", right});
  rep.checks.push_back({"recurrences/commutator", comm});

  bool capelli = true;
  for (int n = 2; n <= 4 && capelli; ++n)
    for (int i = 1; i <= n && capelli; ++i)
      for (int j = 1; j <= n && capelli; ++j)
        for (int k = 1; k <= n && capelli; ++k)
          for (int l = 1; l <= n; ++l) {
            PolarCombo lhs = word_to_combo({n, {{i, j}, {k, l}}});
            lhs -= word_to_combo({n, {{k, l}, {i, j}}});
            PolarCombo rhs(n);
            if (j == k) rhs.add_term(ShiftMatrix::unit(n, i, l), Rational(1));
            if (l == i) rhs.add_term(ShiftMatrix::unit(n, k, j), Rational(-1));
            if (!(lhs == rhs)) {
              capelli = false;
              break;
            }
          }
  rep.checks.push_back({"recurrences/capelli-lie-homomorphism", capelli});

  bool factor = true;
  for (int t = 0; t < 100; ++t) {
    int n = pick(rng, 1, 3);
    ShiftMatrix s = random_shift(rng, n, 3);
    DegreeVector alpha;
    for (int i = 0; i < n; ++i) alpha.degrees.push_back(pick(rng, 0, 4));
    Integer f = diagonal_reduction_factor(s, alpha);
    // Oracle: apply to the concentrated monomial x_1^{a_i} per slot (M=1).
    Monomial mo(n, 1);
    for (int i = 1; i <= n; ++i) mo.set_exp(i, 1, alpha.degrees[i - 1]);
    SymTensor x = SymTensor::monomial(mo);
    SymTensor lhs = apply_weyl(s, x);
    SymTensor rhs = apply_weyl(reduced(s), x);
    rhs *= Rational(f);
    if (!(lhs == rhs)) factor = false;
  }
  rep.checks.push_back({"recurrences/diagonal-factor", factor});
}

void suite_signatures(Rng&, SuiteReport& rep) {
  SignatureTable s3 = akin_signature(3);
  std::vector<std::pair<std::vector<int>, std::vector<int>>> taus = {
      {{2, 1, 3}, {1, 2, 3}}, {{1, 3, 2}, {1, 2, 3}}, {{2, 3, 1}, {1, 3, 2}},
      {{2, 3, 1}, {2, 1, 3}}, {{3, 1, 2}, {1, 3, 2}}, {{3, 1, 2}, {2, 1, 3}},
      {{3, 2, 1}, {2, 3, 1}}, {{3, 2, 1}, {3, 1, 2}}};
  std::vector<int> want = {1, 1, -1, 1, 1, -1, 1, 1};
  bool row = true;
  for (size_t t = 0; t < taus.size(); ++t)
    if (s3.sign(Permutation(taus[t].first), Permutation(taus[t].second)) != want[t]) row = false;
  rep.checks.push_back({"signatures/n3-table", row});

  bool squares_ok = true, total = true, chain_plus = true;
  for (int n = 2; n <= 4; ++n) {
    SignatureTable t = akin_signature(n);
    if (!verify_square_property(t)) squares_ok = false;
    for (const auto& a : arrow_pairs(n))
      if (!t.signs.count({a.source, a.target})) total = false;
    auto chain = canonical_chain(n);
    for (size_t p = 0; p + 1 < chain.size(); ++p)
      if (t.sign(chain[p + 1], chain[p]) != 1) chain_plus = false;
  }
  rep.checks.push_back({"signatures/square-property", squares_ok});
  rep.checks.push_back({"signatures/table-total", total});
  rep.checks.push_back({"signatures/chain-arrows-positive", chain_plus});

  auto c4 = canonical_chain(4);
  std::vector<std::vector<int>> want4 = {{1, 2, 3, 4}, {1, 2, 4, 3}, {1, 4, 2, 3}, {1, 4, 3, 2},
                                         {4, 1, 3, 2}, {4, 3, 1, 2}, {4, 3, 2, 1}};
  bool chain4 = c4.size() == want4.size();
  for (size_t p = 0; chain4 && p < c4.size(); ++p)
    if (c4[p].p != want4[p]) chain4 = false;
  rep.checks.push_back({"signatures/canonical-chain-n4", chain4});
}

void suite_complex(Rng&, SuiteReport& rep) {
  struct Case {
    std::vector<int> alpha;
    int m;
    bool partition;
  };
  std::vector<Case> cases = {{{1, 1, 0}, 2, true},  {{2, 1, 0}, 2, true},  {{2, 2, 1}, 2, true},
                             {{2, 1, 0}, 3, true},  {{0, 2, 1}, 2, false}, {{1, 0, 2}, 2, false},
                             {{2, 0, 1}, 3, false}, {{3, 1, 1}, 2, true}};
  SignatureTable sgn = akin_signature(3);
  std::vector<bool> dd(cases.size()), euler(cases.size()), hom(cases.size());
  auto results = run_cases(static_cast<int>(cases.size()), [&](int idx) {
    const Case& cs = cases[idx];
    ZelComplex c = build_complex({cs.alpha}, cs.m, sgn);
    dd[idx] = check_dd_zero(c);
    Integer chi(0);
    for (size_t k = 0; k < c.levels.size(); ++k)
      chi += (k % 2 ? -1 : 1) * c.level_dimension(static_cast<int>(k));
    euler[idx] = chi == schur_dimension_oracle({cs.alpha}, cs.m);
    auto h = homology_dims(c);
    bool ok = true;
    for (size_t k = 1; k < h.size(); ++k)
      if (h[k] != 0) ok = false;
    if (cs.partition) {
      if (h[0] != schur_dimension_oracle({cs.alpha}, cs.m)) ok = false;
      if (h[0] != hook_content_dimension({cs.alpha}, cs.m)) ok = false;
    }
    hom[idx] = ok;
    return dd[idx] && euler[idx] && hom[idx];
  });
  (void)results;
  rep.checks.push_back({"complex/dd-zero", all_of(dd)});
  rep.checks.push_back({"complex/euler-characteristic", all_of(euler)});
  rep.checks.push_back({"complex/homology", all_of(hom)});
}

void suite_vs(Rng& rng, SuiteReport& rep) {
  bool weight = true, cic = true, singular = true, shap = true, dict = true, negative = true;
  for (int n = 2; n <= 4; ++n)
    for (int i = 1; i < n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int r = 1; r <= 2; ++r)
          for (int rep_count = 0; rep_count < 2; ++rep_count) {
            VermaTriple tau;
            tau.n = n;
            tau.i = i;
            tau.j = j;
            tau.r = r;
            tau.lambda.resize(n);
            for (int k = 0; k < n; ++k)
              tau.lambda[k] = Rational(pick(rng, -6, 6)) + Rational(pick(rng, 0, 6)) / 7;
            tau.lambda[i - 1] = tau.lambda[j - 1] + r + i - j;
            if (!weight_check(tau)) weight = false;
            for (int p = i; p <= j - 1; ++p)
              if (!coefficient_identity_check(tau, p)) cic = false;
            PolarCombo vs = vs_element(tau);
            if (!singular_check(vs, tau)) singular = false;
            if (shapovalov_coefficient(vs, i, j, r, GeneratorOrder::standard(n)) != 1)
              shap = false;
            if (j - i >= 2) {
              VermaTriple bad = tau;
              bad.lambda[j - 1] += 1;
              for (int p = i; p < j - 1; ++p)
                if (!coefficient_identity_check(bad, p)) negative = false;
              PolarCombo badvs(n);
              for (const auto& s : term_set(n, i, j, r)) badvs.add_term(s, vs_amplitude(s, bad));
              if (singular_check(badvs, bad)) negative = false;
            }
          }
  for (const auto& a : arrow_pairs(3)) {
    VermaTriple tau = triple_from_arrow(a, Rational(pick(rng, -3, 3)));
    for (const auto& s : term_set(3, a.i, a.j, a.r))
      if (vs_amplitude(s, tau) != Rational(zel_amplitude(s, a))) dict = false;
  }
  rep.checks.push_back({"vs/weight-lemma", weight});
  rep.checks.push_back({"vs/coefficient-identities", cic});
  rep.checks.push_back({"vs/singular-vector", singular});
  rep.checks.push_back({"vs/shapovalov-normalization", shap});
  rep.checks.push_back({"vs/arrow-dictionary", dict});
  rep.checks.push_back({"vs/negative-control", negative});
}

void suite_pbw(Rng& rng, SuiteReport& rep) {
  bool straight = true, polar = true, leading = true, orders = true;
  for (int t = 0; t < 50; ++t) {
    int n = 3, m = 2;
    ElementaryWord w{n, {}};
    int len = pick(rng, 0, 4);
    for (int q = 0; q < len; ++q) w.factors.push_back({pick(rng, 1, n), pick(rng, 1, n)});
    SymTensor x = random_tensor(rng, n, m, 2, 2);
    SymTensor direct = x;
    for (auto it = w.factors.rbegin(); it != w.factors.rend(); ++it)
      direct = apply_elementary(it->first, it->second, direct);
    GeneratorOrder o =
        t % 2 ? GeneratorOrder::reversed_lowering(n) : GeneratorOrder::standard(n);
    if (!(apply_uelement(straighten(w, o), x) == direct)) straight = false;
  }
  for (int t = 0; t < 30; ++t) {
    int n = pick(rng, 2, 3), m = 2;
    ShiftMatrix s = random_shift(rng, n, 3);
    SymTensor x = random_tensor(rng, n, m, 2, 2);
    if (!(apply_uelement(polar_to_pbw(s, GeneratorOrder::standard(n)), x) == apply_weyl(s, x)))
      polar = false;
  }
  for (int t = 0; t < 50; ++t) {
    int n = pick(rng, 2, 4);
    ShiftMatrix s = random_lower_shift(rng, n, pick(rng, 1, 5));
    if (!leading_coefficient_check(s, GeneratorOrder::standard(n))) leading = false;
    if (t < 20 && !leading_coefficient_check(s, GeneratorOrder::reversed_lowering(n)))
      leading = false;
  }
  for (int n = 2; n <= 4; ++n)
    for (int i = 1; i < n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int r = 1; r <= 2; ++r) {
          VermaTriple tau;
          tau.n = n;
          tau.i = i;
          tau.j = j;
          tau.r = r;
          tau.lambda.resize(n);
          for (int k = 0; k < n; ++k) tau.lambda[k] = Rational(pick(rng, -4, 4));
          tau.lambda[i - 1] = tau.lambda[j - 1] + r + i - j;
          PolarCombo vs = vs_element(tau);
          if (shapovalov_coefficient(vs, i, j, r, GeneratorOrder::standard(n)) != 1)
            orders = false;
          if (shapovalov_coefficient(vs, i, j, r, GeneratorOrder::reversed_lowering(n)) != 1)
            orders = false;
        }
  rep.checks.push_back({"pbw/straighten-soundness", straight});
  rep.checks.push_back({"pbw/polar-soundness", polar});
  rep.checks.push_back({"pbw/leading-coefficient", leading});
  rep.checks.push_back({"pbw/order-independence", orders});
}

}  // namespace

SuiteReport run_suite(const std::string& name, std::uint64_t seed) {
  SuiteReport rep;
  rep.suite = name;
  rep.seed = seed;
  Rng rng(seed);
  if (name == "equivalence") {
    suite_equivalence(rng, rep);
  } else if (name == "recurrences") {
    suite_recurrences(rng, rep);
  } else if (name == "signatures") {
    suite_signatures(rng, rep);
  } else if (name == "complex") {
    suite_complex(rng, rep);
  } else if (name == "vs") {
    suite_vs(rng, rep);
  } else if (name == "pbw") {
    suite_pbw(rng, rep);
  } else if (name == "all") {
    suite_equivalence(rng, rep);
    suite_recurrences(rng, rep);
    suite_signatures(rng, rep);
    suite_complex(rng, rep);
    suite_vs(rng, rep);
    suite_pbw(rng, rep);
  } else {
    throw std::invalid_argument("unknown suite: " + name);
  }
  return rep;
}

}  // namespace weylpol
