#include "weylpol/json_io.hpp"

#include <stdexcept>

using nlohmann::json;

namespace weylpol {

namespace {

json coeff_json(const Rational& c) { return to_string(c); }

Rational coeff_from(const json& j) {
  if (!j.is_string()) throw std::invalid_argument("coefficient must be a \"p/q\" string");
  return rational_from_string(j.get<std::string>());
}

json perm_json(const Permutation& p) { return json(p.p); }

Permutation perm_from(const json& j) {
  return Permutation(j.get<std::vector<int>>());
}

}  // namespace

json to_json(const ShiftMatrix& s) {
  return json{{"n", s.n()}, {"entries", s.rows()}};
}

ShiftMatrix shift_from_json(const json& j) {
  return ShiftMatrix(j.at("n").get<int>(),
                     j.at("entries").get<std::vector<std::vector<int>>>());
}

json to_json(const DegreeVector& d) { return json{{"degrees", d.degrees}}; }

DegreeVector degrees_from_json(const json& j) {
  DegreeVector d;
  d.degrees = j.at("degrees").get<std::vector<int>>();
  return d;
}

json to_json(const SymTensor& t) {
  json terms = json::array();
  for (const auto& [mo, c] : t.terms()) {
    std::vector<std::vector<int>> rows(mo.n, std::vector<int>(mo.m));
    for (int i = 1; i <= mo.n; ++i)
      for (int k = 1; k <= mo.m; ++k) rows[i - 1][k - 1] = mo.exp(i, k);
    terms.push_back({{"coeff", coeff_json(c)}, {"exponents", rows}});
  }
  return json{{"n", t.n()}, {"m", t.m()}, {"terms", terms}};
}

SymTensor tensor_from_json(const json& j) {
  int n = j.at("n").get<int>(), m = j.at("m").get<int>();
  SymTensor t(n, m);
  for (const auto& term : j.at("terms")) {
    auto rows = term.at("exponents").get<std::vector<std::vector<int>>>();
    if (static_cast<int>(rows.size()) != n)
      throw std::invalid_argument("SymTensor: wrong exponent row count");
    Monomial mo(n, m);
    for (int i = 1; i <= n; ++i) {
      if (static_cast<int>(rows[i - 1].size()) != m)
        throw std::invalid_argument("SymTensor: wrong exponent column count");
      for (int k = 1; k <= m; ++k) {
        if (rows[i - 1][k - 1] < 0) throw std::invalid_argument("SymTensor: negative exponent");
        mo.set_exp(i, k, rows[i - 1][k - 1]);
      }
    }
    t.add_term(mo, coeff_from(term.at("coeff")));
  }
  return t;
}

json to_json(const PolarCombo& c) {
  json terms = json::array();
  for (const auto& [s, v] : c.terms())
    terms.push_back({{"coeff", coeff_json(v)}, {"shift", s.rows()}});
  return json{{"n", c.n()}, {"terms", terms}};
}

PolarCombo combo_from_json(const json& j) {
  int n = j.at("n").get<int>();
  PolarCombo c(n);
  for (const auto& term : j.at("terms"))
    c.add_term(ShiftMatrix(n, term.at("shift").get<std::vector<std::vector<int>>>()),
               coeff_from(term.at("coeff")));
  return c;
}

json to_json(const ElementaryWord& w) {
  json factors = json::array();
  for (const auto& [i, jx] : w.factors) factors.push_back({i, jx});
  return json{{"n", w.n}, {"factors", factors}};
}

ElementaryWord word_from_json(const json& j) {
  ElementaryWord w;
  w.n = j.at("n").get<int>();
  for (const auto& f : j.at("factors")) {
    int i = f.at(0).get<int>(), jj = f.at(1).get<int>();
    if (i < 1 || i > w.n || jj < 1 || jj > w.n)
      throw std::invalid_argument("ElementaryWord: index out of range");
    w.factors.push_back({i, jj});
  }
  return w;
}

json to_json(const SignatureTable& t) {
  json arrows = json::array();
  for (const auto& [key, sgn] : t.signs) {
    ArrowPair a = make_arrow(key.first, key.second);
    arrows.push_back({{"from", perm_json(a.source)},
                      {"to", perm_json(a.target)},
                      {"transposition", {a.i, a.j}},
                      {"r", a.r},
                      {"sign", sgn}});
  }
  return json{{"n", t.n}, {"arrows", arrows}};
}

SignatureTable signature_from_json(const json& j) {
  SignatureTable t;
  t.n = j.at("n").get<int>();
  for (const auto& a : j.at("arrows")) {
    int sgn = a.at("sign").get<int>();
    if (sgn != 1 && sgn != -1) throw std::invalid_argument("SignatureTable: sign must be +-1");
    t.signs[{perm_from(a.at("from")), perm_from(a.at("to"))}] = sgn;
  }
  return t;
}

json to_json(const VermaTriple& tau) {
  json lambda = json::array();
  for (const auto& l : tau.lambda) lambda.push_back(coeff_json(l));
  return json{{"n", tau.n}, {"i", tau.i}, {"j", tau.j}, {"r", tau.r}, {"lambda", lambda}};
}

VermaTriple triple_from_json(const json& j) {
  VermaTriple tau;
  tau.n = j.at("n").get<int>();
  tau.i = j.at("i").get<int>();
  tau.j = j.at("j").get<int>();
  tau.r = j.at("r").get<int>();
  for (const auto& l : j.at("lambda")) tau.lambda.push_back(coeff_from(l));
  if (static_cast<int>(tau.lambda.size()) != tau.n)
    throw std::invalid_argument("VermaTriple: lambda length mismatch");
  if (!(1 <= tau.i && tau.i < tau.j && tau.j <= tau.n) || tau.r < 1)
    throw std::invalid_argument("VermaTriple: invalid root data");
  return tau;
}

json to_json(const UElement& u) {
  json order = json::array();
  for (const auto& [i, jx] : u.order.gens) order.push_back({i, jx});
  json terms = json::array();
  for (const auto& [mo, c] : u.terms)
    terms.push_back({{"coeff", coeff_json(c)}, {"exponents", mo}});
  return json{{"n", u.n}, {"order", order}, {"terms", terms}};
}

UElement uelement_from_json(const json& j) {
  GeneratorOrder o;
  o.n = j.at("n").get<int>();
  for (const auto& g : j.at("order")) o.gens.push_back({g.at(0).get<int>(), g.at(1).get<int>()});
  if (o.gens.size() != static_cast<size_t>(o.n) * o.n)
    throw std::invalid_argument("UElement: order must list all generators");
  UElement u(o);
  for (const auto& term : j.at("terms")) {
    auto mo = term.at("exponents").get<std::vector<int>>();
    if (mo.size() != o.gens.size())
      throw std::invalid_argument("UElement: exponent length mismatch");
    for (int e : mo)
      if (e < 0) throw std::invalid_argument("UElement: negative exponent");
    u.add_term(mo, coeff_from(term.at("coeff")));
  }
  return u;
}

}  // namespace weylpol
