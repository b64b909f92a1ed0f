#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "weylpol/bruhat.hpp"
#include "weylpol/json_io.hpp"
#include "weylpol/pbw.hpp"
#include "weylpol/shift.hpp"
#include "weylpol/symtensor.hpp"
#include "weylpol/verify.hpp"
#include "weylpol/verma.hpp"
#include "weylpol/weyl_ops.hpp"
#include "weylpol/zelevinsky.hpp"

using nlohmann::json;
using namespace weylpol;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerdictFail = 1;
constexpr int kExitInputError = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw InputError("expected comma-separated integers, got: " + s);
    }
  }
  return out;
}

std::vector<Rational> parse_rationals(const std::string& s) {
  std::vector<Rational> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(rational_from_string(item));
    } catch (const std::exception&) {
      throw InputError("expected comma-separated rationals, got: " + s);
    }
  }
  return out;
}

// Rows separated by ';', entries by ','.
ShiftMatrix parse_shift(const std::string& s) {
  std::vector<std::vector<int>> rows;
  std::stringstream ss(s);
  std::string row;
  while (std::getline(ss, row, ';')) rows.push_back(parse_ints(row));
  try {
    return ShiftMatrix(static_cast<int>(rows.size()), rows);
  } catch (const std::exception& e) {
    throw InputError(std::string("bad shift matrix: ") + e.what());
  }
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  json j;
  in >> j;
  return j;
}

void emit(const json& j, bool pretty, const std::string& out_path) {
  std::string text = pretty ? j.dump(2) : j.dump();
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw InputError("cannot write file: " + out_path);
    out << text << "\n";
  }
  std::cout << text << "\n";
}

json verdicts_json(const std::vector<CheckResult>& checks) {
  json v = json::array();
  for (const auto& c : checks) v.push_back({{"name", c.name}, {"pass", c.pass}});
  return v;
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

int cmd_term_set(int n, int i, int j, int r, bool pretty) {
  Timer timer;
  std::vector<ShiftMatrix> ts;
  try {
    ts = term_set(n, i, j, r);
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
  json shifts = json::array();
  for (const auto& s : ts) shifts.push_back(to_json(s));
  emit({{"command", "term-set"},
        {"inputs", {{"n", n}, {"i", i}, {"j", j}, {"r", r}}},
        {"outputs", {{"term_set", shifts}}},
        {"verdicts", json::array()},
        {"timing_ms", timer.ms()}},
       pretty, "");
  return kExitOk;
}

int cmd_amplitude(int n, const std::string& source, const std::string& target,
                  const std::string& shift, const std::string& lambda, bool pretty) {
  Timer timer;
  ShiftMatrix s = parse_shift(shift);
  if (s.n() != n) throw InputError("shift size does not match --n");
  auto sv = parse_ints(source), tv = parse_ints(target);
  if (static_cast<int>(sv.size()) != n || static_cast<int>(tv.size()) != n)
    throw InputError("permutations must have length n");
  ArrowPair a;
  try {
    a = make_arrow(Permutation(sv), Permutation(tv));
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
  json outputs;
  try {
    if (lambda.empty()) {
      outputs["zel_amplitude"] = to_string(Rational(zel_amplitude(s, a)));
    } else {
      VermaTriple tau = triple_from_arrow(a, Rational(0));
      tau.lambda = parse_rationals(lambda);
      if (static_cast<int>(tau.lambda.size()) != n) throw InputError("lambda must have length n");
      outputs["vs_amplitude"] = to_string(vs_amplitude(s, tau));
    }
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
  emit({{"command", "amplitude"},
        {"inputs",
         {{"n", n}, {"source", sv}, {"target", tv}, {"shift", to_json(s)}}},
        {"outputs", outputs},
        {"verdicts", json::array()},
        {"timing_ms", timer.ms()}},
       pretty, "");
  return kExitOk;
}

int cmd_vs(int n, const std::string& root, int r, const std::string& lambda, bool check,
           bool pbw_out, bool no_check, bool pretty) {
  Timer timer;
  auto ij = parse_ints(root);
  if (ij.size() != 2) throw InputError("--root expects i,j");
  VermaTriple tau;
  tau.n = n;
  tau.i = ij[0];
  tau.j = ij[1];
  tau.r = r;
  tau.lambda = parse_rationals(lambda);
  if (static_cast<int>(tau.lambda.size()) != n) throw InputError("lambda must have length n");
  if (!(1 <= tau.i && tau.i < tau.j && tau.j <= n)) throw InputError("--root needs 1 <= i < j <= n");
  if (r < 1) throw InputError("--r must be positive");
  if (!no_check && !tau.verma_condition())
    throw InputError("Verma condition l_i - l_j - i + j = r violated");
  PolarCombo vs(n);
  for (const auto& s : term_set(n, tau.i, tau.j, tau.r)) vs.add_term(s, vs_amplitude(s, tau));
  json outputs{{"element", to_json(vs)}};
  if (pbw_out)
    outputs["pbw"] = to_json(combo_to_pbw(vs, GeneratorOrder::standard(n)));
  std::vector<CheckResult> verdicts;
  if (check) {
    verdicts.push_back({"singular", singular_check(vs, tau)});
    verdicts.push_back(
        {"shapovalov",
         shapovalov_coefficient(vs, tau.i, tau.j, tau.r, GeneratorOrder::standard(n)) == 1});
    verdicts.push_back({"weight-lemma", weight_check(tau)});
  }
  emit({{"command", "vs"},
        {"inputs", to_json(tau)},
        {"outputs", outputs},
        {"verdicts", verdicts_json(verdicts)},
        {"timing_ms", timer.ms()}},
       pretty, "");
  for (const auto& v : verdicts)
    if (!v.pass) return kExitVerdictFail;
  return kExitOk;
}

int cmd_zel(int n, const std::string& alpha, int m, bool check_dd, bool homology,
            const std::string& out_path, bool pretty) {
  Timer timer;
  DegreeVector av{parse_ints(alpha)};
  if (av.n() != n) throw InputError("alpha must have length n");
  if (m < 1) throw InputError("--dim must be positive");
  SignatureTable sgn = n >= 2 ? akin_signature(n) : SignatureTable{n, {}};
  ZelComplex c = build_complex(av, m, sgn);
  json levels = json::array();
  for (size_t k = 0; k < c.levels.size(); ++k) {
    json terms = json::array();
    for (const auto& t : c.levels[k])
      terms.push_back({{"pi", t.pi.p},
                       {"degrees", t.b},
                       {"dim", t.dimension(m).get_str()}});
    levels.push_back({{"terms", terms}, {"dim", c.level_dimension(static_cast<int>(k)).get_str()}});
  }
  json outputs{{"levels", levels}};
  std::vector<CheckResult> verdicts;
  if (check_dd) {
    bool dd = check_dd_zero(c);
    outputs["dd_zero"] = dd;
    verdicts.push_back({"dd-zero", dd});
  }
  if (homology) {
    json h = json::array();
    for (const auto& v : homology_dims(c)) h.push_back(v.get_str());
    outputs["homology"] = h;
  }
  emit({{"command", "zel"},
        {"inputs", {{"n", n}, {"alpha", av.degrees}, {"dim", m}}},
        {"outputs", outputs},
        {"verdicts", verdicts_json(verdicts)},
        {"timing_ms", timer.ms()}},
       pretty, out_path);
  for (const auto& v : verdicts)
    if (!v.pass) return kExitVerdictFail;
  return kExitOk;
}

int cmd_signatures(int n, bool pretty) {
  Timer timer;
  if (n < 2) throw InputError("--n must be at least 2");
  SignatureTable t = akin_signature(n);
  std::vector<CheckResult> verdicts{{"square-property", verify_square_property(t)}};
  emit({{"command", "signatures"},
        {"inputs", {{"n", n}}},
        {"outputs", {{"table", to_json(t)}}},
        {"verdicts", verdicts_json(verdicts)},
        {"timing_ms", timer.ms()}},
       pretty, "");
  return verdicts[0].pass ? kExitOk : kExitVerdictFail;
}

int cmd_pbw(const std::string& shift, const std::string& shift_file, const std::string& order,
            bool pretty) {
  Timer timer;
  ShiftMatrix s(1);
  json input;
  if (!shift_file.empty()) {
    input = load_json(shift_file);
    try {
      s = shift_from_json(input);
    } catch (const std::exception& e) {
      throw InputError(e.what());
    }
  } else if (!shift.empty()) {
    s = parse_shift(shift);
    input = to_json(s);
  } else {
    throw InputError("provide --shift or --shift-file");
  }
  GeneratorOrder o;
  if (order == "standard") {
    o = GeneratorOrder::standard(s.n());
  } else if (order == "reversed") {
    o = GeneratorOrder::reversed_lowering(s.n());
  } else {
    throw InputError("--order must be standard or reversed");
  }
  emit({{"command", "pbw"},
        {"inputs", {{"shift", input}, {"order", order}}},
        {"outputs", {{"element", to_json(polar_to_pbw(s, o))}}},
        {"verdicts", json::array()},
        {"timing_ms", timer.ms()}},
       pretty, "");
  return kExitOk;
}

int cmd_apply(const std::string& shift, const std::string& combo_file,
              const std::string& tensor_file, bool differential, bool pretty) {
  Timer timer;
  json tj = load_json(tensor_file);
  SymTensor t(1, 1);
  try {
    t = tensor_from_json(tj);
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
  json inputs{{"tensor", tj}};
  SymTensor result(t.n(), t.m());
  try {
    if (!combo_file.empty()) {
      PolarCombo c = combo_from_json(load_json(combo_file));
      inputs["combo"] = to_json(c);
      result = apply_combo(c, t);
    } else if (!shift.empty()) {
      ShiftMatrix s = parse_shift(shift);
      inputs["shift"] = to_json(s);
      result = differential ? apply_weyl_differential(s, t) : apply_weyl(s, t);
    } else {
      throw InputError("provide --shift or --combo");
    }
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
  emit({{"command", "apply"},
        {"inputs", inputs},
        {"outputs", {{"tensor", to_json(result)}}},
        {"verdicts", json::array()},
        {"timing_ms", timer.ms()}},
       pretty, "");
  return kExitOk;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, bool pretty) {
  Timer timer;
  SuiteReport rep;
  try {
    rep = run_suite(suite, seed);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  emit({{"command", "verify"},
        {"inputs", {{"suite", suite}, {"seed", seed}}},
        {"outputs", {{"all_pass", rep.all_pass()}}},
        {"verdicts", verdicts_json(rep.checks)},
        {"timing_ms", timer.ms()}},
       pretty, "");
  return rep.all_pass() ? kExitOk : kExitVerdictFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Weyl polarization calculus, Zelevinsky complexes, and "
               "Verma-Shapovalov elements"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "indent JSON output");

  auto* ts = app.add_subcommand("term-set", "enumerate TERM(i,j,r)");
  int ts_n = 0, ts_i = 0, ts_j = 0, ts_r = 0;
  ts->add_option("--n", ts_n)->required();
  ts->add_option("--i", ts_i)->required();
  ts->add_option("--j", ts_j)->required();
  ts->add_option("--r", ts_r)->required();

  auto* amp = app.add_subcommand("amplitude", "amplitude of a shift for an arrow pair");
  int amp_n = 0;
  std::string amp_src, amp_tgt, amp_shift, amp_lambda;
  amp->add_option("--n", amp_n)->required();
  amp->add_option("--source", amp_src)->required();
  amp->add_option("--target", amp_tgt)->required();
  amp->add_option("--shift", amp_shift)->required();
  amp->add_option("--lambda", amp_lambda);

  auto* vs = app.add_subcommand("vs", "Verma-Shapovalov element");
  int vs_n = 0, vs_r = 0;
  std::string vs_root, vs_lambda;
  bool vs_check = false, vs_pbw = false, vs_nocheck = false;
  vs->add_option("--n", vs_n)->required();
  vs->add_option("--root", vs_root)->required();
  vs->add_option("--r", vs_r)->required();
  vs->add_option("--lambda", vs_lambda)->required();
  vs->add_flag("--check", vs_check);
  vs->add_flag("--pbw", vs_pbw);
  vs->add_flag("--no-check", vs_nocheck);

  auto* zel = app.add_subcommand("zel", "Zelevinsky complex");
  int zel_n = 0, zel_m = 0;
  std::string zel_alpha, zel_out;
  bool zel_dd = false, zel_hom = false;
  zel->add_option("--n", zel_n)->required();
  zel->add_option("--alpha", zel_alpha)->required();
  zel->add_option("--dim", zel_m)->required();
  zel->add_flag("--check-dd", zel_dd);
  zel->add_flag("--homology", zel_hom);
  zel->add_option("--json", zel_out);

  auto* sig = app.add_subcommand("signatures", "Akin BGG signature table");
  int sig_n = 0;
  sig->add_option("--n", sig_n)->required();

  auto* pbw = app.add_subcommand("pbw", "PBW normal form of P(shift)");
  std::string pbw_shift, pbw_file, pbw_order = "standard";
  pbw->add_option("--shift", pbw_shift);
  pbw->add_option("--shift-file", pbw_file);
  pbw->add_option("--order", pbw_order);

  auto* ap = app.add_subcommand("apply", "apply a shift or combo to a tensor");
  std::string ap_shift, ap_combo, ap_tensor;
  bool ap_diff = false;
  ap->add_option("--shift", ap_shift);
  ap->add_option("--combo", ap_combo);
  ap->add_option("--tensor", ap_tensor)->required();
  ap->add_flag("--differential", ap_diff);

  auto* ver = app.add_subcommand("verify", "run a verification suite");
  std::string ver_suite;
  std::uint64_t ver_seed = 0;
  ver->add_option("--suite", ver_suite)->required();
  ver->add_option("--seed", ver_seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (ts->parsed()) return cmd_term_set(ts_n, ts_i, ts_j, ts_r, pretty);
    if (amp->parsed()) return cmd_amplitude(amp_n, amp_src, amp_tgt, amp_shift, amp_lambda, pretty);
    if (vs->parsed())
      return cmd_vs(vs_n, vs_root, vs_r, vs_lambda, vs_check, vs_pbw, vs_nocheck, pretty);
    if (zel->parsed()) return cmd_zel(zel_n, zel_alpha, zel_m, zel_dd, zel_hom, zel_out, pretty);
    if (sig->parsed()) return cmd_signatures(sig_n, pretty);
    if (pbw->parsed()) return cmd_pbw(pbw_shift, pbw_file, pbw_order, pretty);
    if (ap->parsed()) return cmd_apply(ap_shift, ap_combo, ap_tensor, ap_diff, pretty);
    if (ver->parsed()) return cmd_verify(ver_suite, ver_seed, pretty);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
