#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <set>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(WEYLPOL_BIN) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  RunResult r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  int status = pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("term-set") {
  RunResult r = run("term-set --n 3 --i 1 --j 3 --r 1");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j.at("command") == "term-set");
  CHECK(j.at("outputs").at("term_set").size() == 2);

  r = run("term-set --n 4 --i 2 --j 4 --r 2");
  REQUIRE(r.exit_code == 0);
  CHECK(json::parse(r.out).at("outputs").at("term_set").size() == 3);

  CHECK(run("term-set --n 3 --i 3 --j 1 --r 1").exit_code == 2);
  CHECK(run("term-set --n 3 --i 1 --j 3").exit_code == 2);
}

TEST_CASE("amplitude") {
  RunResult r =
      run("amplitude --n 3 --source 2,3,1 --target 1,3,2 --shift \"0,0,0;0,0,0;1,0,0\"");
  REQUIRE(r.exit_code == 0);
  CHECK(json::parse(r.out).at("outputs").at("zel_amplitude") == "-1");

  r = run("amplitude --n 3 --source 2,3,1 --target 1,3,2 --shift \"0,0,0;0,0,0;1,0,0\" "
          "--lambda 3,5,4");
  REQUIRE(r.exit_code == 0);
  CHECK(json::parse(r.out).at("outputs").at("vs_amplitude") == "-1");

  // Not a covering pair.
  CHECK(run("amplitude --n 3 --source 1,2,3 --target 3,2,1 --shift \"0,0,0;0,0,0;1,0,0\"")
            .exit_code == 2);
  // Shift not subordinate.
  CHECK(run("amplitude --n 3 --source 2,3,1 --target 1,3,2 --shift \"0,0,0;1,0,0;0,0,0\"")
            .exit_code == 2);
}

TEST_CASE("vs") {
  RunResult r = run("vs --n 3 --root 1,3 --r 1 --lambda 3,5,4 --check");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  auto terms = j.at("outputs").at("element").at("terms");
  REQUIRE(terms.size() == 2);
  for (const auto& v : j.at("verdicts")) CHECK(v.at("pass") == true);

  // Verma condition broken -> input error.
  CHECK(run("vs --n 3 --root 1,2 --r 2 --lambda 1,1,0 --check").exit_code == 2);
  // ... unless explicitly skipped.
  CHECK(run("vs --n 3 --root 1,2 --r 2 --lambda 1,1,0 --no-check").exit_code == 0);

  // The S_4 skip element: coefficients (4, -2, 4) and a true singular verdict.
  r = run("vs --n 4 --root 2,4 --r 2 --lambda 3,5,7,5 --check --pbw");
  REQUIRE(r.exit_code == 0);
  j = json::parse(r.out);
  std::multiset<std::string> coeffs;
  for (const auto& t : j.at("outputs").at("element").at("terms"))
    coeffs.insert(t.at("coeff").get<std::string>());
  CHECK(coeffs == std::multiset<std::string>{"-2", "4", "4"});
  CHECK(j.at("outputs").contains("pbw"));
  for (const auto& v : j.at("verdicts")) CHECK(v.at("pass") == true);
}

TEST_CASE("zel") {
  RunResult r = run("zel --n 3 --alpha 2,1,0 --dim 3 --check-dd --homology");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j.at("outputs").at("dd_zero") == true);
  CHECK(j.at("outputs").at("homology") == json({"8", "0", "0", "0"}));

  r = run("zel --n 3 --alpha 0,2,1 --dim 2 --check-dd");
  REQUIRE(r.exit_code == 0);
  CHECK(json::parse(r.out).at("outputs").at("dd_zero") == true);

  r = run("zel --n 1 --alpha 5 --dim 2");
  REQUIRE(r.exit_code == 0);
  j = json::parse(r.out);
  REQUIRE(j.at("outputs").at("levels").size() == 1);
  CHECK(j.at("outputs").at("levels")[0].at("dim") == "6");

  CHECK(run("zel --n 3 --alpha 1,2 --dim 2").exit_code == 2);
  CHECK(run("zel --n 3 --alpha 1,2,0 --dim 0").exit_code == 2);
}

TEST_CASE("signatures") {
  RunResult r = run("signatures --n 3");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j.at("outputs").at("table").at("arrows").size() == 8);
  CHECK(j.at("verdicts")[0].at("name") == "square-property");
  CHECK(j.at("verdicts")[0].at("pass") == true);
  CHECK(run("signatures --n 1").exit_code == 2);
}

TEST_CASE("pbw") {
  RunResult r = run("pbw --shift \"0,0;2,0\"");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  auto terms = j.at("outputs").at("element").at("terms");
  REQUIRE(terms.size() == 1);
  CHECK(terms[0].at("coeff") == "1/2");

  CHECK(run("pbw --shift \"0,0;2,0\" --order reversed").exit_code == 0);
  CHECK(run("pbw --shift \"0,0;2,0\" --order sideways").exit_code == 2);
  CHECK(run("pbw").exit_code == 2);
  CHECK(run("pbw --shift-file /nonexistent.json").exit_code == 2);
}

TEST_CASE("apply") {
  // x1^2 in slot 1 of a 2x2 tensor.
  json tensor = {{"n", 2},
                 {"m", 2},
                 {"terms", {{{"coeff", "1"}, {"exponents", {{2, 0}, {0, 0}}}}}}};
  std::string path = "cli_apply_input.json";
  std::ofstream(path) << tensor.dump();
  RunResult r = run("apply --tensor " + path + " --shift \"0,0;1,0\"");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  auto terms = j.at("outputs").at("tensor").at("terms");
  REQUIRE(terms.size() == 1);
  CHECK(terms[0].at("coeff") == "2");
  CHECK(terms[0].at("exponents") == json({{1, 0}, {1, 0}}));

  CHECK(run("apply --tensor " + path).exit_code == 2);
  CHECK(run("apply --tensor /nonexistent.json --shift \"0,0;1,0\"").exit_code == 2);
  std::remove(path.c_str());
}

TEST_CASE("verify") {
  RunResult r = run("verify --suite signatures --seed 1");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j.at("outputs").at("all_pass") == true);
  CHECK(j.at("verdicts").size() > 0);

  CHECK(run("verify --suite equivalence --seed 42").exit_code == 0);
  CHECK(run("verify --suite nonsense").exit_code == 2);
}

TEST_CASE("determinism: identical invocations give byte-identical reports") {
  auto strip_timing = [](const std::string& s) {
    json j = json::parse(s);
    j.erase("timing_ms");
    return j.dump();
  };
  std::string a = strip_timing(run("verify --suite vs --seed 7").out);
  std::string b = strip_timing(run("verify --suite vs --seed 7").out);
  CHECK(a == b);
  CHECK(strip_timing(run("vs --n 3 --root 1,3 --r 1 --lambda 3,5,4 --check").out) ==
        strip_timing(run("vs --n 3 --root 1,3 --r 1 --lambda 3,5,4 --check").out));
}

TEST_CASE("help exits zero") {
  CHECK(run("--help").exit_code == 0);
  CHECK(run("frobnicate").exit_code == 2);
}
