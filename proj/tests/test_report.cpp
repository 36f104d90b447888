// Tests for the check-report wire formats: byte-exact JSON lines with fixed
// key order, tab-separated text lines, and the process exit-code policy.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "locdeg/report.hpp"

using namespace locdeg;

TEST_CASE("status names") {
  CHECK(to_string(CheckStatus::kPass) == "pass");
  CHECK(to_string(CheckStatus::kFail) == "fail");
  CHECK(to_string(CheckStatus::kSkipped) == "skipped");
}

TEST_CASE("JSON lines use fixed key order and null for absent fields") {
  CheckReport minimal;
  minimal.theorem = "T2.2";
  minimal.instance = "complete n=5";
  CHECK(to_json_line(minimal) ==
        R"({"theorem":"T2.2","instance":"complete n=5","status":"pass",)"
        R"("witness":null,"millis":0,"seed":null})");

  CheckReport full;
  full.theorem = "P2.7";
  full.instance = "lambda-gap-family k=3";
  full.status = CheckStatus::kFail;
  full.witness = R"({"kappa":3,"cut":[8,2]})";
  full.millis = 17;
  full.seed = 42;
  // The witness object's own key order survives re-serialisation even when
  // it is not alphabetical.
  CHECK(to_json_line(full) ==
        R"({"theorem":"P2.7","instance":"lambda-gap-family k=3",)"
        R"("status":"fail","witness":{"kappa":3,"cut":[8,2]},)"
        R"("millis":17,"seed":42})");

  CheckReport skip;
  skip.theorem = "T3.3";
  skip.instance = "petersen";
  skip.status = CheckStatus::kSkipped;
  skip.witness = R"({"reason":"budget exhausted","limit":100})";
  skip.budget_exhausted = true;
  // budget_exhausted feeds the exit code only; it is not its own JSON key.
  CHECK(to_json_line(skip) ==
        R"({"theorem":"T3.3","instance":"petersen","status":"skipped",)"
        R"("witness":{"reason":"budget exhausted","limit":100},)"
        R"("millis":0,"seed":null})");

  CheckReport quoted;
  quoted.theorem = "T1.1";
  quoted.instance = "graph \"odd\"\tname";
  CHECK(to_json_line(quoted) ==
        R"({"theorem":"T1.1","instance":"graph \"odd\"\tname",)"
        R"("status":"pass","witness":null,"millis":0,"seed":null})");
}

TEST_CASE("text lines are tab separated with the witness as a trailing field") {
  CheckReport plain;
  plain.theorem = "T2.5";
  plain.instance = "path-strong-k3 m=6";
  CHECK(to_text_line(plain) == "pass\tT2.5\tpath-strong-k3 m=6");

  CheckReport with_witness = plain;
  with_witness.status = CheckStatus::kFail;
  with_witness.witness = R"({"diameter":7,"bound":5})";
  CHECK(to_text_line(with_witness) ==
        "fail\tT2.5\tpath-strong-k3 m=6\t{\"diameter\":7,\"bound\":5}");

  // Timing and seed never appear in the text form.
  with_witness.millis = 99;
  with_witness.seed = 7;
  CHECK(to_text_line(with_witness) ==
        "fail\tT2.5\tpath-strong-k3 m=6\t{\"diameter\":7,\"bound\":5}");
}

TEST_CASE("report streams emit one line per check") {
  CheckReport first;
  first.theorem = "T2.6";
  first.instance = "petersen";
  CheckReport second;
  second.theorem = "T2.3";
  second.instance = "complete n=9";
  second.status = CheckStatus::kFail;
  second.witness = R"({"min_degree":8,"vertex":0})";
  const std::vector<CheckReport> reports = {first, second};

  std::ostringstream json;
  write_reports(json, reports, ReportFormat::kJson);
  CHECK(json.str() ==
        to_json_line(first) + "\n" + to_json_line(second) + "\n");

  std::ostringstream text;
  write_reports(text, reports, ReportFormat::kText);
  CHECK(text.str() ==
        "pass\tT2.6\tpetersen\n"
        "fail\tT2.3\tcomplete n=9\t{\"min_degree\":8,\"vertex\":0}\n");

  std::ostringstream empty;
  write_reports(empty, {}, ReportFormat::kJson);
  CHECK(empty.str().empty());
}

TEST_CASE("exit codes: failures beat budget exhaustion beats success") {
  CHECK(exit_code_for({}) == 0);

  CheckReport pass;
  pass.theorem = "T1.1";
  pass.instance = "complete n=4";
  CHECK(exit_code_for({pass, pass}) == 0);

  CheckReport skip = pass;
  skip.status = CheckStatus::kSkipped;
  // A skip for an unmet hypothesis is not an error.
  CHECK(exit_code_for({pass, skip}) == 0);

  CheckReport starved = skip;
  starved.budget_exhausted = true;
  CHECK(exit_code_for({pass, starved}) == 3);

  CheckReport fail = pass;
  fail.status = CheckStatus::kFail;
  CHECK(exit_code_for({pass, fail}) == 1);
  CHECK(exit_code_for({starved, fail, pass}) == 1);
}
