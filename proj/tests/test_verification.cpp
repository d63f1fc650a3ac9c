#include <doctest.h>

#include "maglap/errors.hpp"
#include "maglap/verification.hpp"

using namespace maglap;

TEST_CASE("every individual suite passes with default options") {
  VerifyOptions opt;
  for (const std::string& name : suite_names()) {
    if (name == "all") continue;
    CAPTURE(name);
    VerificationReport r = run_suite(name, opt);
    CHECK(r.cases_run > 0);
    CHECK(r.all_passed());
    for (const CaseResult& c : r.cases) {
      CAPTURE(c.name);
      CHECK(c.passed);
    }
  }
}

TEST_CASE("suites surface the documented discrepancies") {
  VerifyOptions opt;
  CHECK(run_suite("group", opt).discrepancies.size() == 1);
  CHECK(run_suite("fields", opt).discrepancies.size() == 1);
  CHECK(run_suite("ladder", opt).discrepancies.size() == 3);
  CHECK(run_suite("symmetry", opt).discrepancies.size() == 1);
  CHECK(run_suite("kernel", opt).discrepancies.empty());
  CHECK(run_suite("operators", opt).discrepancies.empty());
  CHECK(run_suite("orthogonality", opt).discrepancies.empty());
}

TEST_CASE("the aggregate run concatenates and stays deterministic") {
  VerifyOptions opt;
  opt.nu = 0.3;
  opt.seed = 7;
  VerificationReport a = run_suite("all", opt);
  CHECK(a.all_passed());
  CHECK(a.discrepancies.size() == 6);
  std::string first = to_json(a);
  std::string second = to_json(run_suite("all", opt));
  CHECK(first == second);
}

TEST_CASE("suite dispatch validates names") {
  CHECK(suite_known("kernel"));
  CHECK(suite_known("all"));
  CHECK(!suite_known("bogus"));
  CHECK_THROWS_AS(run_suite("bogus", VerifyOptions{}), InvalidParameter);
}

TEST_CASE("reports count cases consistently") {
  VerifyOptions opt;
  opt.n = 2;
  opt.seed = 3;
  VerificationReport r = run_suite("group", opt);
  CHECK(r.cases_run == static_cast<int>(r.cases.size()));
  int passed = 0;
  for (const CaseResult& c : r.cases) passed += c.passed ? 1 : 0;
  CHECK(passed == r.cases_passed);
}
