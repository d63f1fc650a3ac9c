#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace maglap {

// A verified computation that disagrees with a display in the source
// derivation.  These are first-class results: the suite still passes when
// the verified form holds and the printed form is the one that fails.
struct Discrepancy {
  std::string identity;
  std::string paper_location;
  std::string observed;
  std::string expected;
};

struct CaseResult {
  std::string name;
  bool passed;
  std::string detail;
};

struct VerificationReport {
  std::string suite;
  int cases_run = 0;
  int cases_passed = 0;
  std::vector<CaseResult> cases;
  std::vector<Discrepancy> discrepancies;

  bool all_passed() const { return cases_passed == cases_run; }
};

struct VerifyOptions {
  int n = 1;
  double mu = 1.0;
  double nu = 0.0;
  int max_degree = 3;
  std::uint64_t seed = 1;
  int l = 2;
};

// Suites runnable individually; "all" concatenates them in this order.
const std::vector<std::string>& suite_names();

bool suite_known(const std::string& suite);

VerificationReport run_suite(const std::string& suite,
                             const VerifyOptions& opt);

std::string to_json(const VerificationReport& report);

}  // namespace maglap
