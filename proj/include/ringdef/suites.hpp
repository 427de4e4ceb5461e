#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ringdef {

struct SuiteOptions {
  int depth = 1;
  std::uint64_t seed = 1;
  bool timings = false;
};

enum class CaseStatus { Agree, Unknown, Disagree, Unchecked };
const char* status_name(CaseStatus s);

struct CaseResult {
  std::string id;
  std::string formula;
  std::string model;
  std::string verdict;   // Holds, Fails or Unknown
  std::string expected;  // oracle verdict, empty when there is none
  bool from_eval = false;  // verdict produced by eval_bounded
  bool strict = false;     // an Unknown verdict counts as a failure
  std::map<std::string, std::string> witness;
  std::map<std::string, std::string> counterexample;
  std::string detail;
  double millis = 0;
  CaseStatus status = CaseStatus::Unchecked;
};

struct Summary {
  std::size_t cases = 0;
  std::size_t holds = 0;
  std::size_t fails = 0;
  std::size_t unknown = 0;
  std::size_t agree = 0;
  std::size_t disagree = 0;
  // definite eval_bounded verdicts contradicting an oracle
  std::size_t soundness_violations = 0;
  // property checks or required verdicts that did not come out as expected
  std::size_t property_failures = 0;
};

struct Report {
  std::string suite;
  SuiteOptions options;
  std::vector<CaseResult> cases;

  Summary summary() const;
  bool ok() const;
};

std::vector<std::string> suite_names();
// Throws std::invalid_argument for an unknown name.
Report run_suite(const std::string& name, const SuiteOptions& opt = {});
// Cases of one suite matching an id prefix, e.g. "lifting/" or "jacobson/agree".
std::vector<const CaseResult*> cases_with_prefix(const Report& r, const std::string& prefix);

std::string to_json(const Report& r, int indent = 2);
std::string to_text(const Report& r);

}  // namespace ringdef
