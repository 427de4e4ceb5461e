// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "ringdef/suites.hpp"

using namespace ringdef;

namespace {

// Wall-clock budgets in seconds, per criterion.
constexpr double kBudget[11] = {0, 10, 10, 5, 60, 30, 10, 60, 120, 5, 600};
// Lifting cases that must come out definite.
constexpr std::size_t kMinDefiniteLifts = 150;

struct Outcome {
  bool ok = true;
  std::string note;
};

void require(Outcome& o, bool cond, const std::string& what) {
  if (!cond && o.ok) {
    o.ok = false;
    o.note = what;
  }
}

// Every case agrees with its oracle, nothing unchecked or unknown.
void all_agree(Outcome& o, const Report& r, const std::string& prefix, std::size_t want) {
  auto cs = cases_with_prefix(r, prefix);
  require(o, cs.size() == want, prefix + ": " + std::to_string(cs.size()) + " cases, want " + std::to_string(want));
  for (const auto* c : cs) require(o, c->status == CaseStatus::Agree, c->id + ": " + c->verdict + " / " + c->detail);
}

std::string counts(const Report& r) {
  auto s = r.summary();
  return std::to_string(s.cases) + " cases, " + std::to_string(s.agree) + " agree, " + std::to_string(s.unknown) +
         " unknown, " + std::to_string(s.soundness_violations) + " violations";
}

Outcome ac1() {
  Outcome o;
  Report r = run_suite("jacobson");
  all_agree(o, r, "jacobson/agree/", 12);
  require(o, r.summary().soundness_violations == 0, "eval contradicts the Jacobson oracle");
  require(o, r.ok(), "suite not ok");
  o.note = o.ok ? counts(r) : o.note;
  return o;
}

Outcome ac2() {
  Outcome o;
  Report r = run_suite("combine");
  all_agree(o, r, "combine/form(x^2 + y^2)/", 6);
  all_agree(o, r, "combine/uv-valued(", 3);
  o.note = o.ok ? counts(r) : o.note;
  return o;
}

Outcome ac3() {
  Outcome o;
  Report r = run_suite("origin");
  all_agree(o, r, "origin/form(x^2 + y^2)/", 3);
  all_agree(o, r, "origin/uv-valued(padic-q:3)", 1);
  all_agree(o, r, "origin/uv-valued(padic-q:5)", 1);
  require(o, r.ok(), "suite not ok");
  o.note = o.ok ? counts(r) : o.note;
  return o;
}

Outcome ac4() {
  Outcome o;
  Report a = run_suite("chunks-n8");
  Report m = run_suite("chunks-mult");
  all_agree(o, a, "chunks-n8/exact", 1);
  all_agree(o, a, "chunks-n8/{", 8);
  all_agree(o, m, "chunks-mult/exact", 1);
  all_agree(o, m, "chunks-mult/transport/", 6);
  require(o, a.ok() && m.ok(), "suite not ok");
  o.note = o.ok ? cases_with_prefix(a, "chunks-n8/exact").front()->detail + "; " +
                      cases_with_prefix(m, "chunks-mult/exact").front()->detail
                : o.note;
  return o;
}

Outcome ac5() {
  Outcome o;
  Report r = run_suite("germs");
  for (const char* p : {"germs/affine/ordered-q/", "germs/affine/padic-q:3/", "germs/congruence/"}) all_agree(o, r, p, 8);
  all_agree(o, r, "germs/affine-mutant/", 16);
  all_agree(o, r, "germs/congruence-mutant/", 8);
  all_agree(o, r, "germs/congruence-global/", 8);
  require(o, r.ok(), "suite not ok");
  o.note = o.ok ? counts(r) : o.note;
  return o;
}

Outcome ac6() {
  Outcome o;
  Report r = run_suite("limits");
  all_agree(o, r, "limits/", 50);
  o.note = o.ok ? counts(r) : o.note;
  return o;
}

Outcome ac7() {
  Outcome o;
  Report r = run_suite("lifting");
  auto cs = cases_with_prefix(r, "lifting/");
  std::size_t definite = 0;
  for (const auto* c : cs) {
    require(o, c->status != CaseStatus::Disagree, c->id + " contradicts the pointwise oracle");
    definite += c->status == CaseStatus::Agree;
  }
  require(o, cs.size() == 200, "expected 200 lifting cases");
  require(o, definite >= kMinDefiniteLifts, "only " + std::to_string(definite) + " definite verdicts");
  o.note = o.ok ? std::to_string(definite) + " of " + std::to_string(cs.size()) + " definite, 0 contradictions" : o.note;
  return o;
}

Outcome ac8() {
  Outcome o;
  Report r = run_suite("int-times");
  auto yes = cases_with_prefix(r, "int-times/true/");
  auto no = cases_with_prefix(r, "int-times/false/");
  require(o, yes.size() == 20 && no.size() == 20, "expected 20 + 20 cases");
  for (const auto* c : yes) require(o, c->verdict == "Holds", c->id + ": " + c->verdict);
  for (const auto* c : no) require(o, c->verdict != "Holds", c->id + " accepted");
  require(o, r.summary().soundness_violations == 0, "soundness violation");
  o.note = o.ok ? "20 Holds; false cases " + counts(r) : o.note;
  return o;
}

Outcome ac9() {
  Outcome o;
  Report r = run_suite("z-interp");
  all_agree(o, r, "z-interp/padic-q:3/", 169);
  all_agree(o, r, "z-interp/ordered-q/", 169);
  o.note = o.ok ? counts(r) : o.note;
  return o;
}

Outcome ac10() {
  Outcome o;
  SuiteOptions opt;
  opt.seed = 20261017;
  Report a = run_suite("all", opt);
  Report b = run_suite("all", opt);
  require(o, a.summary().soundness_violations == 0, std::to_string(a.summary().soundness_violations) + " violations");
  require(o, a.summary().disagree == 0, "oracle disagreements");
  require(o, to_json(a) == to_json(b), "reports differ between reruns");
  o.note = o.ok ? counts(a) + ", reruns identical" : o.note;
  return o;
}

}  // namespace

int main() {
  const std::vector<std::function<Outcome()>> criteria{ac1, ac2, ac3, ac4, ac5, ac6, ac7, ac8, ac9, ac10};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > kBudget[i + 1]) o = {false, "took " + std::to_string(secs) + " s, budget " + std::to_string(kBudget[i + 1])};
    std::printf("AC%zu %s (%.2f s) %s\n", i + 1, o.ok ? "PASS" : "FAIL", secs, o.note.c_str());
    failed += !o.ok;
  }
  return failed == 0 ? 0 : 1;
}
