#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ringdef/formula.hpp"
#include "ringdef/model.hpp"

namespace ringdef {

enum class VerdictKind { Holds, Fails, Unknown };
const char* verdict_name(VerdictKind v);

struct Verdict {
  VerdictKind value = VerdictKind::Unknown;
  std::string reason;
  // Values of the outermost quantifier block that decided the verdict.
  std::map<std::string, std::string> witness;
  std::map<std::string, std::string> counterexample;
  std::size_t witnesses_tried = 0;
  std::size_t depth = 0;  // deepest quantifier nesting visited
};

struct EvalOptions {
  int depth = 1;  // rounds of sums and products over the base pool
  bool macros = true;
  std::size_t block_budget = 20000;  // tuples per quantifier block
  std::size_t pool_cap = 48;
  long valuation_window = 40;
  // Extra candidates by bound variable name; tried first. Names with
  // trailing primes also pick up the hints of the bare name.
  std::map<std::string, std::vector<Value>> hints;
};

using Env = std::map<std::string, Value>;

// Three-valued satisfaction. Holds and Fails are sound: an existential is
// only accepted with a witness and a universal only refuted with a
// counterexample, unless the candidate set is complete for the body. Free
// variables missing from env are read universally over the model's pool.
// Throws std::invalid_argument when a free variable is unassigned and the
// pool is empty.
Verdict eval_bounded(const Formula& f, const Model& m, const Env& env = {}, const EvalOptions& opt = {});

struct MacroMatch {
  MacroKind kind;
  std::vector<Term> args;  // in the order of the schema parameters
};

// Recognizes a schema instance at the root of f, up to renaming of bound
// variables.
std::optional<MacroMatch> match_macro(const Formula& f);

}  // namespace ringdef
