#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ringdef {

enum class TermKind { Var, Zero, One, Add, Neg, Mul };

struct TermNode;
using Term = std::shared_ptr<const TermNode>;

struct TermNode {
  TermKind kind;
  std::string name;  // Var only
  Term a;
  Term b;
  std::set<std::string> fv;  // cached at construction
};

Term var(std::string name);
Term zero();
Term one();
Term add(Term a, Term b);
Term neg(Term a);
Term mul(Term a, Term b);
// a + (-b)
Term sub(Term a, Term b);
// 1 + 1 + ... (n >= 0 copies), 0 for n = 0; negative n negates.
Term numeral(long n);

enum class FormulaKind { Eq, InO, InB, Not, And, Or, Imp, Exists, Forall };

struct FormulaNode;
using Formula = std::shared_ptr<const FormulaNode>;

struct FormulaNode {
  FormulaKind kind;
  Term t1;  // atoms
  Term t2;  // Eq only
  Formula f1;
  Formula f2;
  std::string var;  // quantifiers
  std::set<std::string> fv;  // cached at construction
};

Formula eq(Term a, Term b);
Formula in_O(Term a);
Formula in_B(Term a);
Formula lnot(Formula a);
Formula land(Formula a, Formula b);
Formula lor(Formula a, Formula b);
Formula imp(Formula a, Formula b);
Formula exists(std::string v, Formula body);
Formula forall(std::string v, Formula body);
// Right-nested conjunction; a single element is returned as is. Empty throws.
Formula land_all(const std::vector<Formula>& parts);
Formula exists_all(const std::vector<std::string>& vars, Formula body);
Formula forall_all(const std::vector<std::string>& vars, Formula body);

enum class Language { Ring, RingO, RingB };

const char* language_name(Language l);
bool contains_O(const Formula& f);
bool contains_B(const Formula& f);
// Smallest tag licensing every atom. Throws std::invalid_argument when both
// O and B atoms occur.
Language language_of(const Formula& f);
bool licensed(const Formula& f, Language l);

std::set<std::string> free_vars(const Term& t);
std::set<std::string> free_vars(const Formula& f);
// Every variable name occurring anywhere, bound or free.
std::set<std::string> all_vars(const Formula& f);

bool equal(const Term& a, const Term& b);
bool equal(const Formula& a, const Formula& b);
bool alpha_equal(const Formula& a, const Formula& b);

class VarPool {
 public:
  VarPool() = default;
  explicit VarPool(std::set<std::string> reserved) : reserved_(std::move(reserved)) {}
  void reserve(const std::string& name) { reserved_.insert(name); }
  void reserve(const std::set<std::string>& names) { reserved_.insert(names.begin(), names.end()); }
  bool taken(const std::string& name) const { return reserved_.count(name) > 0; }
  // base, base', base'', ... first one not reserved, not issued, not in avoid.
  std::string fresh(const std::string& base, const std::set<std::string>& avoid = {});
  std::size_t issued() const { return counter_; }

 private:
  std::set<std::string> reserved_;
  std::size_t counter_ = 0;
};

Term substitute(const Term& t, const std::string& v, const Term& by);
// Capture-avoiding; bound variables are renamed through `pool` when needed.
Formula substitute(const Formula& f, const std::string& v, const Term& by, VarPool* pool = nullptr);
// Simultaneous capture-avoiding substitution.
Formula substitute_all(const Formula& f, const std::map<std::string, Term>& subst, VarPool* pool = nullptr);
Term substitute_all(const Term& t, const std::map<std::string, Term>& subst);

std::string print_term(const Term& t);
std::string print_formula(const Formula& f);
// Human-oriented infix rendering; not parseable.
std::string print_infix(const Formula& f);

struct FormulaStats {
  std::size_t nodes = 0;        // formula and term nodes
  std::size_t quantifiers = 0;  // quantifier nodes
  std::size_t quantifier_depth = 0;
  std::size_t atoms = 0;
};
FormulaStats stats(const Formula& f);

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class UnknownPredicate : public std::runtime_error {
 public:
  UnknownPredicate(const std::string& predicate, std::size_t offset, Language lang)
      : std::runtime_error("unknown predicate " + predicate + " in " + language_name(lang) + " at byte " +
                           std::to_string(offset)),
        predicate_(predicate),
        offset_(offset) {}
  const std::string& predicate() const { return predicate_; }
  std::size_t offset() const { return offset_; }

 private:
  std::string predicate_;
  std::size_t offset_;
};

// Without a language every atom is accepted, but O and B atoms may not mix.
Formula parse_formula(std::string_view text);
Formula parse_formula(std::string_view text, Language lang);
Term parse_term(std::string_view text);

}  // namespace ringdef
