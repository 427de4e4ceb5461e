#include "ringdef/formula.hpp"

#include <algorithm>
#include <functional>
#include <utility>

namespace ringdef {

namespace {

Term make_term(TermKind k, std::string name, Term a, Term b) {
  auto n = std::make_shared<TermNode>();
  n->kind = k;
  n->name = std::move(name);
  n->a = std::move(a);
  n->b = std::move(b);
  if (k == TermKind::Var) n->fv.insert(n->name);
  if (n->a) n->fv.insert(n->a->fv.begin(), n->a->fv.end());
  if (n->b) n->fv.insert(n->b->fv.begin(), n->b->fv.end());
  return n;
}

Formula make_formula(FormulaKind k, Term t1, Term t2, Formula f1, Formula f2, std::string v) {
  auto n = std::make_shared<FormulaNode>();
  n->kind = k;
  n->t1 = std::move(t1);
  n->t2 = std::move(t2);
  n->f1 = std::move(f1);
  n->f2 = std::move(f2);
  n->var = std::move(v);
  if (n->t1) n->fv.insert(n->t1->fv.begin(), n->t1->fv.end());
  if (n->t2) n->fv.insert(n->t2->fv.begin(), n->t2->fv.end());
  if (n->f1) n->fv.insert(n->f1->fv.begin(), n->f1->fv.end());
  if (n->f2) n->fv.insert(n->f2->fv.begin(), n->f2->fv.end());
  if (k == FormulaKind::Exists || k == FormulaKind::Forall) n->fv.erase(n->var);
  return n;
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

Term var(std::string name) {
  require(!name.empty(), "empty variable name");
  return make_term(TermKind::Var, std::move(name), nullptr, nullptr);
}
Term zero() {
  static const Term z = make_term(TermKind::Zero, "", nullptr, nullptr);
  return z;
}
Term one() {
  static const Term o = make_term(TermKind::One, "", nullptr, nullptr);
  return o;
}
Term add(Term a, Term b) {
  require(a && b, "null operand");
  return make_term(TermKind::Add, "", std::move(a), std::move(b));
}
Term neg(Term a) {
  require(a != nullptr, "null operand");
  return make_term(TermKind::Neg, "", std::move(a), nullptr);
}
Term mul(Term a, Term b) {
  require(a && b, "null operand");
  return make_term(TermKind::Mul, "", std::move(a), std::move(b));
}
Term sub(Term a, Term b) { return add(std::move(a), neg(std::move(b))); }

Term numeral(long n) {
  if (n == 0) return zero();
  if (n < 0) return neg(numeral(-n));
  Term t = one();
  for (long i = 1; i < n; ++i) t = add(t, one());
  return t;
}

Formula eq(Term a, Term b) {
  require(a && b, "null term");
  return make_formula(FormulaKind::Eq, std::move(a), std::move(b), nullptr, nullptr, "");
}
Formula in_O(Term a) {
  require(a != nullptr, "null term");
  return make_formula(FormulaKind::InO, std::move(a), nullptr, nullptr, nullptr, "");
}
Formula in_B(Term a) {
  require(a != nullptr, "null term");
  return make_formula(FormulaKind::InB, std::move(a), nullptr, nullptr, nullptr, "");
}
Formula lnot(Formula a) {
  require(a != nullptr, "null formula");
  return make_formula(FormulaKind::Not, nullptr, nullptr, std::move(a), nullptr, "");
}
Formula land(Formula a, Formula b) {
  require(a && b, "null formula");
  return make_formula(FormulaKind::And, nullptr, nullptr, std::move(a), std::move(b), "");
}
Formula lor(Formula a, Formula b) {
  require(a && b, "null formula");
  return make_formula(FormulaKind::Or, nullptr, nullptr, std::move(a), std::move(b), "");
}
Formula imp(Formula a, Formula b) {
  require(a && b, "null formula");
  return make_formula(FormulaKind::Imp, nullptr, nullptr, std::move(a), std::move(b), "");
}
Formula exists(std::string v, Formula body) {
  require(body && !v.empty(), "bad quantifier");
  return make_formula(FormulaKind::Exists, nullptr, nullptr, std::move(body), nullptr, std::move(v));
}
Formula forall(std::string v, Formula body) {
  require(body && !v.empty(), "bad quantifier");
  return make_formula(FormulaKind::Forall, nullptr, nullptr, std::move(body), nullptr, std::move(v));
}

Formula land_all(const std::vector<Formula>& parts) {
  require(!parts.empty(), "empty conjunction");
  Formula acc = parts.back();
  for (auto it = parts.rbegin() + 1; it != parts.rend(); ++it) acc = land(*it, acc);
  return acc;
}

Formula exists_all(const std::vector<std::string>& vars, Formula body) {
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) body = exists(*it, body);
  return body;
}

Formula forall_all(const std::vector<std::string>& vars, Formula body) {
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) body = forall(*it, body);
  return body;
}

const char* language_name(Language l) {
  switch (l) {
    case Language::Ring: return "L_ring";
    case Language::RingO: return "L_ring+O";
    case Language::RingB: return "L_ring+B";
  }
  return "?";
}

namespace {

bool contains_kind(const Formula& f, FormulaKind k) {
  if (!f) return false;
  if (f->kind == k) return true;
  return contains_kind(f->f1, k) || contains_kind(f->f2, k);
}

}  // namespace

bool contains_O(const Formula& f) { return contains_kind(f, FormulaKind::InO); }
bool contains_B(const Formula& f) { return contains_kind(f, FormulaKind::InB); }

Language language_of(const Formula& f) {
  bool o = contains_O(f), b = contains_B(f);
  if (o && b) throw std::invalid_argument("formula mixes O and B atoms");
  if (o) return Language::RingO;
  if (b) return Language::RingB;
  return Language::Ring;
}

bool licensed(const Formula& f, Language l) {
  switch (l) {
    case Language::Ring: return !contains_O(f) && !contains_B(f);
    case Language::RingO: return !contains_B(f);
    case Language::RingB: return !contains_O(f);
  }
  return false;
}

std::set<std::string> free_vars(const Term& t) { return t->fv; }
std::set<std::string> free_vars(const Formula& f) { return f->fv; }

namespace {

void collect_vars(const Term& t, std::set<std::string>& out) {
  out.insert(t->fv.begin(), t->fv.end());
}

void collect_vars(const Formula& f, std::set<std::string>& out) {
  if (!f) return;
  if (f->t1) collect_vars(f->t1, out);
  if (f->t2) collect_vars(f->t2, out);
  if (!f->var.empty()) out.insert(f->var);
  collect_vars(f->f1, out);
  collect_vars(f->f2, out);
}

}  // namespace

std::set<std::string> all_vars(const Formula& f) {
  std::set<std::string> out;
  collect_vars(f, out);
  return out;
}

bool equal(const Term& a, const Term& b) {
  if (a == b) return true;
  if (!a || !b || a->kind != b->kind) return false;
  if (a->kind == TermKind::Var) return a->name == b->name;
  return (a->a ? equal(a->a, b->a) : true) && (a->b ? equal(a->b, b->b) : true);
}

bool equal(const Formula& a, const Formula& b) {
  if (a == b) return true;
  if (!a || !b || a->kind != b->kind || a->var != b->var) return false;
  if (a->t1 && !equal(a->t1, b->t1)) return false;
  if (a->t2 && !equal(a->t2, b->t2)) return false;
  if (a->f1 && !equal(a->f1, b->f1)) return false;
  if (a->f2 && !equal(a->f2, b->f2)) return false;
  return true;
}

namespace {

using Binding = std::vector<std::pair<std::string, std::string>>;

bool alpha_term(const Term& a, const Term& b, const Binding& env) {
  if (a->kind != b->kind) return false;
  if (a->kind == TermKind::Var) {
    for (auto it = env.rbegin(); it != env.rend(); ++it) {
      bool left = it->first == a->name, right = it->second == b->name;
      if (left || right) return left && right;
    }
    return a->name == b->name;
  }
  return (a->a ? alpha_term(a->a, b->a, env) : true) && (a->b ? alpha_term(a->b, b->b, env) : true);
}

bool alpha_formula(const Formula& a, const Formula& b, Binding& env) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case FormulaKind::Eq: return alpha_term(a->t1, b->t1, env) && alpha_term(a->t2, b->t2, env);
    case FormulaKind::InO:
    case FormulaKind::InB: return alpha_term(a->t1, b->t1, env);
    case FormulaKind::Not: return alpha_formula(a->f1, b->f1, env);
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Imp: return alpha_formula(a->f1, b->f1, env) && alpha_formula(a->f2, b->f2, env);
    case FormulaKind::Exists:
    case FormulaKind::Forall: {
      env.emplace_back(a->var, b->var);
      bool ok = alpha_formula(a->f1, b->f1, env);
      env.pop_back();
      return ok;
    }
  }
  return false;
}

}  // namespace

bool alpha_equal(const Formula& a, const Formula& b) {
  Binding env;
  return alpha_formula(a, b, env);
}

std::string VarPool::fresh(const std::string& base, const std::set<std::string>& avoid) {
  std::string cand = base;
  while (reserved_.count(cand) || avoid.count(cand)) cand += "'";
  reserved_.insert(cand);
  ++counter_;
  return cand;
}

Term substitute_all(const Term& t, const std::map<std::string, Term>& subst) {
  if (subst.empty()) return t;
  bool touches = false;
  for (const auto& [v, _] : subst)
    if (t->fv.count(v)) { touches = true; break; }
  if (!touches) return t;
  switch (t->kind) {
    case TermKind::Var: return subst.at(t->name);
    case TermKind::Zero:
    case TermKind::One: return t;
    case TermKind::Add: return add(substitute_all(t->a, subst), substitute_all(t->b, subst));
    case TermKind::Neg: return neg(substitute_all(t->a, subst));
    case TermKind::Mul: return mul(substitute_all(t->a, subst), substitute_all(t->b, subst));
  }
  return t;
}

Term substitute(const Term& t, const std::string& v, const Term& by) { return substitute_all(t, {{v, by}}); }

namespace {

Formula subst_rec(const Formula& f, const std::map<std::string, Term>& subst, VarPool& pool) {
  std::map<std::string, Term> live;
  for (const auto& [v, t] : subst)
    if (f->fv.count(v)) live.emplace(v, t);
  if (live.empty()) return f;
  switch (f->kind) {
    case FormulaKind::Eq: return eq(substitute_all(f->t1, live), substitute_all(f->t2, live));
    case FormulaKind::InO: return in_O(substitute_all(f->t1, live));
    case FormulaKind::InB: return in_B(substitute_all(f->t1, live));
    case FormulaKind::Not: return lnot(subst_rec(f->f1, live, pool));
    case FormulaKind::And: return land(subst_rec(f->f1, live, pool), subst_rec(f->f2, live, pool));
    case FormulaKind::Or: return lor(subst_rec(f->f1, live, pool), subst_rec(f->f2, live, pool));
    case FormulaKind::Imp: return imp(subst_rec(f->f1, live, pool), subst_rec(f->f2, live, pool));
    case FormulaKind::Exists:
    case FormulaKind::Forall: {
      // the bound variable is not free in f, so it is not a key of `live`
      std::set<std::string> incoming;
      for (const auto& [v, t] : live) incoming.insert(t->fv.begin(), t->fv.end());
      std::string bound = f->var;
      std::map<std::string, Term> inner = live;
      if (incoming.count(bound)) {
        std::set<std::string> avoid = incoming;
        avoid.insert(f->f1->fv.begin(), f->f1->fv.end());
        for (const auto& [v, _] : live) avoid.insert(v);
        bound = pool.fresh(f->var, avoid);
        inner[f->var] = var(bound);
      }
      Formula body = subst_rec(f->f1, inner, pool);
      return f->kind == FormulaKind::Exists ? exists(bound, body) : forall(bound, body);
    }
  }
  return f;
}

}  // namespace

Formula substitute_all(const Formula& f, const std::map<std::string, Term>& subst, VarPool* pool) {
  VarPool local;
  return subst_rec(f, subst, pool ? *pool : local);
}

Formula substitute(const Formula& f, const std::string& v, const Term& by, VarPool* pool) {
  return substitute_all(f, {{v, by}}, pool);
}

namespace {

void print_term_to(const Term& t, std::string& out) {
  switch (t->kind) {
    case TermKind::Var: out += t->name; return;
    case TermKind::Zero: out += '0'; return;
    case TermKind::One: out += '1'; return;
    case TermKind::Add:
    case TermKind::Mul:
      out += t->kind == TermKind::Add ? "(+ " : "(* ";
      print_term_to(t->a, out);
      out += ' ';
      print_term_to(t->b, out);
      out += ')';
      return;
    case TermKind::Neg:
      out += "(- ";
      print_term_to(t->a, out);
      out += ')';
      return;
  }
}

void print_formula_to(const Formula& f, std::string& out) {
  switch (f->kind) {
    case FormulaKind::Eq:
      out += "(= ";
      print_term_to(f->t1, out);
      out += ' ';
      print_term_to(f->t2, out);
      out += ')';
      return;
    case FormulaKind::InO:
    case FormulaKind::InB:
      out += f->kind == FormulaKind::InO ? "(in-O " : "(in-B ";
      print_term_to(f->t1, out);
      out += ')';
      return;
    case FormulaKind::Not:
      out += "(not ";
      print_formula_to(f->f1, out);
      out += ')';
      return;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Imp:
      out += f->kind == FormulaKind::And ? "(and " : f->kind == FormulaKind::Or ? "(or " : "(imp ";
      print_formula_to(f->f1, out);
      out += ' ';
      print_formula_to(f->f2, out);
      out += ')';
      return;
    case FormulaKind::Exists:
    case FormulaKind::Forall:
      out += f->kind == FormulaKind::Exists ? "(exists " : "(forall ";
      out += f->var;
      out += ' ';
      print_formula_to(f->f1, out);
      out += ')';
      return;
  }
}

int term_prec(const Term& t) {
  switch (t->kind) {
    case TermKind::Add: return 1;
    case TermKind::Mul: return 2;
    case TermKind::Neg: return 3;
    default: return 4;
  }
}

std::string infix_term(const Term& t) {
  auto wrap = [](const Term& sub, int min_prec) {
    std::string s = infix_term(sub);
    return term_prec(sub) < min_prec ? "(" + s + ")" : s;
  };
  switch (t->kind) {
    case TermKind::Var: return t->name;
    case TermKind::Zero: return "0";
    case TermKind::One: return "1";
    case TermKind::Add:
      if (t->b->kind == TermKind::Neg) return wrap(t->a, 1) + " - " + wrap(t->b->a, 2);
      return wrap(t->a, 1) + " + " + wrap(t->b, 2);
    case TermKind::Mul: return wrap(t->a, 2) + "·" + wrap(t->b, 3);
    case TermKind::Neg: return "-" + wrap(t->a, 3);
  }
  return "?";
}

std::string infix_formula(const Formula& f) {
  auto wrap = [](const Formula& sub) {
    bool atomic = sub->kind == FormulaKind::Eq || sub->kind == FormulaKind::InO || sub->kind == FormulaKind::InB ||
                  sub->kind == FormulaKind::Not || sub->kind == FormulaKind::Exists ||
                  sub->kind == FormulaKind::Forall;
    std::string s = infix_formula(sub);
    return atomic ? s : "(" + s + ")";
  };
  switch (f->kind) {
    case FormulaKind::Eq: return infix_term(f->t1) + " = " + infix_term(f->t2);
    case FormulaKind::InO: return infix_term(f->t1) + " ∈ O";
    case FormulaKind::InB: return infix_term(f->t1) + " ∈ B";
    case FormulaKind::Not: return "¬" + wrap(f->f1);
    case FormulaKind::And: return wrap(f->f1) + " ∧ " + wrap(f->f2);
    case FormulaKind::Or: return wrap(f->f1) + " ∨ " + wrap(f->f2);
    case FormulaKind::Imp: return wrap(f->f1) + " → " + wrap(f->f2);
    case FormulaKind::Exists: return "∃" + f->var + " " + wrap(f->f1);
    case FormulaKind::Forall: return "∀" + f->var + " " + wrap(f->f1);
  }
  return "?";
}

std::size_t term_nodes(const Term& t) {
  return 1 + (t->a ? term_nodes(t->a) : 0) + (t->b ? term_nodes(t->b) : 0);
}

void stats_rec(const Formula& f, std::size_t depth, FormulaStats& s) {
  ++s.nodes;
  if (f->t1) s.nodes += term_nodes(f->t1);
  if (f->t2) s.nodes += term_nodes(f->t2);
  if (f->t1) ++s.atoms;
  if (f->kind == FormulaKind::Exists || f->kind == FormulaKind::Forall) {
    ++s.quantifiers;
    ++depth;
    s.quantifier_depth = std::max(s.quantifier_depth, depth);
  }
  if (f->f1) stats_rec(f->f1, depth, s);
  if (f->f2) stats_rec(f->f2, depth, s);
}

}  // namespace

std::string print_term(const Term& t) {
  std::string out;
  print_term_to(t, out);
  return out;
}

std::string print_formula(const Formula& f) {
  std::string out;
  print_formula_to(f, out);
  return out;
}

std::string print_infix(const Formula& f) { return infix_formula(f); }

FormulaStats stats(const Formula& f) {
  FormulaStats s;
  stats_rec(f, 0, s);
  return s;
}

}  // namespace ringdef
