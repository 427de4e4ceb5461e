#include "ringdef/eval.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "ringdef/poly.hpp"
#include "ringdef/schemas.hpp"

namespace ringdef {

const char* verdict_name(VerdictKind v) {
  switch (v) {
    case VerdictKind::Holds: return "Holds";
    case VerdictKind::Fails: return "Fails";
    case VerdictKind::Unknown: return "Unknown";
  }
  return "?";
}

namespace {

// ---- macro recognition

std::size_t mix(std::size_t h, std::size_t v) { return h * 1000003u ^ (v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2)); }

// Shape of the formula tree, ignoring terms and variable names.
std::size_t skeleton(const Formula& f, std::unordered_map<const FormulaNode*, std::size_t>* cache) {
  if (cache) {
    auto it = cache->find(f.get());
    if (it != cache->end()) return it->second;
  }
  std::size_t h = static_cast<std::size_t>(f->kind) + 1;
  if (f->f1) h = mix(h, skeleton(f->f1, cache));
  if (f->f2) h = mix(h, skeleton(f->f2, cache));
  if (cache) (*cache)[f.get()] = h;
  return h;
}

struct Template {
  MacroKind kind;
  Schema schema;
  std::size_t skel;
  std::set<std::string> params;
};

const std::vector<Template>& templates() {
  static const std::vector<Template> all = [] {
    std::vector<std::pair<MacroKind, Schema>> list{
        {MacroKind::Limit, limit_schema()},
        {MacroKind::LimBChTimes, limbch_times()},
        {MacroKind::LimBChPlus, limbch_plus()},
        {MacroKind::Point, point_inter_isol().point},
        {MacroKind::Inter, point_inter_isol().inter},
        {MacroKind::LeqS, bounded_comparisons().weak},
        {MacroKind::LtS, bounded_comparisons().strict},
        {MacroKind::PrecS, order_comparisons().weak},
        {MacroKind::PrecStrictS, order_comparisons().strict},
        {MacroKind::StrongOrder, strong_order_schema()},
        {MacroKind::Unit, unit_schema()},
        {MacroKind::Sq, sqsubseteq()},
    };
    std::vector<Template> out;
    for (auto& [k, s] : list) {
      std::size_t h = skeleton(s.body, nullptr);
      std::set<std::string> ps(s.params.begin(), s.params.end());
      out.push_back({k, std::move(s), h, std::move(ps)});
    }
    return out;
  }();
  return all;
}

class Matcher {
 public:
  explicit Matcher(const std::set<std::string>& params) : params_(params) {}

  bool formula(const Formula& tp, const Formula& tg) {
    if (tp->kind != tg->kind) return false;
    switch (tp->kind) {
      case FormulaKind::Eq: return term(tp->t1, tg->t1) && term(tp->t2, tg->t2);
      case FormulaKind::InO:
      case FormulaKind::InB: return term(tp->t1, tg->t1);
      case FormulaKind::Not: return formula(tp->f1, tg->f1);
      case FormulaKind::And:
      case FormulaKind::Or:
      case FormulaKind::Imp: return formula(tp->f1, tg->f1) && formula(tp->f2, tg->f2);
      case FormulaKind::Exists:
      case FormulaKind::Forall: {
        scope_.emplace_back(tp->var, tg->var);
        bool ok = formula(tp->f1, tg->f1);
        scope_.pop_back();
        return ok;
      }
    }
    return false;
  }

  std::map<std::string, Term> bind;

 private:
  bool term(const Term& tp, const Term& tg) {
    if (tp->kind == TermKind::Var) {
      for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
        if (it->first == tp->name) return tg->kind == TermKind::Var && tg->name == it->second;
      if (!params_.count(tp->name)) return tg->kind == TermKind::Var && tg->name == tp->name;
      auto b = bind.find(tp->name);
      if (b != bind.end()) return equal(b->second, tg);
      for (const auto& [unused, bound] : scope_)
        if (tg->fv.count(bound)) return false;
      bind.emplace(tp->name, tg);
      return true;
    }
    if (tp->kind != tg->kind) return false;
    if (tp->a && !term(tp->a, tg->a)) return false;
    if (tp->b && !term(tp->b, tg->b)) return false;
    return true;
  }

  const std::set<std::string>& params_;
  std::vector<std::pair<std::string, std::string>> scope_;
};

std::optional<MacroMatch> match_with(const Formula& f, std::size_t skel) {
  for (const auto& t : templates()) {
    if (t.skel != skel) continue;
    Matcher m(t.params);
    if (!m.formula(t.schema.body, f)) continue;
    MacroMatch out{t.kind, {}};
    for (const auto& p : t.schema.params) out.args.push_back(m.bind.at(p));
    return out;
  }
  return std::nullopt;
}

// ---- helpers

bool is_monomial_in(const std::string& v, const Term& t) {
  if (!t->fv.count(v)) return true;
  switch (t->kind) {
    case TermKind::Var: return true;
    case TermKind::Mul: return is_monomial_in(v, t->a) && is_monomial_in(v, t->b);
    case TermKind::Neg: return is_monomial_in(v, t->a);
    default: return false;
  }
}

int degree_in(const std::string& v, const Term& t) {
  switch (t->kind) {
    case TermKind::Var: return t->name == v ? 1 : 0;
    case TermKind::Zero:
    case TermKind::One: return 0;
    case TermKind::Add: return std::max(degree_in(v, t->a), degree_in(v, t->b));
    case TermKind::Neg: return degree_in(v, t->a);
    case TermKind::Mul: return degree_in(v, t->a) + degree_in(v, t->b);
  }
  return 0;
}

void conjuncts(const Formula& f, std::vector<Formula>& out) {
  if (f->kind == FormulaKind::And) {
    conjuncts(f->f1, out);
    conjuncts(f->f2, out);
  } else {
    out.push_back(f);
  }
}

Tri kleene_and(Tri a, Tri b) {
  if (a == Tri::False || b == Tri::False) return Tri::False;
  if (a == Tri::True && b == Tri::True) return Tri::True;
  return Tri::Unknown;
}
Tri kleene_not(Tri a) { return a == Tri::True ? Tri::False : a == Tri::False ? Tri::True : Tri::Unknown; }

std::string strip_primes(std::string s) {
  while (!s.empty() && s.back() == '\'') s.pop_back();
  return s;
}

using PointSet = std::set<std::size_t>;
using Marks = std::map<std::string, std::optional<PointSet>>;

struct Zone {
  bool all = false;
  PointSet pts;
  bool inb_pos = false;
  bool inb_neg = false;
};

struct Collected {
  std::vector<Poly> eqs;    // c matters through P(c) = 0
  std::vector<Poly> os;     // through Q(c) in O
  std::vector<Poly> signs;  // through the sign of S(c), ordered hosts
  bool complete = true;
};

struct Candidates {
  std::vector<Value> values;
  bool complete = false;
};

class Evaluator {
 public:
  Evaluator(const Model& m, const EvalOptions& o)
      : m_(m), o_(o), fr_(dynamic_cast<const FiniteRingModel*>(&m)) {}

  std::size_t tried = 0;
  std::size_t max_depth = 0;

  Value term(const Term& t, const Env& env) {
    switch (t->kind) {
      case TermKind::Var: {
        auto it = env.find(t->name);
        if (it == env.end()) throw std::invalid_argument("unassigned variable " + t->name);
        return it->second;
      }
      case TermKind::Zero: return m_.constant(0);
      case TermKind::One: return m_.constant(1);
      case TermKind::Add: return m_.add(term(t->a, env), term(t->b, env));
      case TermKind::Neg: return m_.neg(term(t->a, env));
      case TermKind::Mul: return m_.mul(term(t->a, env), term(t->b, env));
    }
    throw std::logic_error("unreachable");
  }

  // Receives the witness or counterexample of the next quantifier block.
  Verdict* top = nullptr;

  Tri eval(const Formula& f, Env& env, std::size_t depth) {
    max_depth = std::max(max_depth, depth);
    Verdict* record = std::exchange(top, nullptr);
    if (const auto& mm = macro(f)) {
      std::vector<Value> args;
      for (const auto& a : mm->args) args.push_back(term(a, env));
      if (auto r = m_.macro(mm->kind, args)) return *r;
    }
    switch (f->kind) {
      case FormulaKind::Eq:
        if (equal(f->t1, f->t2)) return Tri::True;
        return m_.eq(term(f->t1, env), term(f->t2, env));
      case FormulaKind::InO: return m_.in_O(term(f->t1, env));
      case FormulaKind::InB: return m_.in_B(term(f->t1, env));
      case FormulaKind::Not: return kleene_not(eval(f->f1, env, depth));
      case FormulaKind::And: {
        Tri a = eval(f->f1, env, depth);
        if (a == Tri::False) return a;
        return kleene_and(a, eval(f->f2, env, depth));
      }
      case FormulaKind::Or: {
        Tri a = eval(f->f1, env, depth);
        if (a == Tri::True) return a;
        return kleene_not(kleene_and(kleene_not(a), kleene_not(eval(f->f2, env, depth))));
      }
      case FormulaKind::Imp: {
        Tri a = eval(f->f1, env, depth);
        if (a == Tri::False) return Tri::True;
        return kleene_not(kleene_and(a, kleene_not(eval(f->f2, env, depth))));
      }
      case FormulaKind::Exists:
      case FormulaKind::Forall: return block(f, env, depth, record);
    }
    throw std::logic_error("unreachable");
  }

  // A maximal run of quantifiers of one kind, searched jointly in layers
  // of increasing maximal candidate index.
  Tri block(const Formula& f, Env& env, std::size_t depth, Verdict* top) {
    const bool ex = f->kind == FormulaKind::Exists;
    std::vector<std::string> vars;
    Formula body = f;
    while (body->kind == f->kind && std::find(vars.begin(), vars.end(), body->var) == vars.end()) {
      vars.push_back(body->var);
      body = body->f1;
    }
    std::vector<std::string> live;
    for (const auto& v : vars)
      if (body->fv.count(v)) live.push_back(v);
    if (live.empty()) return eval(body, env, depth + 1);

    Env outer = env;
    for (const auto& v : vars) outer.erase(v);
    std::vector<Candidates> cands;
    bool complete = true;
    for (const auto& v : live) {
      cands.push_back(candidates(v, body, outer, ex));
      complete = complete && cands.back().complete;
      if (cands.back().values.empty()) return Tri::Unknown;
    }

    std::map<std::string, std::optional<Value>> saved;
    for (const auto& v : live) {
      auto it = env.find(v);
      saved[v] = it == env.end() ? std::nullopt : std::optional<Value>(it->second);
    }

    std::size_t longest = 0;
    for (const auto& c : cands) longest = std::max(longest, c.values.size());
    std::vector<std::size_t> idx(live.size());
    std::size_t used = 0;
    bool unknown = false, exhausted = false;
    std::optional<Tri> decided;

    std::function<bool(std::size_t, std::size_t, bool)> layer = [&](std::size_t L, std::size_t i, bool hit) {
      if (i == live.size()) {
        if (!hit) return false;
        if (used++ >= o_.block_budget) {
          exhausted = true;
          return true;
        }
        for (std::size_t j = 0; j < live.size(); ++j) env.insert_or_assign(live[j], cands[j].values[idx[j]]);
        ++tried;
        Tri r = eval(body, env, depth + 1);
        if (r == (ex ? Tri::True : Tri::False)) {
          decided = r;
          if (top) {
            auto& rec = ex ? top->witness : top->counterexample;
            for (std::size_t j = 0; j < live.size(); ++j) rec[live[j]] = m_.show(cands[j].values[idx[j]]);
          }
          return true;
        }
        if (r == Tri::Unknown) unknown = true;
        return false;
      }
      std::size_t n = std::min(cands[i].values.size(), L + 1);
      for (std::size_t j = 0; j < n; ++j) {
        idx[i] = j;
        if (layer(L, i + 1, hit || j == L)) return true;
      }
      return false;
    };
    for (std::size_t L = 0; L < longest; ++L)
      if (layer(L, 0, false)) break;

    for (const auto& [v, old] : saved) {
      if (old) env.insert_or_assign(v, *old);
      else env.erase(v);
    }
    if (decided) return *decided;
    if (!exhausted && !unknown && complete) return ex ? Tri::False : Tri::True;
    return Tri::Unknown;
  }

 private:
  const std::optional<MacroMatch>& macro(const Formula& f) {
    static const std::optional<MacroMatch> none;
    if (!o_.macros || m_.kind() == ModelKind::Scalar) return none;
    auto it = macro_cache_.find(f.get());
    if (it != macro_cache_.end()) return it->second.second;
    auto r = match_with(f, skeleton(f, &skel_cache_));
    return macro_cache_.emplace(f.get(), std::make_pair(f, std::move(r))).first->second.second;
  }

  // ---- candidates

  Candidates candidates(const std::string& v, const Formula& body, const Env& env, bool ex) {
    Candidates out;
    for (const auto& key : {v, strip_primes(v)}) {
      auto h = o_.hints.find(key);
      if (h != o_.hints.end()) {
        out.values.insert(out.values.end(), h->second.begin(), h->second.end());
        break;
      }
    }
    if (fr_) {
      if (zero_set_only(v, body)) {
        auto reps = fr_->zero_set_representatives();
        out.values.insert(out.values.end(), reps.begin(), reps.end());
        out.complete = true;
        return out;
      }
      Zone z;
      Marks marks;
      zone(v, body, env, marks, true, z);
      bool polarity_ok = ex ? !z.inb_neg : !z.inb_pos;
      if (!z.all && polarity_ok) {
        bool complete = true;
        std::vector<std::pair<std::size_t, std::vector<Rational>>> per;
        for (auto x : z.pts) {
          Scope sc{v, x, &env, {}, {}, {}};
          Collected c;
          collect(body, sc, c);
          bool comp = c.complete;
          per.emplace_back(x, cells(c, comp));
          complete = complete && comp;
        }
        std::size_t total = 1;
        for (const auto& [x, vals] : per) total *= vals.size();
        if (total <= o_.block_budget) {
          std::vector<std::vector<Rational>> tuples{std::vector<Rational>(fr_->size(), Rational(0))};
          for (const auto& [x, vals] : per) {
            std::vector<std::vector<Rational>> next;
            for (const auto& t : tuples)
              for (const auto& c : vals) {
                auto u = t;
                u[x] = c;
                next.push_back(std::move(u));
              }
            tuples = std::move(next);
          }
          for (auto& t : tuples) out.values.push_back(fr_->element(std::move(t)));
          out.complete = complete;
          if (complete) return out;
        }
      }
      append_pool(out.values);
      return out;
    }
    if (m_.kind() == ModelKind::Scalar) {
      Scope sc{v, 0, &env, {}, {}, {}};
      Collected c;
      collect(body, sc, c);
      bool comp = c.complete;
      for (auto& r : cells(c, comp)) out.values.push_back({r});
      out.complete = comp;
      if (!comp) append_pool(out.values);
      return out;
    }
    append_pool(out.values);
    return out;
  }

  void append_pool(std::vector<Value>& out) {
    if (!pool_) {
      std::vector<Value> cur = m_.pool();
      std::set<std::string> seen;
      std::vector<Value> uniq;
      for (auto& v : cur)
        if (seen.insert(m_.show(v)).second) uniq.push_back(v);
      for (int d = 0; d < o_.depth && uniq.size() < o_.pool_cap; ++d) {
        std::vector<Value> base = uniq;
        for (std::size_t i = 0; i < base.size() && uniq.size() < o_.pool_cap; ++i)
          for (std::size_t j = i; j < base.size() && uniq.size() < o_.pool_cap; ++j)
            for (const Value& nv : {m_.add(base[i], base[j]), m_.mul(base[i], base[j])})
              if (uniq.size() < o_.pool_cap && seen.insert(m_.show(nv)).second) uniq.push_back(nv);
      }
      pool_ = std::move(uniq);
    }
    out.insert(out.end(), pool_->begin(), pool_->end());
  }

  // v only matters through its zero set: every occurrence is a factor of a
  // monomial argument of a zero-set predicate.
  bool zero_set_only(const std::string& v, const Formula& f) {
    if (!f->fv.count(v)) return true;
    auto key = std::make_pair(f.get(), v);
    auto it = zso_cache_.find(key);
    if (it != zso_cache_.end()) return it->second;
    bool r = false;
    if (const auto& mm = macro(f)) {
      switch (mm->kind) {
        case MacroKind::Sq:
        case MacroKind::Unit:
        case MacroKind::Point:
        case MacroKind::Inter:
        case MacroKind::StrongOrder:
          r = std::all_of(mm->args.begin(), mm->args.end(), [&](const Term& t) { return is_monomial_in(v, t); });
          break;
        default: r = false;
      }
    } else {
      switch (f->kind) {
        case FormulaKind::Eq: r = equal(f->t1, f->t2); break;
        case FormulaKind::InO:
        case FormulaKind::InB: r = false; break;
        case FormulaKind::Not: r = zero_set_only(v, f->f1); break;
        case FormulaKind::And:
        case FormulaKind::Or:
        case FormulaKind::Imp: r = zero_set_only(v, f->f1) && zero_set_only(v, f->f2); break;
        case FormulaKind::Exists:
        case FormulaKind::Forall: r = f->var == v || zero_set_only(v, f->f1); break;
      }
    }
    zso_cache_[key] = r;
    return r;
  }

  // A superset of the zero set of a, as point indices of X.
  std::optional<PointSet> zero_superset(const Term& a, const Env& env, const Marks& marks) {
    bool free_of_marks = std::none_of(a->fv.begin(), a->fv.end(), [&](const std::string& n) { return marks.count(n); });
    bool assigned = std::all_of(a->fv.begin(), a->fv.end(), [&](const std::string& n) { return env.count(n); });
    if (free_of_marks && assigned) {
      auto z = zero_set(term(a, env).ring());
      return PointSet(z.begin(), z.end());
    }
    switch (a->kind) {
      case TermKind::Var: {
        auto m = marks.find(a->name);
        if (m != marks.end()) return m->second;
        return std::nullopt;
      }
      case TermKind::Neg: return zero_superset(a->a, env, marks);
      case TermKind::Mul: {
        auto l = zero_superset(a->a, env, marks), r = zero_superset(a->b, env, marks);
        if (!l || !r) return std::nullopt;
        l->insert(r->begin(), r->end());
        return l;
      }
      default: return std::nullopt;
    }
  }

  // Points of X where the value of v can change the truth of f, assuming
  // its other values are 0; InB(v) occurrences are recorded by polarity.
  void zone(const std::string& v, const Formula& f, const Env& env, Marks& marks, bool pos, Zone& z) {
    if (z.all || !f->fv.count(v)) return;
    if (const auto& mm = macro(f)) {
      const auto& a = mm->args;
      std::optional<PointSet> where;
      switch (mm->kind) {
        case MacroKind::Sq:
          if (!a[0]->fv.count(v)) where = zero_superset(a[0], env, marks);
          break;
        case MacroKind::LeqS:
        case MacroKind::LtS:
        case MacroKind::PrecS:
        case MacroKind::PrecStrictS:
          if (!a[2]->fv.count(v)) where = zero_superset(a[2], env, marks);
          break;
        default: break;
      }
      if (!where) z.all = true;
      else z.pts.insert(where->begin(), where->end());
      return;
    }
    switch (f->kind) {
      case FormulaKind::Eq:
        if (!equal(f->t1, f->t2)) z.all = true;
        return;
      case FormulaKind::InO: z.all = true; return;
      case FormulaKind::InB:
        if (f->t1->kind == TermKind::Var) (pos ? z.inb_pos : z.inb_neg) = true;
        else z.all = true;
        return;
      case FormulaKind::Not: zone(v, f->f1, env, marks, !pos, z); return;
      case FormulaKind::And:
      case FormulaKind::Or:
        zone(v, f->f1, env, marks, pos, z);
        zone(v, f->f2, env, marks, pos, z);
        return;
      case FormulaKind::Imp:
        zone(v, f->f1, env, marks, !pos, z);
        zone(v, f->f2, env, marks, pos, z);
        return;
      case FormulaKind::Exists:
      case FormulaKind::Forall: {
        if (f->var == v) return;
        auto saved = marks.find(f->var) == marks.end() ? std::nullopt
                                                        : std::optional<std::optional<PointSet>>(marks[f->var]);
        Formula body = f->f1;
        std::optional<PointSet> g;
        if (auto r = guard_of(f)) {
          if ((*r)->fv.count(v)) {
            z.all = true;
            return;
          }
          g = zero_superset(*r, env, marks);
          body = f->f1->f2;
        }
        marks[f->var] = g;
        zone(v, body, env, marks, pos, z);
        if (saved) marks[f->var] = *saved;
        else marks.erase(f->var);
        return;
      }
    }
  }

  // ∀q((Point(q) ∧ q ⊑ r) → body) yields r.
  std::optional<Term> guard_of(const Formula& f) {
    if (f->kind != FormulaKind::Forall || f->f1->kind != FormulaKind::Imp) return std::nullopt;
    const Formula& g = f->f1->f1;
    if (g->kind != FormulaKind::And) return std::nullopt;
    const auto& p = macro(g->f1);
    const auto& s = macro(g->f2);
    if (!p || !s || p->kind != MacroKind::Point || s->kind != MacroKind::Sq) return std::nullopt;
    auto is_q = [&](const Term& t) { return t->kind == TermKind::Var && t->name == f->var; };
    if (!is_q(p->args[0]) || !is_q(s->args[0]) || s->args[1]->fv.count(f->var)) return std::nullopt;
    return s->args[1];
  }

  // ---- scalar reduction at one point x

  struct Scope {
    std::string v;
    std::size_t x;
    const Env* env;
    Marks marks;                          // zero-set supersets of guarded point variables
    std::map<std::string, bool> at_x;     // guarded point variable vanishes at x
    std::map<std::string, Poly> solved;  // variables fixed by an equation, as polynomials in c
  };

  bool depends(const std::set<std::string>& fv, const Scope& sc) {
    if (fv.count(sc.v)) return true;
    for (const auto& [n, p] : sc.solved)
      if (fv.count(n)) return true;
    return false;
  }

  std::optional<Poly> term_poly(const Term& t, const Scope& sc) {
    switch (t->kind) {
      case TermKind::Var: {
        if (t->name == sc.v) return Poly::x();
        if (auto s = sc.solved.find(t->name); s != sc.solved.end()) return s->second;
        if (auto a = sc.at_x.find(t->name); a != sc.at_x.end()) {
          if (a->second) return Poly();
          return std::nullopt;
        }
        if (sc.marks.count(t->name)) return std::nullopt;
        auto e = sc.env->find(t->name);
        if (e == sc.env->end()) return std::nullopt;
        if (fr_) return Poly::constant(e->second.ring().values.at(sc.x));
        return Poly::constant(e->second.scalar());
      }
      case TermKind::Zero: return Poly();
      case TermKind::One: return Poly::constant(1);
      case TermKind::Add: {
        auto a = term_poly(t->a, sc), b = term_poly(t->b, sc);
        if (!a || !b) return std::nullopt;
        return *a + *b;
      }
      case TermKind::Neg: {
        auto a = term_poly(t->a, sc);
        if (!a) return std::nullopt;
        return -*a;
      }
      case TermKind::Mul: {
        auto a = term_poly(t->a, sc), b = term_poly(t->b, sc);
        if (!a || !b) return std::nullopt;
        return *a * *b;
      }
    }
    return std::nullopt;
  }

  std::optional<bool> zero_at(const Term& a, const Scope& sc) {
    if (auto p = term_poly(a, sc)) {
      if (p->degree() <= 0) return p->is_zero();
      return std::nullopt;
    }
    switch (a->kind) {
      case TermKind::Var: {
        auto it = sc.at_x.find(a->name);
        if (it != sc.at_x.end()) return it->second;
        return std::nullopt;
      }
      case TermKind::Neg: return zero_at(a->a, sc);
      case TermKind::Mul: {
        auto l = zero_at(a->a, sc), r = zero_at(a->b, sc);
        if ((l && *l) || (r && *r)) return true;
        if (l && r) return false;
        return std::nullopt;
      }
      default: return std::nullopt;
    }
  }

  // Records every way the truth of f depends on c = v(x).
  void collect(const Formula& f, Scope& sc, Collected& out) {
    if (!out.complete || !depends(f->fv, sc)) return;
    auto fail = [&] { out.complete = false; };
    if (fr_) {
      if (const auto& mm = macro(f)) {
        const auto& a = mm->args;
        switch (mm->kind) {
          case MacroKind::Sq: {
            if (depends(a[0]->fv, sc)) return fail();
            auto z = zero_at(a[0], sc);
            if (!z) return fail();
            if (!*z) return;
            auto p = term_poly(a[1], sc);
            if (!p) return fail();
            out.eqs.push_back(*p);
            return;
          }
          case MacroKind::LeqS:
          case MacroKind::LtS:
          case MacroKind::PrecS:
          case MacroKind::PrecStrictS: {
            if (depends(a[2]->fv, sc)) return fail();
            auto z = zero_at(a[2], sc);
            if (!z) return fail();
            if (!*z) return;
            auto pa = term_poly(a[0], sc), pb = term_poly(a[1], sc);
            if (!pa || !pb) return fail();
            bool absolute = mm->kind == MacroKind::LeqS || mm->kind == MacroKind::LtS;
            if (absolute && m_.host().is_valued()) return fail();
            out.signs.push_back(*pb - *pa);
            if (absolute) out.signs.push_back(*pb + *pa);
            return;
          }
          default: return fail();
        }
      }
    }
    switch (f->kind) {
      case FormulaKind::Eq: {
        if (equal(f->t1, f->t2)) return;
        auto a = term_poly(f->t1, sc), b = term_poly(f->t2, sc);
        if (!a || !b) return fail();
        out.eqs.push_back(*a - *b);
        return;
      }
      case FormulaKind::InO:
      case FormulaKind::InB: {
        auto a = term_poly(f->t1, sc);
        if (!a) return fail();
        out.os.push_back(*a);
        return;
      }
      case FormulaKind::Not: collect(f->f1, sc, out); return;
      case FormulaKind::And:
      case FormulaKind::Or:
      case FormulaKind::Imp:
        collect(f->f1, sc, out);
        collect(f->f2, sc, out);
        return;
      case FormulaKind::Exists:
      case FormulaKind::Forall: collect_quantifier(f, sc, out); return;
    }
  }

  void collect_quantifier(const Formula& f, Scope& sc, Collected& out) {
    const std::string& q = f->var;
    if (q == sc.v || sc.solved.count(q)) {
      out.complete = false;
      return;
    }
    if (fr_) {
      if (auto r = guard_of(f)) {
        if (depends((*r)->fv, sc)) {
          out.complete = false;
          return;
        }
        auto z = zero_at(*r, sc);
        if (!z) {
          out.complete = false;
          return;
        }
        auto zs = zero_superset(*r, *sc.env, sc.marks);
        // q ranges over points; the one at x (if any) and the others
        for (bool here : {true, false}) {
          if (here && !*z) continue;
          Scope inner = sc;
          inner.at_x[q] = here;
          if (here) inner.marks[q] = PointSet{sc.x};
          else if (zs) {
            PointSet rest = *zs;
            rest.erase(sc.x);
            inner.marks[q] = rest;
          } else {
            inner.marks[q] = std::nullopt;
          }
          collect(f->f1->f2, inner, out);
        }
        return;
      }
    }
    const bool ex = f->kind == FormulaKind::Exists;
    std::vector<Formula> parts;
    if (ex) conjuncts(f->f1, parts);
    else if (f->f1->kind == FormulaKind::Imp) conjuncts(f->f1->f1, parts);
    else if (f->f1->kind == FormulaKind::Not) conjuncts(f->f1->f1, parts);
    std::optional<Poly> sol;
    for (const auto& part : parts) {
      if ((sol = solve_for(q, part, sc))) break;
    }
    if (fr_) {
      Zone z;
      Marks marks = sc.marks;
      for (const auto& [n, here] : sc.at_x)
        if (!marks.count(n)) marks[n] = std::nullopt;
      zone(q, f->f1, *sc.env, marks, true, z);
      bool polarity_ok = ex ? !z.inb_neg : !z.inb_pos;
      bool local = !z.all && polarity_ok && std::all_of(z.pts.begin(), z.pts.end(), [&](std::size_t y) { return y == sc.x; });
      if (!local) {
        out.complete = false;
        return;
      }
      if (!sol && z.pts.empty()) sol = Poly();
    }
    if (!sol) {
      out.complete = false;
      return;
    }
    Scope inner = sc;
    inner.solved[q] = *sol;
    collect(f->f1, inner, out);
  }

  // q(x) as a polynomial in c when `part` forces it by a linear equation.
  std::optional<Poly> solve_for(const std::string& q, const Formula& part, const Scope& sc) {
    Term g;
    if (fr_) {
      const auto& mm = macro(part);
      if (!mm || mm->kind != MacroKind::Sq || mm->args[0]->fv.count(q)) return std::nullopt;
      auto z = zero_at(mm->args[0], sc);
      if (!z || !*z) return std::nullopt;
      g = mm->args[1];
    } else {
      if (part->kind != FormulaKind::Eq) return std::nullopt;
      g = sub(part->t1, part->t2);
    }
    if (degree_in(q, g) != 1) return std::nullopt;
    Scope probe = sc;
    probe.solved[q] = Poly();
    auto g0 = term_poly(g, probe);
    probe.solved[q] = Poly::constant(1);
    auto g1 = term_poly(g, probe);
    if (!g0 || !g1) return std::nullopt;
    Poly slope = *g1 - *g0;
    if (slope.degree() != 0) return std::nullopt;
    return *g0 * Poly::constant(Rational(-1) / slope.coeff(0));
  }

  // One value of c from every region where all recorded predicates are
  // constant. `complete` is cleared when that cannot be guaranteed.
  std::vector<Rational> cells(const Collected& c, bool& complete) {
    const HostField& host = m_.host();
    std::set<Rational> roots;
    auto add_roots = [&](const Poly& p) {
      if (p.degree() <= 0) return;
      try {
        for (const auto& r : p.rational_roots()) roots.insert(r);
      } catch (const std::length_error&) {
        complete = false;
      }
    };
    for (const auto& p : c.eqs) add_roots(p);
    if (!host.is_valued()) {
      std::set<Rational> cuts = roots;
      for (const auto& q : c.os) {
        if (q.degree() <= 0) continue;
        if (q.degree() > 1) complete = false;
        roots.clear();
        add_roots(q - Poly::constant(1));
        add_roots(q + Poly::constant(1));
        cuts.insert(roots.begin(), roots.end());
      }
      for (const auto& s : c.signs) {
        if (s.degree() <= 0) continue;
        if (s.degree() > 1) complete = false;
        roots.clear();
        add_roots(s);
        cuts.insert(roots.begin(), roots.end());
      }
      std::vector<Rational> sorted(cuts.begin(), cuts.end());
      if (sorted.empty()) return {Rational(0)};
      std::vector<Rational> out{sorted.front() - 1};
      for (std::size_t i = 0; i < sorted.size(); ++i) {
        out.push_back(sorted[i]);
        if (i + 1 < sorted.size()) out.push_back((sorted[i] + sorted[i + 1]) / 2);
      }
      out.push_back(sorted.back() + 1);
      return out;
    }
    // valued host: c matters through v(c - center) against finitely many
    // thresholds, so c = center + u p^e covers every cell
    if (!c.signs.empty()) complete = false;
    std::set<Rational> centers = roots;
    std::set<long> thresholds;
    for (const auto& q : c.os) {
      if (q.degree() <= 0) continue;
      if (q.degree() > 1) {
        complete = false;
        add_roots(q);
        centers.insert(roots.begin(), roots.end());
        continue;
      }
      Rational a = q.coeff(1), b = q.coeff(0);
      centers.insert(-b / a);
      thresholds.insert(-*host.val(a));
    }
    if (centers.empty()) return {Rational(0)};
    std::vector<Rational> cs(centers.begin(), centers.end());
    for (std::size_t i = 0; i < cs.size(); ++i)
      for (std::size_t j = i + 1; j < cs.size(); ++j) thresholds.insert(*host.val(cs[i] - cs[j]));
    long lo = thresholds.empty() ? 0 : *thresholds.begin() - 1;
    long hi = thresholds.empty() ? 0 : *thresholds.rbegin() + 1;
    if (hi - lo > o_.valuation_window) {
      complete = false;
      hi = lo + o_.valuation_window;
    }
    const long p = static_cast<long>(host.prime());
    std::vector<Rational> out(cs.begin(), cs.end());
    for (const auto& c0 : cs)
      for (long e = lo; e <= hi; ++e)
        for (long u = 1; u < p; ++u) out.push_back(c0 + u * pow_int(Rational(p), e));
    return out;
  }

  const Model& m_;
  const EvalOptions& o_;
  const FiniteRingModel* fr_;
  std::unordered_map<const FormulaNode*, std::pair<Formula, std::optional<MacroMatch>>> macro_cache_;
  std::unordered_map<const FormulaNode*, std::size_t> skel_cache_;
  std::map<std::pair<const FormulaNode*, std::string>, bool> zso_cache_;
  std::optional<std::vector<Value>> pool_;
};

}  // namespace

std::optional<MacroMatch> match_macro(const Formula& f) { return match_with(f, skeleton(f, nullptr)); }

Verdict eval_bounded(const Formula& f, const Model& m, const Env& env, const EvalOptions& opt) {
  std::vector<std::string> unassigned;
  for (const auto& v : f->fv)
    if (!env.count(v)) unassigned.push_back(v);
  Formula g = f;
  if (!unassigned.empty()) {
    if (m.pool().empty()) throw std::invalid_argument("unassigned free variable " + unassigned.front() + " and an empty pool");
    g = forall_all(unassigned, f);
  }
  Verdict out;
  Evaluator ev(m, opt);
  Env e = env;
  ev.top = &out;
  Tri r = ev.eval(g, e, 0);
  out.value = r == Tri::True ? VerdictKind::Holds : r == Tri::False ? VerdictKind::Fails : VerdictKind::Unknown;
  if (out.value != VerdictKind::Holds) out.witness.clear();
  if (out.value != VerdictKind::Fails) out.counterexample.clear();
  out.reason = r == Tri::Unknown ? "candidate search inconclusive" : "decided";
  out.witnesses_tried = ev.tried;
  out.depth = ev.max_depth;
  return out;
}

}  // namespace ringdef
