#include "ringdef/schemas.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace ringdef {

namespace {

Schema make_schema(std::string name, std::vector<std::string> params, Formula body, Language lang,
                   std::string note = "") {
  std::set<std::string> declared(params.begin(), params.end());
  if (declared != free_vars(body)) throw std::logic_error("schema " + name + " has free variables other than its params");
  if (!licensed(body, lang)) throw std::logic_error("schema " + name + " has atoms outside its language");
  return Schema{std::move(name), std::move(params), std::move(body), lang, std::move(note)};
}

Term v(const std::string& name) { return var(name); }

Formula sq(Term a, Term b) { return instantiate(sqsubseteq(), {std::move(a), std::move(b)}); }
Formula unit(Term a) { return instantiate(unit_schema(), {std::move(a)}); }
Formula point(Term a) { return instantiate(point_inter_isol().point, {std::move(a)}); }
Formula inter(Term a, Term b, Term c) {
  return instantiate(point_inter_isol().inter, {std::move(a), std::move(b), std::move(c)});
}
Formula isol(Term s, Term p) { return instantiate(point_inter_isol().isol, {std::move(s), std::move(p)}); }
Formula leq(Term a, Term b, Term s) { return instantiate(bounded_comparisons().weak, {a, b, s}); }
Formula lt(Term a, Term b, Term s) { return instantiate(bounded_comparisons().strict, {a, b, s}); }
Formula prec(Term a, Term b, Term s) { return instantiate(order_comparisons().weak, {a, b, s}); }
Formula prec_strict(Term a, Term b, Term s) { return instantiate(order_comparisons().strict, {a, b, s}); }
Formula strong(Term f, Term g) { return instantiate(strong_order_schema(), {std::move(f), std::move(g)}); }

// φ^σ(t) with σ = (f, g, s, p)
Formula phi(const Term& t) { return instantiate(limit_schema(), {v("f"), v("g"), t, v("s"), v("p")}); }

std::string lowercase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

}  // namespace

Formula instantiate(const Schema& s, const std::vector<Term>& args) {
  if (args.size() != s.params.size())
    throw std::invalid_argument("schema " + s.name + " takes " + std::to_string(s.params.size()) + " arguments");
  std::map<std::string, Term> subst;
  for (std::size_t i = 0; i < args.size(); ++i) subst.emplace(s.params[i], args[i]);
  return substitute_all(s.body, subst);
}

Schema jac_membership(int n) {
  if (n < 1) throw std::invalid_argument("jac_membership needs n >= 1");
  std::vector<std::string> params;
  Term rhs = one();
  std::vector<std::string> ys;
  for (int i = 1; i <= n; ++i) {
    std::string f = "f" + std::to_string(i), y = "y" + std::to_string(i);
    params.push_back(f);
    ys.push_back(y);
    rhs = add(rhs, mul(v(y), v(f)));
  }
  params.push_back("g");
  Formula body = eq(mul(add(one(), mul(v("x"), v("g"))), v("z")), rhs);
  body = exists("z", body);
  body = exists_all(ys, body);
  body = forall("x", body);
  return make_schema("jac", params, body, Language::Ring);
}

Schema sqsubseteq() {
  static const Schema s = [] {
    Schema j = jac_membership(1);
    Formula body = substitute(j.body, "f1", v("f"));
    return make_schema("sq", {"f", "g"}, body, Language::Ring, "zero set of f inside zero set of g");
  }();
  return s;
}

Schema unit_schema() {
  static const Schema s = make_schema("unit", {"f"}, exists("w", eq(mul(v("f"), v("w")), one())), Language::Ring);
  return s;
}

PointInterIsol point_inter_isol() {
  static const PointInterIsol out = [] {
    PointInterIsol r;
    Formula pt = land(lnot(unit(v("f"))),
                      forall("g", imp(land(sq(v("g"), v("f")), lnot(unit(v("g")))), sq(v("f"), v("g")))));
    r.point = make_schema("point", {"f"}, pt, Language::Ring, "zero set of f is a single point");
    Formula in = land(sq(v("h"), v("f")),
                      land(sq(v("h"), v("g")),
                           forall("k", imp(land(sq(v("k"), v("f")), sq(v("k"), v("g"))), sq(v("k"), v("h"))))));
    r.inter = make_schema("inter", {"f", "g", "h"}, in, Language::Ring,
                          "zero set of h is the intersection of those of f and g");
    Schema point_s = r.point;
    Formula pt_p = instantiate(point_s, {v("p")});
    Formula is = land(pt_p, land(sq(v("p"), v("s")),
                                 exists("u", land(sq(v("s"), mul(v("p"), v("u"))), lnot(sq(v("s"), v("u")))))));
    r.isol = make_schema("isol", {"s", "p"}, is, Language::RingB, "the zero of p is isolated in the zero set of s");
    return r;
  }();
  return out;
}

namespace {

class Lifter {
 public:
  Lifter(const Formula& phi, const std::string& s) : avoid_(all_vars(phi)) {
    if (avoid_.count(s)) throw std::invalid_argument("lift parameter " + s + " occurs in the formula");
    avoid_.insert(s);
  }

  Formula run(const Formula& f, const std::string& s, int depth) {
    switch (f->kind) {
      case FormulaKind::Eq: {
        Term diff = f->t2->kind == TermKind::Zero ? f->t1 : sub(f->t1, f->t2);
        return sq(v(s), diff);
      }
      case FormulaKind::InO: {
        std::string p = name("p", depth), b = name("b", depth);
        return forall(p, imp(guard(p, s), exists(b, land(in_B(v(b)), sq(v(p), sub(f->t1, v(b)))))));
      }
      case FormulaKind::InB: throw std::invalid_argument("lift: B atoms are not liftable");
      case FormulaKind::And: return land(run(f->f1, s, depth), run(f->f2, s, depth));
      case FormulaKind::Not: {
        std::string p = name("p", depth);
        return forall(p, imp(guard(p, s), lnot(run(f->f1, p, depth + 1))));
      }
      case FormulaKind::Exists: {
        std::string p = name("p", depth);
        return forall(p, imp(guard(p, s), exists(f->var, run(f->f1, p, depth + 1))));
      }
      case FormulaKind::Or: return run(lnot(land(lnot(f->f1), lnot(f->f2))), s, depth);
      case FormulaKind::Imp: return run(lnot(land(f->f1, lnot(f->f2))), s, depth);
      case FormulaKind::Forall: return run(lnot(exists(f->var, lnot(f->f1))), s, depth);
    }
    throw std::logic_error("unreachable");
  }

 private:
  Formula guard(const std::string& p, const std::string& s) { return land(point(v(p)), sq(v(p), v(s))); }

  // Depends only on the depth so that lifting commutes with conjunction.
  std::string name(const std::string& base, int depth) const {
    std::string n = base + std::to_string(depth + 1);
    while (avoid_.count(n)) n += "'";
    return n;
  }

  std::set<std::string> avoid_;
};

}  // namespace

Formula lift(const Formula& phi, const std::string& s) {
  Lifter l(phi, s);
  return l.run(phi, s, 0);
}

ComparisonPair bounded_comparisons() {
  static const ComparisonPair out = [] {
    auto divides = [](const std::string& a, const std::string& b) {
      return exists("c", land(in_O(v("c")), eq(v(a), mul(v(b), v("c")))));
    };
    ComparisonPair r;
    r.weak = make_schema("leq-s", {"f", "g", "s"}, lift(divides("f", "g")), Language::RingB,
                         "|f| <= |g| at every zero of s");
    r.strict = make_schema("lt-s", {"f", "g", "s"}, lift(land(divides("f", "g"), lnot(divides("g", "f")))),
                           Language::RingB, "|f| < |g| at every zero of s");
    return r;
  }();
  return out;
}

ComparisonPair order_comparisons() {
  static const ComparisonPair out = [] {
    // g - f is a sum of four squares
    Term squares = add(add(mul(v("y1"), v("y1")), mul(v("y2"), v("y2"))),
                       add(mul(v("y3"), v("y3")), mul(v("y4"), v("y4"))));
    Formula le = exists_all({"y1", "y2", "y3", "y4"}, eq(sub(v("g"), v("f")), squares));
    ComparisonPair r;
    r.weak = make_schema("prec-s", {"f", "g", "s"}, lift(le), Language::Ring, "f <= g at every zero of s");
    r.strict = make_schema("prec-strict-s", {"f", "g", "s"}, lift(land(le, lnot(eq(v("f"), v("g"))))),
                           Language::Ring, "f < g at every zero of s");
    return r;
  }();
  return out;
}

Schema chi_schema() {
  static const Schema s = make_schema(
      "chi", {"g", "s", "p"},
      land(point(v("p")), land(lnot(isol(v("s"), v("p"))),
                               lor(inter(v("g"), v("s"), v("p")), inter(v("g"), v("s"), one())))),
      Language::RingB);
  return s;
}

Schema limit_schema() {
  static const Schema s = [] {
    Formula chi = instantiate(chi_schema(), {v("g"), v("s"), v("p")});
    Formula inner = exists("q", land(point(v("q")),
                                     land(lnot(sq(v("q"), mul(v("p"), v("v")))),
                                          land(sq(v("q"), v("s")),
                                               leq(sub(v("f"), mul(v("g"), v("h"))), mul(v("g"), v("eps")), v("q"))))));
    Formula main = forall("eps", forall("v", imp(lnot(sq(v("p"), mul(v("v"), v("eps")))), inner)));
    return make_schema("limit", {"f", "g", "h", "s", "p"}, land(chi, main), Language::RingB,
                       "h(p0) is a limit value of f/g along the zero set of s at the zero of p");
  }();
  return s;
}

Schema psi_sigma() {
  static const Schema s = [] {
    Term a = v("alpha"), a1 = v("alpha'"), b = v("beta"), c = v("gamma"), t = v(kTau), p = v("p");
    Formula c1 = imp(sq(p, sub(mul(a, a1), one())), phi(a1));
    Term abc = mul(mul(a, b), c);
    Formula c2 = imp(land(leq(one(), abc, p), leq(abc, mul(c, c), p)), phi(mul(a, b)));
    Term u = v("u"), uc = mul(u, c);
    auto A = [&](const Term& xi) { return land(phi(xi), land(lt(mul(xi, t), u, p), leq(u, xi, p))); };
    Formula c3 = forall("u", imp(land(leq(one(), uc, p), leq(uc, mul(c, c), p)), exists("xi", A(v("xi")))));
    Formula c4 = forall_all({"u", "xi", "xi'"},
                            imp(land(A(v("xi")), A(v("xi'"))), sq(p, sub(v("xi"), v("xi'")))));
    return make_schema("psi-sigma", {"f", "g", "s", "p", "alpha", "alpha'", "beta", "gamma", kTau},
                       land_all({c1, c2, c3, c4}), Language::RingB);
  }();
  return s;
}

namespace {

Formula closure_clause(const Schema& body, const std::vector<std::string>& vars) {
  std::vector<Term> args{v("f"), v("g"), v("s"), v("p")};
  for (const auto& x : vars) args.push_back(v(x));
  args.push_back(v(kTau));
  std::vector<std::string> guarded;
  for (const auto& x : vars)
    if (x != "alpha'") guarded.push_back(x);
  std::vector<Formula> premises;
  for (const auto& x : guarded) premises.push_back(phi(v(x)));
  return forall_all(vars, imp(land_all(premises), instantiate(body, args)));
}

}  // namespace

Schema limch_times() {
  static const Schema s = [] {
    Term t = v(kTau), p = v("p");
    Formula body = land_all({lt(zero(), t, p), lt(t, one(), p), phi(t),
                             closure_clause(psi_sigma(), {"alpha", "alpha'", "beta", "gamma"})});
    return make_schema("limch-times", {"f", "g", "s", "p", kTau}, body, Language::RingB,
                       "limit values form a multiplicative chunk of powers of tau*(p0)");
  }();
  return s;
}

Schema limbch_times() {
  static const Schema s = [] {
    Formula base = instantiate(limch_times(), {v("f"), v("g"), v("s"), v("p"), v(kTau)});
    Formula bounded = exists("delta", forall("alpha", imp(phi(v("alpha")), leq(v("alpha"), v("delta"), v("p")))));
    return make_schema("limbch-times", {"f", "g", "s", "p", kTau}, land(base, bounded), Language::RingB);
  }();
  return s;
}

Schema int_times_schema() {
  static const Schema s = [] {
    Formula lim = instantiate(limit_schema(), {v("f"), v("g"), v("h"), v("s"), v("p")});
    Formula ch = instantiate(limbch_times(), {v("f"), v("g"), v("s"), v("p"), v(kTau)});
    return make_schema("int-times", {"h", "p", kTau}, exists_all({"f", "g", "s"}, land(lim, ch)), Language::RingB,
                       "h(p0) is an integer power of tau*(p0)");
  }();
  return s;
}

Schema phi_sigma() {
  static const Schema s = [] {
    Term a = v("alpha"), b = v("beta"), c = v("gamma"), t = v(kTau), p = v("p");
    Formula c1 = phi(neg(a));
    Term ab = add(a, b);
    Formula c2 = imp(land(prec(neg(c), ab, p), prec(ab, c, p)), phi(ab));
    Term u = v("u");
    auto B = [&](const Term& xi) { return land(phi(xi), land(prec(xi, u, p), prec_strict(u, add(xi, t), p))); };
    Formula c3 = forall("u", imp(land(prec(neg(c), u, p), prec(u, c, p)), exists("xi", B(v("xi")))));
    Formula c4 = forall_all({"u", "xi", "xi'"},
                            imp(land(B(v("xi")), B(v("xi'"))), sq(p, sub(v("xi"), v("xi'")))));
    return make_schema("phi-sigma", {"f", "g", "s", "p", "alpha", "beta", "gamma", kTau},
                       land_all({c1, c2, c3, c4}), Language::RingB);
  }();
  return s;
}

Schema limch_plus() {
  static const Schema s = [] {
    Term t = v(kTau), p = v("p");
    Formula body = land_all({prec_strict(zero(), t, p), phi(t), closure_clause(phi_sigma(), {"alpha", "beta", "gamma"})});
    return make_schema("limch-plus", {"f", "g", "s", "p", kTau}, body, Language::RingB,
                       "limit values form an additive chunk of multiples of tau*(p0)");
  }();
  return s;
}

Schema limbch_plus() {
  static const Schema s = [] {
    Formula base = instantiate(limch_plus(), {v("f"), v("g"), v("s"), v("p"), v(kTau)});
    Formula bounded = exists("delta", forall("alpha", imp(phi(v("alpha")), prec(v("alpha"), v("delta"), v("p")))));
    return make_schema("limbch-plus", {"f", "g", "s", "p", kTau}, land(base, bounded), Language::RingB);
  }();
  return s;
}

Schema int_plus_schema() {
  static const Schema s = [] {
    Formula lim = instantiate(limit_schema(), {v("f"), v("g"), v("h"), v("s"), v("p")});
    Formula ch = instantiate(limbch_plus(), {v("f"), v("g"), v("s"), v("p"), v(kTau)});
    return make_schema("int-plus", {"h", "p", kTau}, exists_all({"f", "g", "s"}, land(lim, ch)), Language::RingB,
                       "h(p0) is an integer multiple of tau*(p0)");
  }();
  return s;
}

Schema strong_order_schema() {
  static const Schema s =
      make_schema("strong-order", {"f", "g"},
                  forall("h", imp(sq(v("f"), mul(v("g"), v("h"))), sq(v("g"), v("h")))), Language::Ring,
                  "g strongly below f: the zero set of g lies in the closure of the zeros of f outside it");
  return s;
}

namespace {

Formula chi_at_least(int k, const Term& p) {
  std::vector<std::string> chain;
  for (int i = 0; i <= k; ++i) chain.push_back("f" + std::to_string(i));
  std::vector<Formula> parts;
  for (int i = 0; i < k; ++i) parts.push_back(strong(v(chain[i + 1]), v(chain[i])));
  parts.push_back(lnot(unit(v(chain[0]))));
  parts.push_back(exists("w", land(inter(v(chain[k]), v("v"), v("w")), exists("u", eq(mul(v("w"), v("u")), one())))));
  Formula inner = exists_all(chain, land_all(parts));
  Formula body = land(point(p), forall("v", imp(lnot(sq(p, v("v"))), inner)));
  return body;
}

}  // namespace

ChiPair chi_k_schema(int k) {
  if (k < 0) throw std::invalid_argument("chi_k needs k >= 0");
  ChiPair r;
  Formula geq = chi_at_least(k, v("p"));
  r.at_least = make_schema("chi-geq-k", {"p"}, geq, Language::Ring, "local dimension at the zero of p is >= k");
  r.exact = make_schema("chi-k", {"p"}, land(geq, lnot(chi_at_least(k + 1, v("p")))), Language::Ring,
                        "local dimension at the zero of p is k");
  return r;
}

Schema z_k_schema(int k, bool additive) {
  if (k < 1) throw std::invalid_argument("Z_k needs k >= 1");
  Formula chi = instantiate(chi_k_schema(k).exact, {v("p")});
  Formula integer = instantiate(additive ? int_plus_schema() : int_times_schema(), {v("h"), v("q"), v(kTau)});
  Formula body = forall("p", imp(chi, forall("v", imp(lnot(sq(v("p"), v("v"))),
                                                       exists("q", land(lnot(sq(v("q"), v("v"))), integer))))));
  return make_schema(additive ? "z-k-plus" : "z-k", {"h", kTau}, body, Language::RingB,
                     "h takes integer values near the points of local dimension k");
}

Schema z_k_with_numeral(int k, long tau, bool additive) {
  Schema s = z_k_schema(k, additive);
  Formula body = substitute(s.body, kTau, numeral(tau));
  return make_schema(s.name + "-numeral", {"h"}, body, Language::RingB, s.note);
}

std::vector<Schema> z_interpretation() {
  std::vector<Schema> out;
  out.push_back(make_schema("z-domain", {"f", "p", kTau},
                            instantiate(int_times_schema(), {v("f"), v("p"), v(kTau)}), Language::RingB,
                            "f(p0) lies in tau^Z; sigma(f) is its exponent"));
  out.push_back(make_schema("z-equal", {"f", "g", "p"}, sq(v("p"), sub(v("f"), v("g"))), Language::Ring,
                            "sigma(f) = sigma(g)"));
  out.push_back(make_schema("z-add", {"f", "g", "h", "p"}, sq(v("p"), sub(mul(v("f"), v("g")), v("h"))),
                            Language::Ring, "sigma(f) + sigma(g) = sigma(h)"));
  out.push_back(make_schema("z-order", {"f", "g", "p"}, leq(v("g"), v("f"), v("p")), Language::RingB,
                            "sigma(f) <= sigma(g)"));
  out.push_back(make_schema("z-divides", {"f", "g", "p"}, instantiate(int_times_schema(), {v("f"), v("p"), v("g")}),
                            Language::RingB,
                            "sigma(g) divides sigma(f); with +, | and <= on Z, multiplication is 0-definable"));
  return out;
}

std::vector<std::string> schema_names() {
  return {"sq",          "jac",          "unit",         "point",       "inter",      "isol",
          "leq-s",       "lt-s",         "prec-s",       "prec-strict-s", "chi",      "limit",
          "psi-sigma",   "limch-times",  "limbch-times", "int-times",   "phi-sigma",  "limch-plus",
          "limbch-plus", "int-plus",     "strong-order", "chi-geq-k",   "chi-k",      "z-k",
          "z-k-plus",    "z-domain",     "z-equal",      "z-add",       "z-order",    "z-divides"};
}

Schema schema_by_name(const std::string& raw, const std::vector<int>& args) {
  std::string name = lowercase(raw);
  static const std::set<std::string> indexed{"jac", "chi-geq-k", "chi-k", "z-k", "z-k-plus"};
  bool needs_index = indexed.count(name) > 0;
  if (needs_index && args.size() != 1) throw std::invalid_argument(name + " takes exactly one integer argument");
  if (!needs_index && !args.empty()) throw std::invalid_argument(name + " takes no integer arguments");
  if (name == "sq") return sqsubseteq();
  if (name == "jac") return jac_membership(args[0]);
  if (name == "unit") return unit_schema();
  if (name == "point") return point_inter_isol().point;
  if (name == "inter") return point_inter_isol().inter;
  if (name == "isol") return point_inter_isol().isol;
  if (name == "leq-s") return bounded_comparisons().weak;
  if (name == "lt-s") return bounded_comparisons().strict;
  if (name == "prec-s") return order_comparisons().weak;
  if (name == "prec-strict-s") return order_comparisons().strict;
  if (name == "chi") return chi_schema();
  if (name == "limit") return limit_schema();
  if (name == "psi-sigma") return psi_sigma();
  if (name == "limch-times") return limch_times();
  if (name == "limbch-times") return limbch_times();
  if (name == "int-times") return int_times_schema();
  if (name == "phi-sigma") return phi_sigma();
  if (name == "limch-plus") return limch_plus();
  if (name == "limbch-plus") return limbch_plus();
  if (name == "int-plus") return int_plus_schema();
  if (name == "strong-order") return strong_order_schema();
  if (name == "chi-geq-k") return chi_k_schema(args[0]).at_least;
  if (name == "chi-k") return chi_k_schema(args[0]).exact;
  if (name == "z-k") return z_k_schema(args[0]);
  if (name == "z-k-plus") return z_k_schema(args[0], true);
  for (const auto& s : z_interpretation())
    if (s.name == name) return s;
  throw std::invalid_argument("unknown schema " + raw);
}

}  // namespace ringdef
