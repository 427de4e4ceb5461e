#include <gtest/gtest.h>

#include "ringdef/eval.hpp"
#include "ringdef/oracles.hpp"
#include "ringdef/schemas.hpp"
#include "ringdef/suites.hpp"

using namespace ringdef;

namespace {

const HostField Q3 = HostField::padic(3);

// A ring with nothing to enumerate.
class BareModel : public ScalarModel {
 public:
  BareModel() : ScalarModel(HostField::ordered()) {}
  std::vector<Value> pool() const override { return {}; }
};

struct GermSetup {
  GermWitness w;
  SymbolicGermModel m;
  LimitPair lp;
  GermSetup(std::size_t k, std::vector<Rational> limits)
      : w(germs_valued_congruence(k, 0, Q3)), m(w, 3, 12), lp(limit_pair(w, limits)) {}
  Value f() const { return m.function(lp.f, ZeroInfo::unknown()); }
  Value g() const { return m.function(lp.g, ZeroInfo::point()); }
};

}  // namespace

TEST(Eval, SqsubseteqOnFiniteRing) {
  FiniteRingModel m(PointSetX::numbered(2), HostField::ordered());
  Formula sq = sqsubseteq().body;
  Verdict v = eval_bounded(sq, m, {{"f", m.element({0, 1})}, {"g", m.element({0, 3})}});
  EXPECT_EQ(v.value, VerdictKind::Holds);
  FiniteRingModel m3(PointSetX::numbered(3), HostField::ordered());
  for (bool macros : {true, false}) {
    EvalOptions o;
    o.macros = macros;
    Verdict w = eval_bounded(sq, m3, {{"f", m3.element({0, 1, 0})}, {"g", m3.element({0, 2, 5})}}, o);
    EXPECT_NE(w.value, VerdictKind::Holds);
  }
}

TEST(Eval, RawSqsubseteqFindsWitnesses) {
  // with a unit g the existential z = (1 + x g)^-1 needs no macro
  FiniteRingModel m(PointSetX::numbered(2), HostField::ordered());
  EvalOptions o;
  o.macros = false;
  Formula inner = parse_formula("(exists y1 (exists z (= (* (+ 1 (* x g)) z) (+ 1 (* y1 f)))))");
  Verdict v = eval_bounded(inner, m, {{"x", m.element({1, 1})}, {"f", m.element({0, 1})}, {"g", m.element({0, 1})}}, o);
  EXPECT_EQ(v.value, VerdictKind::Holds);
  EXPECT_FALSE(v.witness.empty());
}

TEST(Eval, ClosedSentences) {
  ScalarModel q(HostField::ordered());
  EXPECT_EQ(eval_bounded(parse_formula("(forall x (= x x))"), q).value, VerdictKind::Holds);
  EXPECT_EQ(eval_bounded(parse_formula("(= (+ 1 1) 1)"), q).value, VerdictKind::Fails);
  Verdict v = eval_bounded(parse_formula("(forall x (= (* x x) x))"), q);
  EXPECT_EQ(v.value, VerdictKind::Fails);
  EXPECT_FALSE(v.counterexample.empty());
  EXPECT_EQ(eval_bounded(parse_formula("(exists x (= (+ x x) 1))"), q).value, VerdictKind::Holds);
}

TEST(Eval, EmptyPoolWithFreeVariableThrows) {
  BareModel m;
  EXPECT_THROW(eval_bounded(parse_formula("(= x 0)"), m), std::invalid_argument);
  EXPECT_NO_THROW(eval_bounded(parse_formula("(= x 0)"), m, {{"x", {Rational(0)}}}));
}

TEST(Eval, MonotoneInDepth) {
  FiniteRingModel m(PointSetX::numbered(2), HostField::ordered());
  std::vector<std::string> texts{
      "(exists z (= (* f z) 1))",
      "(forall x (exists z (= (* (+ 1 (* x f)) z) 1)))",
      "(exists w (and (= (* w w) w) (not (= w 0))))",
      "(forall w (or (= (* w f) 0) (in-B w)))",
  };
  for (const auto& t : texts)
    for (const auto& fv : {std::vector<Rational>{1, 2}, {0, 1}, {0, 0}}) {
      std::optional<VerdictKind> seen;
      for (int depth = 0; depth <= 2; ++depth) {
        EvalOptions o;
        o.depth = depth;
        o.macros = false;
        auto v = eval_bounded(parse_formula(t), m, {{"f", m.element(fv)}}, o).value;
        if (v == VerdictKind::Unknown) continue;
        if (seen) EXPECT_EQ(*seen, v) << t;
        seen = v;
      }
    }
}

TEST(Eval, Deterministic) {
  FiniteRingModel m(PointSetX::numbered(3), HostField::padic(3));
  Formula f = point_inter_isol().isol.body;
  Env env{{"s", m.element({0, 0, 1})}, {"p", m.element({0, 1, 1})}};
  EvalOptions o;
  o.macros = false;
  o.block_budget = 60;
  Verdict a = eval_bounded(f, m, env, o), b = eval_bounded(f, m, env, o);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.witness, b.witness);
  EXPECT_EQ(a.counterexample, b.counterexample);
  EXPECT_EQ(a.witnesses_tried, b.witnesses_tried);
}

TEST(Eval, MatchesRenamedInstances) {
  Formula f = instantiate(sqsubseteq(), {var("a"), mul(var("b"), var("c"))});
  auto mm = match_macro(f);
  ASSERT_TRUE(mm);
  EXPECT_EQ(mm->kind, MacroKind::Sq);
  ASSERT_EQ(mm->args.size(), 2u);
  EXPECT_EQ(print_term(mm->args[1]), "(* b c)");
  Formula renamed = parse_formula("(forall q (exists r (exists t (= (* (+ 1 (* q g)) t) (+ 1 (* r f))))))");
  ASSERT_TRUE(match_macro(renamed));
  EXPECT_EQ(match_macro(renamed)->kind, MacroKind::Sq);
  EXPECT_EQ(match_macro(point_inter_isol().point.body)->kind, MacroKind::Point);
  EXPECT_EQ(match_macro(limit_schema().body)->kind, MacroKind::Limit);
  EXPECT_FALSE(match_macro(parse_formula("(forall q (= q q))")));
}

TEST(GermModel, LimitSchema) {
  GermSetup s(2, {7, 7});
  Formula limit = limit_schema().body;
  Env env{{"f", s.f()}, {"g", s.g()}, {"s", s.m.s_all()}, {"p", s.m.at_point()}};
  env["h"] = s.m.constant(7);
  EXPECT_EQ(eval_bounded(limit, s.m, env).value, VerdictKind::Holds);
  env["h"] = s.m.constant(8);
  EXPECT_EQ(eval_bounded(limit, s.m, env).value, VerdictKind::Fails);
  // s whose only zero is p0: the point is isolated
  env["h"] = s.m.constant(7);
  env["s"] = s.m.at_point();
  EXPECT_EQ(eval_bounded(limit, s.m, env).value, VerdictKind::Fails);
}

TEST(GermModel, LimitSet) {
  GermSetup s(3, {1, make_rational(2, 3), 1});
  auto got = s.m.limit_set(s.f(), s.g(), s.m.s_all());
  ASSERT_TRUE(got);
  EXPECT_EQ(*got, (std::set<Rational>{make_rational(2, 3), 1}));
}

TEST(GermModel, IntTimes) {
  auto run = [](const Rational& h0) {
    GermSetup s(5, {make_rational(1, 9), make_rational(1, 3), 1, 3, 9});
    EvalOptions o;
    o.hints["f"] = {s.f()};
    o.hints["g"] = {s.g()};
    o.hints["s"] = {s.m.s_all()};
    o.block_budget = 512;
    Env env{{"h", s.m.constant(h0)}, {"p", s.m.at_point()}, {kTau, s.m.tau_star()}};
    EXPECT_EQ(oracle_int_times(env.at("h"), s.m), tau_exponent(h0, 3, Q3).has_value());
    return eval_bounded(int_times_schema().body, s.m, env, o).value;
  };
  EXPECT_EQ(run(9), VerdictKind::Holds);
  EXPECT_EQ(run(make_rational(1, 3)), VerdictKind::Holds);
  EXPECT_NE(run(2), VerdictKind::Holds);
  EXPECT_NE(run(27 * 2), VerdictKind::Holds);
}

TEST(Oracles, IntTimes) {
  EXPECT_TRUE(oracle_int_times(9, 3, Q3));
  EXPECT_FALSE(oracle_int_times(2, 3, Q3));
  EXPECT_TRUE(oracle_int_times(1, 3, Q3));
  EXPECT_FALSE(oracle_int_times(0, 3, Q3));
  EXPECT_FALSE(oracle_int_times(-9, 3, Q3));
  EXPECT_EQ(tau_exponent(make_rational(1, 27), 3, Q3), -3);
  EXPECT_EQ(tau_exponent(make_rational(1, 8), make_rational(1, 2), HostField::ordered()), 3);
  EXPECT_EQ(tau_exponent(make_rational(-1, 8), make_rational(-1, 2), HostField::ordered()), 3);
  EXPECT_THROW(oracle_int_times(9, 2, Q3), std::invalid_argument);
  EXPECT_THROW(oracle_int_times(9, 0, Q3), std::invalid_argument);
  EXPECT_THROW(tau_exponent(4, 2, HostField::ordered()), std::invalid_argument);
}

TEST(Oracles, ZInterp) {
  auto z = oracle_z_interp(27, 9, 3, Q3);
  EXPECT_EQ(z.sigma_f, 3);
  EXPECT_EQ(z.sigma_g, 2);
  EXPECT_EQ(z.sum, 5);
  EXPECT_TRUE(z.order);
  EXPECT_TRUE(z.abs_order);
  EXPECT_FALSE(z.divides);
  EXPECT_TRUE(oracle_z_interp(27, 27, 3, Q3).divides);
  EXPECT_TRUE(oracle_z_interp(1, 1, 3, Q3).divides);
  EXPECT_FALSE(oracle_z_interp(3, 1, 3, Q3).divides);
  EXPECT_TRUE(oracle_z_interp(81, make_rational(1, 9), 3, Q3).divides);
  EXPECT_THROW(oracle_z_interp(2, 9, 3, Q3), std::invalid_argument);
}

TEST(Oracles, PointwiseLift) {
  FiniteRingModel m(PointSetX::numbered(2), HostField::ordered());
  Formula phi = parse_formula("(= (* y y) y)");
  EXPECT_EQ(pointwise_lift_oracle(phi, m, {{"y", {{1, 0}}}}, {{0, 0}}), Tri::True);
  EXPECT_EQ(pointwise_lift_oracle(phi, m, {{"y", {{2, 0}}}}, {{0, 0}}), Tri::False);
  EXPECT_EQ(pointwise_lift_oracle(phi, m, {{"y", {{2, 0}}}}, {{1, 0}}), Tri::True);
  Formula o = parse_formula("(exists c (and (in-O c) (= y (* (+ 1 1) c))))");
  EXPECT_EQ(pointwise_lift_oracle(o, m, {{"y", {{2, 3}}}}, {{0, 1}}), Tri::True);
  EXPECT_EQ(pointwise_lift_oracle(o, m, {{"y", {{2, 3}}}}, {{0, 0}}), Tri::False);
}

TEST(Suites, EmptyAndUnknown) {
  Report r = run_suite("empty");
  EXPECT_TRUE(r.cases.empty());
  EXPECT_TRUE(r.ok());
  EXPECT_THROW(run_suite("no-such-suite"), std::invalid_argument);
  auto names = suite_names();
  EXPECT_NE(std::find(names.begin(), names.end(), "jacobson"), names.end());
}

TEST(Suites, DeterministicReports) {
  SuiteOptions o;
  o.seed = 42;
  EXPECT_EQ(to_json(run_suite("limits", o)), to_json(run_suite("limits", o)));
  EXPECT_EQ(to_json(run_suite("lifting", o)), to_json(run_suite("lifting", o)));
  o.seed = 43;
  EXPECT_NE(to_json(run_suite("limits", o)), to_json(run_suite("limits", SuiteOptions{1, 42, false})));
}

TEST(Suites, ZInterpSuitePasses) {
  Report r = run_suite("z-interp");
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.summary().cases, 2u * 13u * 13u);
  EXPECT_EQ(cases_with_prefix(r, "z-interp/padic-q:3/").size(), 169u);
}
