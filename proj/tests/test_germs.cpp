#include <gtest/gtest.h>

#include <algorithm>

#include "ringdef/germs.hpp"
#include "ringdef/scalar.hpp"

using namespace ringdef;

namespace {

const HostField Q = HostField::ordered();
const HostField Q3 = HostField::padic(3);

Rational q(long n, long d = 1) { return make_rational(n, d); }

std::vector<Rational> axis_grid() {
  std::vector<Rational> out;
  for (long n = -12; n <= 12; ++n)
    for (long d : {1, 2, 3, 4, 9}) out.push_back(q(n, d));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

TEST(Dirac, OrderedExamples) {
  auto d = dirac_functions({0}, 2, 4, Q);
  EXPECT_EQ((*d.ball)({3}), 1);
  EXPECT_EQ((*d.ball)({1}), 0);
  EXPECT_EQ((*d.plateau)({3}), q(1, 2));
  EXPECT_EQ((*d.plateau)({-2}), 1);
  EXPECT_EQ((*d.outside)({5}), 0);
  EXPECT_THROW(dirac_functions({0}, 4, 2, Q), std::invalid_argument);
}

TEST(Dirac, ValuedExamples) {
  // B = {v >= 1}, B0 = {v >= 0}
  auto d = dirac_functions({0}, 3, q(1, 3), Q3);
  EXPECT_EQ((*d.plateau)({3}), 1);
  EXPECT_EQ((*d.plateau)({q(1, 3)}), 0);
  EXPECT_THROW(dirac_functions({0}, q(1, 3), 1, Q3), std::invalid_argument);
}

TEST(Dirac, ZeroSetContracts) {
  for (const auto& host : {Q, Q3}) {
    Point a{q(1, 3)};
    Rational rb = host.is_valued() ? Rational(3) : Rational(1);
    Rational r0 = host.is_valued() ? q(1, 3) : Rational(2);
    auto d = dirac_functions(a, rb, r0, host);
    Region B = closed_ball(a, rb), B0 = open_ball(a, r0);
    for (const auto& t : axis_grid()) {
      Point x{t};
      EXPECT_EQ((*d.at_point)(x) == 0, t == a[0]) << host.name() << " " << to_string(t);
      EXPECT_EQ((*d.ball)(x) == 0, contains(B, x, host)) << host.name() << " " << to_string(t);
      EXPECT_EQ((*d.outside)(x) == 0, !contains(B0, x, host)) << host.name() << " " << to_string(t);
      EXPECT_EQ((*d.plateau)(x) == 1, contains(B, x, host)) << host.name() << " " << to_string(t);
      if (!contains(B0, x, host)) EXPECT_EQ((*d.plateau)(x), 0);
    }
  }
}

TEST(Dirac, TwoDimensionalPoint) {
  auto d = dirac_functions({0, 0}, 1, 2, Q);
  EXPECT_EQ((*d.at_point)({0, 0}), 0);
  EXPECT_EQ((*d.at_point)({3, -5}), -5);
  EXPECT_EQ((*d.ball)({1, 1}), 0);
}

TEST(Affine, ZeroSetsAreTheLines) {
  GermWitness w = germs_open_affine(2, {0, 0});
  ASSERT_EQ(w.k, 2u);
  for (long a = -4; a <= 4; ++a)
    for (long b = -4; b <= 4; ++b) {
      Point x{q(a, 2), q(b, 2)};
      EXPECT_EQ((*w.s_list[0])(x) == 0, x[1] == x[0]);
      EXPECT_EQ((*w.s_list[1])(x) == 0, x[1] == 2 * x[0]);
    }
  // δ_1 separates the branches
  EXPECT_EQ((*w.delta_list[0])({1, 1}), 1);
  EXPECT_EQ((*w.delta_list[0])({1, 2}), 0);
  EXPECT_EQ((*w.delta_list[1])({q(1, 8), q(1, 4)}), 1);
  EXPECT_THROW(germs_open_affine(2, {0}), std::invalid_argument);
}

TEST(Affine, SeparatedForSmallK) {
  for (std::size_t k = 1; k <= 4; ++k) {
    GermWitness w = germs_open_affine(k, {0, 0});
    auto r = check_separated(w, make_sample_plan(w, 8));
    EXPECT_TRUE(r.all()) << "k=" << k << " " << (r.failures.empty() ? "" : r.failures.front());
  }
  GermWitness w3 = germs_open_affine(3, {1, -1, 2});
  EXPECT_TRUE(check_separated(w3, make_sample_plan(w3, 6)).all());
}

TEST(Affine, AsPrintedQuotientIsUnbounded) {
  GermWitness w = germs_open_affine(2, {0, 0}, Q, AffineVariant::AsPrinted);
  auto r = check_separated(w, make_sample_plan(w, 8));
  EXPECT_TRUE(r.s1);
  EXPECT_TRUE(r.s2);
  EXPECT_FALSE(r.s4);
}

TEST(Affine, InjectedFaultsAreDetected) {
  GermWitness w = germs_open_affine(3, {0, 0});
  auto plan = make_sample_plan(w, 8);
  auto bad = check_separated(mutate_delta(w, 0, 1, 2), plan);
  EXPECT_FALSE(bad.s3);
  EXPECT_FALSE(bad.failures.empty());
  auto lonely = isolate_zero(w, 0);
  EXPECT_FALSE(check_separated(lonely, make_sample_plan(lonely, 8)).s2);
  EXPECT_THROW(check_separated(w, SamplePlan{}), std::invalid_argument);
}

TEST(Congruence, Membership) {
  GermWitness w = germs_valued_congruence(2, 0, Q3);
  // S_1 holds v ≡ 1, the second set v ≡ 0 (mod 2)
  EXPECT_TRUE(contains(w.branch_sets[0], {3}, Q3));
  EXPECT_FALSE(contains(w.branch_sets[1], {3}, Q3));
  EXPECT_TRUE(contains(w.branch_sets[1], {9}, Q3));
  EXPECT_FALSE(contains(w.branch_sets[0], {q(1, 3)}, Q3));
  EXPECT_FALSE(contains(w.branch_sets[1], {q(1, 3)}, Q3));
  EXPECT_EQ((*w.s_list[0])({3}), 0);
  EXPECT_EQ((*w.delta_list[0])({3}), 1);
  EXPECT_EQ((*w.delta_list[0])({9}), 0);
}

TEST(Congruence, DeepPointsAndPartition) {
  for (std::size_t k = 1; k <= 5; ++k) {
    GermWitness w = germs_valued_congruence(k, q(1, 2), Q3);
    for (std::size_t i = 0; i < k; ++i) {
      long v = 10 * static_cast<long>(k) + static_cast<long>(i + 1);
      Point x{q(1, 2) + pow_int(3, v)};
      for (std::size_t j = 0; j < k; ++j)
        EXPECT_EQ(contains(w.branch_sets[j], x, Q3), j == i) << k << " " << i;
    }
    EXPECT_TRUE(check_separated(w, make_sample_plan(w, 12)).all()) << k;
  }
}

TEST(Congruence, Globalize) {
  GermWitness w = germs_valued_congruence(2, 0, Q3);
  GermWitness g = globalize(w, 9, 1);
  EXPECT_TRUE(check_separated(g, make_sample_plan(g, 10)).all());
  Region B = closed_ball({0}, 9);
  for (long e = -3; e <= 8; ++e)
    for (long u : {1, 2, 4}) {
      Point x{pow_int(3, e) * u};
      for (std::size_t i = 0; i < 2; ++i) {
        bool want = contains(w.branch_sets[i], x, Q3) && contains(B, x, Q3);
        EXPECT_EQ((*g.s_list[i])(x) == 0, want) << point_string(x) << " i=" << i;
        if (!contains(B, x, Q3)) EXPECT_NE((*g.s_list[i])(x), 0);
      }
    }
  GermWitness gg = globalize(g, 9, 1);
  for (long e = -3; e <= 8; ++e) {
    Point x{pow_int(3, e)};
    for (std::size_t i = 0; i < 2; ++i) EXPECT_EQ((*gg.s_list[i])(x) == 0, (*g.s_list[i])(x) == 0);
  }
  EXPECT_THROW(globalize(w, 1, 9), std::invalid_argument);
}

TEST(Limits, Examples) {
  GermWitness w = germs_valued_congruence(2, 0, Q3);
  auto plan = make_sample_plan(w, 8);
  auto lp = limit_pair(w, {7, 9});
  EXPECT_EQ(limit_values(lp.f, lp.g, w, plan), (std::vector<Rational>{7, 9}));
  GermWitness w1 = germs_valued_congruence(1, 0, Q3);
  auto lp1 = limit_pair(w1, {0});
  EXPECT_EQ(limit_values(lp1.f, lp1.g, w1, make_sample_plan(w1, 8)), (std::vector<Rational>{0}));
  auto dup = limit_pair(w, {4, 4});
  EXPECT_EQ(limit_values(dup.f, dup.g, w, plan), (std::vector<Rational>{4}));
  EXPECT_THROW(limit_pair(w, {1}), std::invalid_argument);
}

TEST(Limits, PermutationAndUnitInvariance) {
  GermWitness w = germs_valued_congruence(3, 0, Q3);
  auto plan = make_sample_plan(w, 9);
  std::vector<Rational> l{q(-1, 2), 5, 11};
  auto base = limit_pair(w, l);
  auto want = limit_values(base.f, base.g, w, plan);
  EXPECT_EQ(want, (std::vector<Rational>{q(-1, 2), 5, 11}));
  GermWitness perm = w;
  std::swap(perm.s_list[0], perm.s_list[2]);
  std::swap(perm.delta_list[0], perm.delta_list[2]);
  std::swap(perm.branches[0], perm.branches[2]);
  std::swap(perm.branch_sets[0], perm.branch_sets[2]);
  auto lp = limit_pair(perm, l);
  EXPECT_EQ(limit_values(lp.f, lp.g, perm, make_sample_plan(perm, 9)), want);
  // scale f and g by the same unit
  for (Rational u : {Rational(2), q(-5, 7)}) {
    FnRef f = make_fn("uf", 1, Q3, e_mul(e_const(u), e_apply(base.f, 1)));
    FnRef g = make_fn("ug", 1, Q3, e_mul(e_const(u), e_apply(base.g, 1)));
    EXPECT_EQ(limit_values(f, g, w, plan), want);
  }
}

TEST(Limits, RejectsVanishingDenominator) {
  GermWitness w = germs_valued_congruence(2, 0, Q3);
  auto lp = limit_pair(w, {1, 2});
  FnRef zero = make_fn("zero", 1, Q3, e_const(0));
  EXPECT_THROW(limit_values(lp.f, zero, w, make_sample_plan(w, 4)), std::invalid_argument);
}

TEST(PiecewiseEval, FirstMatchAndErrors) {
  FnRef f = make_fn("f", 1, Q, {{closed_ball({0}, 1), e_const(1)}, {closed_ball({0}, 2), e_const(2)}}, e_const(3));
  EXPECT_EQ((*f)({q(1, 2)}), 1);
  EXPECT_EQ((*f)({q(3, 2)}), 2);
  EXPECT_EQ((*f)({5}), 3);
  EXPECT_EQ(f->firing_case({5}), 2u);
  EXPECT_THROW(eval(e_div(e_const(1), e_coord(0)), {0}, Q), EvalError);
  EXPECT_THROW(eval(e_abs(e_coord(0)), {1}, Q3), EvalError);
  EXPECT_EQ(eval(e_nu({e_coord(0), e_coord(1)}), {3, -5}, Q), -5);
}

TEST(LocalDim, Boxes) {
  std::vector<Region> S{box({0, 0}, {1, 1}), box({1, 0}, {2, 0})};
  EXPECT_EQ(local_dim_oracle(S, {q(1, 2), q(1, 2)}), 2);
  // every ball around the junction meets the square
  EXPECT_EQ(local_dim_oracle(S, {1, 0}), 2);
  EXPECT_EQ(local_dim_oracle(S, {q(3, 2), 0}), 1);
  EXPECT_FALSE(local_dim_oracle(S, {5, 5}).has_value());
  EXPECT_THROW(local_dim_oracle({open_ball({0, 0}, 1)}, {0, 0}), std::invalid_argument);
}

TEST(LocalDim, AffineAndCharts) {
  std::vector<Region> A{affine_piece({0, 0}, {{1, 0}}), box({3, 3}, {3, 3})};
  EXPECT_EQ(local_dim_oracle(A, {7, 0}), 1);
  EXPECT_EQ(local_dim_oracle(A, {3, 3}), 0);
  std::vector<Region> S{box({0, 0}, {1, 1}), box({1, 0}, {2, 0})};
  EXPECT_EQ(in_w_k(S, {q(3, 2), 0}, 1), true);
  EXPECT_FALSE(in_w_k(S, {1, 0}, 1).has_value());
  EXPECT_TRUE(w_k_dense_near(S, {q(1, 2), q(1, 2)}, 2, 6));
}

TEST(LocalDim, ProjectionDoesNotRaiseDimension) {
  std::vector<std::vector<Region>> sets{
      {box({0, 0, 0}, {1, 1, 0})}, {box({0, 0, 0}, {0, 0, 1}), box({2, 2, 2}, {3, 2, 2})}, {box({0, 0, 0}, {1, 1, 1})}};
  for (const auto& S : sets)
    for (const std::vector<std::size_t>& coords : {std::vector<std::size_t>{0}, {0, 1}, {1, 2}, {2}})
      EXPECT_LE(set_dim(project_boxes(S, coords)), set_dim(S));
}
