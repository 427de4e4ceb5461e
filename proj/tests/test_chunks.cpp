#include <gtest/gtest.h>

#include "ringdef/chunks.hpp"

using namespace ringdef;

namespace {

const PreorderedGroup Z = PreorderedGroup::integers();
const PreorderedGroup M3 = PreorderedGroup::multiplicative(HostField::padic(3));

std::vector<Rational> interval(long lo, long hi) {
  std::vector<Rational> out;
  for (long i = lo; i <= hi; ++i) out.push_back(i);
  return out;
}

std::vector<Rational> powers(const Rational& tau, long lo, long hi) {
  std::vector<Rational> out;
  for (long e = lo; e <= hi; ++e) out.push_back(pow_int(tau, e));
  return out;
}

}  // namespace

TEST(Group, Laws) {
  for (const auto& g : {Z, PreorderedGroup::rationals(), M3}) {
    std::vector<Rational> xs = g.additive() ? std::vector<Rational>{-3, 0, 2, 5} : powers(3, -2, 2);
    if (!g.additive()) xs.push_back(make_rational(2, 9));
    for (const auto& a : xs) {
      EXPECT_EQ(g.op(a, g.identity()), a);
      EXPECT_EQ(g.op(a, g.inverse(a)), g.identity());
      for (const auto& b : xs) {
        EXPECT_TRUE(g.le(a, b) || g.le(b, a));
        for (const auto& c : xs)
          if (g.le(a, b)) EXPECT_TRUE(g.le(g.op(a, c), g.op(b, c))) << g.name();
      }
    }
  }
  EXPECT_TRUE(M3.valid_tau(3));
  EXPECT_FALSE(M3.valid_tau(2));
  EXPECT_FALSE(Z.valid_tau(0));
  EXPECT_FALSE(Z.contains(make_rational(1, 2)));
}

TEST(IsChunk, Examples) {
  EXPECT_TRUE(is_chunk(make_candidate(interval(-2, 2), 1), Z).ok);
  auto half = is_chunk(make_candidate({0, 1, 2}, 1), Z);
  EXPECT_FALSE(half.ok);
  EXPECT_EQ(half.clause, 1);
  EXPECT_TRUE(is_chunk(make_candidate(powers(3, -2, 2), 3), M3).ok);
  EXPECT_FALSE(is_chunk(make_candidate({1}, 1), Z).ok);
}

TEST(IsChunk, Errors) {
  EXPECT_THROW(is_chunk(make_candidate({0, 2}, 1), Z), std::invalid_argument);
  EXPECT_THROW(is_chunk(make_candidate({-1, 0, 1}, -1), Z), std::invalid_argument);
  EXPECT_THROW(is_chunk(make_candidate({make_rational(1, 2), 1}, 1), Z), std::invalid_argument);
}

TEST(Classify, FiniteShapes) {
  EXPECT_EQ(classify_finite_chunk(make_candidate(interval(-3, 3), 1), Z), 3);
  EXPECT_EQ(classify_finite_chunk(make_candidate({-6, -3, 0, 3, 6}, 3), Z), 2);
  EXPECT_FALSE(classify_finite_chunk(make_candidate({-3, -1, 0, 1, 3}, 1), Z).has_value());
  EXPECT_FALSE(classify_finite_chunk(make_candidate({1}, 1), Z).has_value());
  EXPECT_EQ(classify_finite_chunk(make_candidate(powers(3, -4, 4), 3), M3), 4);
  auto Qg = PreorderedGroup::rationals();
  Rational h = make_rational(1, 2);
  EXPECT_EQ(classify_finite_chunk(make_candidate({-1, -h, 0, h, 1}, h), Qg), 2);
  EXPECT_FALSE(classify_finite_chunk(make_candidate({-1, 0, h, 1}, h), Qg).has_value());
}

TEST(Classify, AgreesWithIsChunk) {
  auto e = enumerate_chunks(8, Z, 1);
  for (const auto& c : e.chunks) EXPECT_TRUE(classify_finite_chunk(c, Z).has_value()) << to_string(c);
  // every subset of {-4..4} containing 1
  std::vector<Rational> universe = interval(-4, 4);
  for (unsigned mask = 0; mask < (1u << universe.size()); ++mask) {
    std::vector<Rational> T;
    for (std::size_t i = 0; i < universe.size(); ++i)
      if (mask >> i & 1) T.push_back(universe[i]);
    if (std::find(T.begin(), T.end(), Rational(1)) == T.end()) continue;
    auto c = make_candidate(T, 1);
    EXPECT_EQ(is_chunk(c, Z).ok, classify_finite_chunk(c, Z).has_value()) << to_string(c);
  }
}

TEST(Enumerate, SymmetricIntervalsOnly) {
  auto e1 = enumerate_chunks(1, Z, 1);
  ASSERT_EQ(e1.chunks.size(), 1u);
  EXPECT_EQ(e1.chunks[0].T, interval(-1, 1));
  auto e3 = enumerate_chunks(3, Z, 1);
  ASSERT_EQ(e3.chunks.size(), 3u);
  for (long k = 1; k <= 3; ++k) EXPECT_EQ(e3.chunks[k - 1].T, interval(-k, k));
  EXPECT_EQ(e3.examined, 64u);
  EXPECT_THROW(enumerate_chunks(13, Z, 1), std::length_error);
}

TEST(Enumerate, MultiplicativeMirror) {
  auto e = enumerate_chunks(3, M3, 3);
  ASSERT_EQ(e.chunks.size(), 3u);
  for (long k = 1; k <= 3; ++k) EXPECT_EQ(e.chunks[k - 1].T, powers(3, -k, k));
}

TEST(Transport, ValueGroupFunctor) {
  auto v = to_value_group(make_candidate(powers(3, -2, 2), 3), M3);
  EXPECT_EQ(v.T, interval(-2, 2));
  EXPECT_EQ(v.tau, 1);
  EXPECT_THROW(to_value_group(make_candidate({1, 2, 3}, 3), M3), std::invalid_argument);
  // subsets of the powers 3^-3 .. 3^3 containing 3
  auto universe = powers(3, -3, 3);
  for (unsigned mask = 0; mask < (1u << universe.size()); ++mask) {
    std::vector<Rational> T;
    for (std::size_t i = 0; i < universe.size(); ++i)
      if (mask >> i & 1) T.push_back(universe[i]);
    if (std::find(T.begin(), T.end(), Rational(3)) == T.end()) continue;
    auto c = make_candidate(T, 3);
    EXPECT_EQ(is_chunk(c, M3).ok, is_chunk(to_value_group(c, M3), Z).ok) << to_string(c);
  }
}
