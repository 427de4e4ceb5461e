#include <gtest/gtest.h>

#include "ringdef/host.hpp"
#include "ringdef/poly.hpp"
#include "ringdef/scalar.hpp"

using namespace ringdef;

namespace {

const HostField Q = HostField::ordered();
const HostField Q3 = HostField::padic(3);

std::vector<Rational> sample_values() {
  std::vector<Rational> out;
  for (long n = -9; n <= 9; ++n)
    for (long d : {1, 2, 3, 9}) out.push_back(make_rational(n, d));
  return out;
}

}  // namespace

TEST(Rational, ParseCanonicalizes) {
  EXPECT_EQ(parse_rational("6/4"), make_rational(3, 2));
  EXPECT_EQ(parse_rational("-2/4"), make_rational(-1, 2));
  EXPECT_THROW(parse_rational("-2/-4"), std::invalid_argument);
  EXPECT_EQ(to_string(parse_rational("10/5")), "2");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
}

TEST(Rational, Valuation) {
  EXPECT_EQ(valuation(9, 3), 2);
  EXPECT_EQ(valuation(make_rational(1, 27), 3), -3);
  EXPECT_EQ(valuation(2, 3), 0);
  EXPECT_FALSE(valuation(0, 3).has_value());
}

TEST(Host, OrderedUnitInterval) {
  EXPECT_TRUE(Q.in_O(1));
  EXPECT_TRUE(Q.in_O(-1));
  EXPECT_TRUE(Q.in_O(make_rational(1, 3)));
  EXPECT_FALSE(Q.in_O(make_rational(3, 2)));
  EXPECT_FALSE(Q.abs_le(-3, 2));
}

TEST(Host, PadicValuationRing) {
  EXPECT_TRUE(Q3.in_O(5));
  EXPECT_TRUE(Q3.in_O(make_rational(1, 2)));
  EXPECT_FALSE(Q3.in_O(make_rational(1, 3)));
  // |y| <= |x| iff v(y) >= v(x)
  EXPECT_TRUE(Q3.abs_le(9, 3));
  EXPECT_FALSE(Q3.abs_le(3, 9));
  EXPECT_TRUE(HostField::padic(2).abs_le(4, 2));
  EXPECT_THROW(HostField::padic(4), std::invalid_argument);
}

TEST(Host, ParseNames) {
  EXPECT_EQ(HostField::parse("ordered-q"), Q);
  EXPECT_EQ(HostField::parse("padic-q:5"), HostField::padic(5));
  EXPECT_THROW(HostField::parse("padic-q:x"), std::invalid_argument);
  EXPECT_THROW(HostField::parse("reals"), std::invalid_argument);
}

TEST(Host, AbsoluteValueIsMultiplicative) {
  for (const auto& host : {Q, Q3, HostField::padic(5)}) {
    for (const auto& a : sample_values())
      for (const auto& b : sample_values()) {
        Rational ab = a * b;
        EXPECT_EQ(compare(host.abs_class(ab), host.abs_class(a) * host.abs_class(b)), 0);
      }
    EXPECT_EQ(compare(host.abs_class(0), host.abs_class(0)), 0);
    EXPECT_LT(compare(host.abs_class(0), host.abs_class(make_rational(1, 1000))), 0);
  }
}

TEST(Host, Ultrametric) {
  for (const auto& a : sample_values())
    for (const auto& b : sample_values()) {
      Rational s = a + b;
      if (s == 0) continue;
      long va = a == 0 ? 1000 : *Q3.val(a), vb = b == 0 ? 1000 : *Q3.val(b);
      EXPECT_GE(*Q3.val(s), std::min(va, vb));
    }
}

TEST(Host, UnitsOfO) {
  for (const auto& host : {Q, Q3})
    for (const auto& a : sample_values()) {
      if (a == 0) continue;
      Rational inv = 1 / a;
      bool unit = host.in_O(a) && host.in_O(inv);
      EXPECT_EQ(unit, host.compare_abs(a, 1) == 0) << to_string(a) << " on " << host.name();
    }
}

TEST(NuM, SelectionRule) {
  EXPECT_EQ(nu_m({3, -5}, Q), -5);
  EXPECT_EQ(nu_m({0, 0, 0}, Q), 0);
  EXPECT_EQ(nu_m({9, 2}, Q3), 2);
  // ties keep the first coordinate
  EXPECT_EQ(nu_m({-4, 4}, Q), -4);
  EXPECT_THROW(nu_m({}, Q), std::invalid_argument);
}

TEST(NuM, AbsoluteValueIsTheNorm) {
  auto vals = sample_values();
  for (const auto& host : {Q, Q3})
    for (std::size_t i = 0; i < vals.size(); i += 3)
      for (std::size_t j = 0; j < vals.size(); j += 5) {
        std::vector<Rational> x{vals[i], vals[j], vals[(i + j) % vals.size()]};
        EXPECT_EQ(compare(host.abs_class(nu_m(x, host)), norm_class(x, host)), 0);
      }
}

TEST(Poly, RationalRoots) {
  Poly p({-2, 1, 1});  // (x + 2)(x - 1)
  EXPECT_EQ(p.rational_roots(), (std::vector<Rational>{-2, 1}));
  EXPECT_TRUE(Poly({1, 0, 1}).rational_roots().empty());
  Poly q({-1, 0, 4});  // 4x^2 - 1
  EXPECT_EQ(q.rational_roots(), (std::vector<Rational>{make_rational(-1, 2), make_rational(1, 2)}));
  EXPECT_EQ(Poly().degree(), -1);
}

TEST(Homogenize, SumOfSquares) {
  auto h = homogenize(Poly({1, 0, 1}));
  EXPECT_EQ(h.q, (BinaryForm{2, {1, 0, 1}}));
  EXPECT_EQ(h.q.eval(3, 4), 25);
  EXPECT_EQ(h.u.eval(3, 4), 3);
  EXPECT_EQ(h.v.eval(3, 4), 4);
}

TEST(Homogenize, IdentityAndOriginOnlyZero) {
  for (const Poly& p : {Poly({1, 0, 1}), Poly({1, 1, 1}), Poly({-2, 0, 0, 1}), Poly({3, 0, 0, 0, 1})}) {
    auto h = homogenize(p);
    for (long a = -5; a <= 5; ++a)
      for (long b = -5; b <= 5; ++b) {
        EXPECT_EQ(a * h.u.eval(a, b) + b * h.v.eval(a, b), h.q.eval(a, b));
        if (a != 0 || b != 0) EXPECT_NE(h.q.eval(a, b), 0) << a << "," << b;
      }
  }
}

TEST(Homogenize, Preconditions) {
  EXPECT_THROW(homogenize(Poly({1, 0, 2})), std::invalid_argument);   // not monic
  EXPECT_THROW(homogenize(Poly::constant(1)), std::invalid_argument);  // degree 0
  EXPECT_THROW(homogenize(Poly({-1, 0, 1})), std::invalid_argument);  // root 1
}

TEST(UvValued, Regions) {
  auto r = uv_valued(1, 1, Q3);
  EXPECT_EQ(r.region, UVRegion::U);
  EXPECT_EQ(r.u, 2);
  EXPECT_EQ(r.v, 2);
  auto z = uv_valued(0, 0, Q3);
  EXPECT_EQ(z.region, UVRegion::Z);
  EXPECT_EQ(0 * z.u + 0 * z.v, 0);
  EXPECT_EQ(uv_valued(1, 2, Q3).region, UVRegion::V);  // |1 - 2| = |1 + 2| fails U
}

TEST(UvValued, PiecewiseValuesAndOriginOnlyZero) {
  for (unsigned long p : {3ul, 5ul}) {
    HostField host = HostField::padic(p);
    for (long x = -3; x <= 3; ++x)
      for (long y = -3; y <= 3; ++y) {
        auto r = uv_valued(x, y, host);
        Rational combined = x * r.u + y * r.v;
        if (x == 0 && y == 0) continue;
        EXPECT_NE(combined, 0);
        Rational want = r.region == UVRegion::U ? Rational((x + y) * (x + y)) : Rational((x - y) * (x - y));
        EXPECT_EQ(combined, want);
      }
  }
}

TEST(Gaussian, ConjugationAndNormForm) {
  EXPECT_EQ(conj(Gaussian{1, 2}), (Gaussian{1, -2}));
  EXPECT_EQ(norm_form({1, 1}, {2, 0}), (Gaussian{6, 0}));
  EXPECT_TRUE(norm_form({0, 0}, {0, 0}).is_zero());
  for (long a = -2; a <= 2; ++a)
    for (long b = -2; b <= 2; ++b)
      for (long c = -2; c <= 2; ++c) {
        if (a == 0 && b == 0 && c == 0) continue;
        EXPECT_FALSE(norm_form({a, b}, {c, 1}).is_zero());
        EXPECT_FALSE(norm_form({a, b}, {c, 0}).is_zero());
      }
}
