#include <gtest/gtest.h>

#include <random>

#include "ringdef/formula.hpp"
#include "ringdef/schemas.hpp"

using namespace ringdef;

namespace {

Term random_term(std::mt19937_64& rng, int size, const std::vector<std::string>& vars) {
  if (size <= 1) {
    switch (rng() % 4) {
      case 0: return zero();
      case 1: return one();
      default: return var(vars[rng() % vars.size()]);
    }
  }
  switch (rng() % 3) {
    case 0: return add(random_term(rng, size / 2, vars), random_term(rng, size - size / 2, vars));
    case 1: return neg(random_term(rng, size - 1, vars));
    default: return mul(random_term(rng, size / 2, vars), random_term(rng, size - size / 2, vars));
  }
}

Formula random_formula(std::mt19937_64& rng, int size, std::vector<std::string> vars, bool with_O) {
  if (size <= 1) {
    if (with_O && rng() % 3 == 0) return in_O(random_term(rng, 3, vars));
    return eq(random_term(rng, 3, vars), random_term(rng, 3, vars));
  }
  switch (rng() % 6) {
    case 0: return lnot(random_formula(rng, size - 1, vars, with_O));
    case 1: return land(random_formula(rng, size / 2, vars, with_O), random_formula(rng, size - size / 2, vars, with_O));
    case 2: return lor(random_formula(rng, size / 2, vars, with_O), random_formula(rng, size - size / 2, vars, with_O));
    case 3: return imp(random_formula(rng, size / 2, vars, with_O), random_formula(rng, size - size / 2, vars, with_O));
    default: {
      std::string v = "v" + std::to_string(rng() % 4);
      vars.push_back(v);
      Formula body = random_formula(rng, size - 1, vars, with_O);
      return rng() % 2 ? exists(v, body) : forall(v, body);
    }
  }
}

}  // namespace

TEST(Parse, JacobsonInstance) {
  Formula f = parse_formula("(forall x (exists z (= (* (+ 1 (* x g)) z) (+ 1 (* y1 f1)))))");
  auto st = stats(f);
  EXPECT_EQ(st.quantifiers, 2u);
  EXPECT_EQ(f->kind, FormulaKind::Forall);
  EXPECT_EQ(f->f1->kind, FormulaKind::Exists);
  EXPECT_EQ(free_vars(f), (std::set<std::string>{"f1", "g", "y1"}));
}

TEST(Parse, LanguageGate) {
  try {
    parse_formula("(in-O c)", Language::Ring);
    FAIL() << "expected UnknownPredicate";
  } catch (const UnknownPredicate& e) {
    EXPECT_EQ(e.predicate(), "in-O");
    EXPECT_EQ(e.offset(), 1u);
  }
  EXPECT_NO_THROW(parse_formula("(in-O c)", Language::RingO));
  EXPECT_THROW(parse_formula("(in-B c)", Language::RingO), UnknownPredicate);
  EXPECT_THROW(parse_formula("(and (in-O c) (in-B c))"), UnknownPredicate);
}

TEST(Parse, SyntaxErrorsCarryOffsets) {
  try {
    parse_formula("(= x");
    FAIL() << "expected SyntaxError";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.offset(), 4u);
  }
  EXPECT_THROW(parse_formula("(= x y) trailing"), SyntaxError);
  EXPECT_THROW(parse_formula("(frob x)"), UnknownPredicate);
  EXPECT_THROW(parse_formula("(= (+ x) y)"), SyntaxError);
  EXPECT_THROW(parse_formula(""), SyntaxError);
}

TEST(Parse, WhitespaceInsensitive) {
  Formula a = parse_formula("(exists y (= (* x y) 1))");
  Formula b = parse_formula("  (exists   y\n\t(=  (*  x  y)  1) )  ");
  EXPECT_TRUE(equal(a, b));
  EXPECT_EQ(print_formula(b), "(exists y (= (* x y) 1))");
}

TEST(Parse, RandomRoundTrip) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    Formula f = random_formula(rng, 1 + static_cast<int>(rng() % 8), {"x", "y", "f", "tau*"}, i % 2 == 0);
    std::string text = print_formula(f);
    Formula back = parse_formula(text);
    ASSERT_TRUE(equal(f, back)) << text;
    EXPECT_EQ(print_formula(back), text);
  }
}

TEST(Substitute, CaptureAvoiding) {
  Formula f = parse_formula("(exists y (= x y))");
  Formula g = substitute(f, "x", var("y"));
  EXPECT_EQ(print_formula(g), "(exists y' (= y y'))");
  EXPECT_TRUE(alpha_equal(g, parse_formula("(exists w (= y w))")));
  EXPECT_FALSE(alpha_equal(g, parse_formula("(exists y (= y y))")));
}

TEST(Substitute, Closed) {
  Formula g = substitute(parse_formula("(= x 0)"), "x", add(one(), one()));
  EXPECT_EQ(print_formula(g), "(= (+ 1 1) 0)");
  Formula bound = parse_formula("(forall x (= x 0))");
  EXPECT_TRUE(equal(substitute(bound, "x", one()), bound));
}

TEST(Substitute, FreeVariableLaw) {
  std::mt19937_64 rng(11);
  int checked = 0;
  for (int i = 0; i < 500; ++i) {
    Formula f = random_formula(rng, 1 + static_cast<int>(rng() % 6), {"x", "y", "z"}, false);
    Term t = random_term(rng, 3, {"x", "y", "v0", "v1"});
    auto fv = free_vars(f);
    Formula g = substitute(f, "x", t);
    if (!fv.count("x")) {
      EXPECT_TRUE(equal(g, f));
      continue;
    }
    ++checked;
    std::set<std::string> want = fv;
    want.erase("x");
    for (const auto& v : free_vars(t)) want.insert(v);
    EXPECT_EQ(free_vars(g), want) << print_formula(f) << " [x := " << print_term(t) << "]";
  }
  EXPECT_GT(checked, 100);
}

TEST(Substitute, SimultaneousSwap) {
  Formula f = parse_formula("(= x y)");
  Formula g = substitute_all(f, {{"x", var("y")}, {"y", var("x")}});
  EXPECT_EQ(print_formula(g), "(= y x)");
}

TEST(FreeVars, Examples) {
  EXPECT_EQ(free_vars(parse_formula("(forall x (= x y))")), (std::set<std::string>{"y"}));
  EXPECT_TRUE(free_vars(parse_formula("(forall x (exists y (= (* x y) 1)))")).empty());
  EXPECT_EQ(free_vars(int_times_schema().body), (std::set<std::string>{"h", "p", kTau}));
}

TEST(Language, Tags) {
  EXPECT_EQ(language_of(parse_formula("(= x 0)")), Language::Ring);
  EXPECT_EQ(language_of(parse_formula("(in-O x)")), Language::RingO);
  EXPECT_EQ(language_of(parse_formula("(not (in-B x))")), Language::RingB);
  EXPECT_TRUE(licensed(parse_formula("(= x 0)"), Language::RingB));
  EXPECT_FALSE(licensed(parse_formula("(in-O x)"), Language::RingB));
}

TEST(VarPoolTest, NeverReissues) {
  VarPool pool({"x", "x'"});
  std::string a = pool.fresh("x");
  EXPECT_EQ(a, "x''");
  std::string b = pool.fresh("x");
  EXPECT_NE(a, b);
  EXPECT_FALSE(b == "x" || b == "x'");
  EXPECT_EQ(pool.fresh("y", {"y"}), "y'");
  EXPECT_EQ(pool.issued(), 3u);
}

TEST(Print, Terms) {
  EXPECT_EQ(print_term(numeral(3)), "(+ (+ 1 1) 1)");
  EXPECT_EQ(print_term(numeral(0)), "0");
  EXPECT_EQ(print_term(sub(var("a"), var("b"))), "(+ a (- b))");
  EXPECT_TRUE(equal(parse_term("(* x (- 1))"), mul(var("x"), neg(one()))));
}
