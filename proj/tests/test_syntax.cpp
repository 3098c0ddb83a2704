#include <gtest/gtest.h>

#include "inlr/parse.hpp"
#include "inlr/print.hpp"

using namespace inlr;

namespace {

Term ip(const char* s) { return parse_term(s, Calculus::IPlus); }
Term cc(const char* s) { return parse_term(s, Calculus::CC); }
Term qu(const char* s) { return parse_term(s, Calculus::Quantum); }

}  // namespace

TEST(Parse, InlrTwoArguments) {
  Term t = ip("inlr(star, star)");
  ASSERT_EQ(t.kind(), Kind::Inlr2);
  EXPECT_EQ(t.kid(0).kind(), Kind::Star);
  EXPECT_EQ(t.kid(1).kind(), Kind::Star);
}

TEST(Parse, CaseBindsBranches) {
  Term t = ip("case(inl(star), x. x, y. y)");
  ASSERT_EQ(t.kind(), Kind::Case);
  EXPECT_EQ(t.kid(0).kind(), Kind::Inl);
  EXPECT_TRUE(t.kid(1).is_bound_var());
  EXPECT_EQ(t.kid(1).index(), 0);
  EXPECT_EQ(t.hint(1), "x");
  EXPECT_EQ(t.hint(2), "y");
}

TEST(Parse, SumIsNotInCc) {
  EXPECT_THROW(cc("sum(1.0 . star, 2.0 . star)"), CalculusError);
  EXPECT_THROW(ip("case_nd(x, y. y, z. z)"), CalculusError);
  EXPECT_THROW(qu("pair(x, y)"), CalculusError);
  EXPECT_THROW(ip("inlr(x, y. y, z. z)"), CalculusError);
  EXPECT_THROW(cc("inlr(x, y)"), CalculusError);
  EXPECT_THROW(ip("lam x:One. x"), CalculusError);
}

TEST(Parse, SyntaxErrorPosition) {
  try {
    ip("pair(star,\n  )");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 3);
  }
}

TEST(Parse, ScalarsAndComments) {
  Term t = qu("-- a comment\nprod((0.0, 1.0), 2.5 . star)");
  ASSERT_EQ(t.kind(), Kind::Prod);
  EXPECT_EQ(t.scalar(), Scalar(0.0, 1.0));
  EXPECT_EQ(t.kid(0).scalar(), Scalar(2.5, 0.0));
  Term z = qu("inlr(0.star, 0.star)");
  EXPECT_EQ(z.kid(0).kind(), Kind::ScalarStar);
}

TEST(Parse, ApplicationIsLeftAssociative) {
  Term t = ip("f x y");
  ASSERT_EQ(t.kind(), Kind::App);
  EXPECT_EQ(t.kid(0).kind(), Kind::App);
  EXPECT_EQ(t.kid(1).name(), "y");
}

TEST(Parse, Propositions) {
  EXPECT_EQ(to_string(parse_prop("A => B => C", Calculus::IPlus)), "A => B => C");
  EXPECT_EQ(parse_prop("A => B => C", Calculus::IPlus),
            Prop::impl(Prop::atom("A"), Prop::impl(Prop::atom("B"), Prop::atom("C"))));
  EXPECT_EQ(parse_prop("A /\\ B \\/ C", Calculus::IPlus),
            Prop::disj(Prop::conj(Prop::atom("A"), Prop::atom("B")), Prop::atom("C")));
  EXPECT_EQ(to_string(parse_prop("(One (+) One) -o One", Calculus::Quantum)),
            "(One (+) One) -o One");
  EXPECT_THROW(parse_prop("One", Calculus::IPlus), CalculusError);
}

TEST(Print, Basic) {
  EXPECT_EQ(print_term(ip("inlr(star, star)")), "inlr(star, star)");
  EXPECT_EQ(print_term(ip("lam x:A. x")), "lam x:A. x");
  EXPECT_EQ(print_term(qu("sum(3 . star, (1, -2) . star)")),
            "sum(3.0 . star, (1.0, -2.0) . star)");
  EXPECT_EQ(print_term(ip("(lam x:A. x) (f y)")), "(lam x:A. x) (f y)");
  EXPECT_EQ(print_term(ip("bot_elim[A => B](x)")), "bot_elim[A => B](x)");
}

TEST(Print, RoundTrip) {
  const char* cases[] = {
      "lam x:A => B. lam y:A. x y",
      "case(z, x. inr(x), y. inl(y))",
      "and1(w, x. and2(w, y. pair(x, y)))",
      "f (lam x:Top. x) star",
      "top_elim(star, lam x:Top. x)",
  };
  for (const char* s : cases) {
    Term t = ip(s);
    EXPECT_TRUE(alpha_eq(parse_term(print_term(t), Calculus::IPlus), t)) << s;
  }
  Term c = cc("inlr(t, x. lam y:C. x, y. y)");
  EXPECT_TRUE(alpha_eq(cc(print_term(c).c_str()), c));
}

TEST(Alpha, Equivalence) {
  EXPECT_TRUE(alpha_eq(ip("lam x:A. x"), ip("lam y:A. y")));
  EXPECT_FALSE(alpha_eq(ip("lam x:A. x"), ip("lam x:A. star")));
  EXPECT_TRUE(alpha_eq(ip("case(z, x. x, y. y)"), ip("case(z, a. a, b. b)")));
  EXPECT_FALSE(alpha_eq(ip("lam x:A. x"), ip("lam x:B. x")));
  EXPECT_FALSE(alpha_eq(ip("lam x:A. y"), ip("lam x:A. z")));
}

TEST(Subst, CaptureAvoiding) {
  EXPECT_TRUE(alpha_eq(subst(Term::star(), "x", ip("x")), Term::star()));
  Term r = subst(Term::free("y"), "x", ip("lam y:A. x"));
  EXPECT_EQ(print_term(r), "lam y':A. y");
  EXPECT_TRUE(alpha_eq(subst(Term::star(), "x", ip("sum(x, x)")), ip("sum(star, star)")));
  EXPECT_EQ(free_names(r), std::set<std::string>{"y"});
}

TEST(Subst, RespectsAlpha) {
  Term u = ip("pair(y, z)");
  Term a = ip("lam y:A. case(x, p. y, q. x)");
  Term b = ip("lam w:A. case(x, r. w, s. x)");
  ASSERT_TRUE(alpha_eq(a, b));
  EXPECT_TRUE(alpha_eq(subst(u, "x", a), subst(u, "x", b)));
}

TEST(PairSubst, Notation) {
  Term w = Term::free("w");
  EXPECT_TRUE(alpha_eq(pair_subst(w, "x", "y", cc("pair(x, y)")),
                       cc("pair(and1(w, z. z), and2(w, z. z))")));
  EXPECT_TRUE(alpha_eq(pair_subst(w, "x", "y", cc("star")), cc("star")));
  EXPECT_TRUE(alpha_eq(pair_subst(w, "x", "y", cc("x")), cc("and1(w, z. z)")));
}

TEST(Indices, ShiftAndInstantiate) {
  Term body = ip("lam y:A. pair(x, y)");
  Term lam = build::lam("x", Prop::atom("A"), body);
  Term inst = instantiate(lam.kid(0), Term::free("q"));
  EXPECT_TRUE(alpha_eq(inst, ip("lam y:A. pair(q, y)")));
  EXPECT_TRUE(has_index(lam.kid(0), 0));
  EXPECT_FALSE(has_index(lam.kid(0), 1));
  EXPECT_TRUE(is_closed(lam));
}

TEST(Paths, ReplaceAt) {
  Term t = ip("pair(star, inl(x))");
  Term r = replace_at(t, {1, 0}, Term::star());
  EXPECT_TRUE(alpha_eq(r, ip("pair(star, inl(star))")));
  EXPECT_EQ(subterm_at(t, {1, 0}).name(), "x");
}
