#include <gtest/gtest.h>

#include "inlr/cc.hpp"
#include "inlr/parse.hpp"
#include "inlr/print.hpp"
#include "inlr/typing.hpp"

using namespace inlr;

namespace {

constexpr Calculus C = Calculus::CC;

Term P(const std::string& s) { return parse_term(s, C); }

const char* kCtx = "t:A\\/B, r:C\\/D, e:Bot, s:Top, w:A/\\B, a:A, b:B, c:C, d:D";

Term root_step(const Term& t, const RuleId& id) {
  Rng rng(0);
  return step_at(t, {}, id, std::nullopt, rng, cc_rules()).term;
}

struct Instance {
  int rule;
  int variant;
  const char* term;
};

const Instance kInstances[] = {
    {1, 0, "top_elim(star, a)"},
    {2, 0, "app(lam x:A. pair(x, x), a)"},
    {3, 0, "and1(pair(a, b), x. x)"},
    {4, 0, "and2(pair(a, b), x. pair(x, a))"},
    {5, 0, "case(inl(a), x. x, y. a)"},
    {6, 0, "case(inr(b), x. a, y. a)"},
    {7, 0, "case(inlr(t, x1. pair(x1, a), x2. x2), y1. inl(y1), y2. inr(pair(y2, y2)))"},
    {8, 0, "bot_elim[Top](e)"},
    {9, 0, "bot_elim[A => B](e)"},
    {10, 0, "bot_elim[A /\\ B](e)"},
    {11, 0, "bot_elim[A \\/ B](e)"},
    {12, 0, "bot_elim[A \\/ B](e)"},
    {13, 0, "top_elim(s, star)"},
    {14, 0, "top_elim(s, lam x:A. pair(x, a))"},
    {15, 0, "top_elim(s, pair(a, b))"},
    {16, 0, "top_elim(s, inl(a))"},
    {17, 0, "top_elim(s, inr(b))"},
    {18, 0, "top_elim(s, inlr(t, x. pair(x, s), y. y))"},
    {19, 1, "and1(w, x. star)"},
    {19, 2, "and2(w, x. star)"},
    {20, 1, "and1(w, x. lam y:C. pair(x, y))"},
    {20, 2, "and2(w, x. lam y:C. pair(x, y))"},
    {21, 1, "and1(w, x. pair(x, a))"},
    {21, 2, "and2(w, x. pair(x, a))"},
    {22, 1, "and1(w, x. inl(x))"},
    {23, 2, "and2(w, x. inr(x))"},
    {24, 1, "and1(w, x. inlr(t, y1. pair(x, y1), y2. y2))"},
    {24, 2, "and2(w, x. inlr(inl(x), y1. y1, y2. y2))"},
    {25, 0, "case(t, x1. star, x2. star)"},
    {26, 0, "case(t, x1. lam y:C. pair(x1, y), x2. lam z:C. pair(a, z))"},
    {27, 0, "case(t, x1. pair(x1, a), x2. pair(a, a))"},
    {28, 0, "case(t, x1. inl(x1), x2. inl(a))"},
    {29, 0, "case(t, x1. inl(x1), x2. inr(x2))"},
    {30, 0, "case(t, x1. inl(x1), x2. inlr(r, y3. a, y4. pair(x2, y4)))"},
    {31, 0, "case(t, x1. inr(x1), x2. inl(x2))"},
    {32, 0, "case(t, x1. inr(x1), x2. inr(a))"},
    {33, 0, "case(t, x1. inr(x1), x2. inlr(r, y3. pair(x2, y3), y4. a))"},
    {34, 0, "case(t, x1. inlr(r, y1. pair(x1, y1), y2. b), x2. inl(pair(a, c)))"},
    {35, 0, "case(t, x1. inlr(r, y1. b, y2. pair(x1, y2)), x2. inr(pair(a, d)))"},
    {36, 0, "case(t, x1. inlr(r, y1. pair(x1, y1), y2. a), x2. inlr(r, y3. pair(a, y3), y4. a))"},
};

}  // namespace

TEST(CcRules, Table) {
  EXPECT_EQ(cc_rules().rules.size(), 42u);
  EXPECT_EQ(cc_det_rules().rules.size(), 40u);
}

TEST(CcRules, EveryRulePreservesTypes) {
  Context g = parse_context(kCtx, C);
  for (const auto& in : kInstances) {
    Term t = P(in.term);
    RuleId id{C, in.rule, in.variant};
    bool listed = false;
    for (const auto& r : find_redexes(t, cc_rules())) listed |= r.pos.empty() && r.rule == id;
    ASSERT_TRUE(listed) << in.term << " " << id.str();
    Term u = root_step(t, id);
    TypeResult before = infer_cc(g, t);
    ASSERT_TRUE(before) << in.term << ": " << before.error().render();
    EXPECT_TRUE(has_type(C, g, u, before.prop())) << id.str() << " gives " << print_term(u);
  }
}

TEST(CcRules, Examples) {
  EXPECT_TRUE(alpha_eq(root_step(P("and1(t, x. lam y:C. u)"), {C, 20, 1}), P("lam y:C. and1(t, x. u)")));
  EXPECT_EQ(print_term(root_step(P("bot_elim[Top](t)"), {C, 8, 0})), "star");
  Term seven = root_step(P("case(inlr(t, x1. u1, x2. u2), y1. pair(y1, v), y2. y2)"), {C, 7, 0});
  EXPECT_TRUE(alpha_eq(seven, P("case(t, x1. pair(u1, v), x2. u2)")));
  // The binders of u1 stay bound after substitution.
  Term bound = root_step(P("case(inlr(t, x1. inl(x1), x2. x2), y1. y1, y2. y2)"), {C, 7, 0});
  EXPECT_TRUE(alpha_eq(bound, P("case(t, x1. inl(x1), x2. x2)")));
}

TEST(CcRules, BottomChoiceDefaultsLeft) {
  Trace tr = normalize_cc(P("bot_elim[A \\/ B](e)"));
  EXPECT_EQ(print_term(tr.result), "inl(bot_elim[A](e))");
  ReductionGraph g = explore_cc(P("bot_elim[A \\/ B](e)"), 100);
  EXPECT_EQ(g.normal_forms.size(), 2u);
  EXPECT_FALSE(g.budget_hit);
  std::string dot = g.dot();
  EXPECT_NE(dot.find("digraph"), std::string::npos);
  EXPECT_NE(dot.find("cc:12"), std::string::npos);
}

TEST(Pi, InrInl) {
  EXPECT_EQ(print_term(pi_term(31, P("t"))), "case(t, x1. inr(x1), x2. inl(x2))");
  EXPECT_THROW(pi_term(32, P("t")), std::invalid_argument);
  EXPECT_THROW(pi_term(30, P("t")), std::invalid_argument);
}

TEST(Pi, Types) {
  Context g = parse_context("t:A1 \\/ A2, f:A1 => (B1 \\/ B2), h:A2 => (B3 \\/ B4)", C);
  Term t = P("t");
  Term t1 = P("f x1");
  Term t2 = P("h x2");
  struct Case {
    int rule;
    const char* prop;
  } cases[] = {
      {30, "(A1 \\/ (A2 /\\ B3)) \\/ (A2 /\\ B4)"},
      {31, "A2 \\/ A1"},
      {33, "(A2 /\\ B3) \\/ (A1 \\/ (A2 /\\ B4))"},
      {34, "((A1 /\\ B1) \\/ A2) \\/ (A1 /\\ B2)"},
      {35, "(A1 /\\ B1) \\/ ((A1 /\\ B2) \\/ A2)"},
      {36, "((A1 /\\ B1) \\/ (A2 /\\ B3)) \\/ ((A1 /\\ B2) \\/ (A2 /\\ B4))"},
  };
  for (const auto& c : cases) {
    TypeResult r = infer_cc(g, pi_term(c.rule, t, t1, t2));
    ASSERT_TRUE(r) << c.rule << ": " << r.error().render();
    EXPECT_EQ(r.prop(), parse_prop(c.prop, C)) << c.rule << ": " << to_string(r.prop());
  }
}

TEST(Demo, RoutesConverge) {
  DemoResult d = demo_optimization();
  Term expected = P("and1(x, y. pair(u, y))");
  EXPECT_TRUE(alpha_eq(d.result1, expected)) << print_term(d.result1);
  EXPECT_TRUE(alpha_eq(d.result2, expected)) << print_term(d.result2);
  EXPECT_TRUE(alpha_eq(d.route2_body.result, P("lam z:C. and1(x, y. pair(z, y))")));
  ASSERT_EQ(d.route1.steps.size(), 2u);
  EXPECT_EQ(d.route1.steps[0].rule.str(), "cc:20.1");
  EXPECT_EQ(d.route1.steps[1].rule.str(), "cc:2");
  EXPECT_TRUE(d.converge);
  EXPECT_TRUE(alpha_eq(d.normal1, P("pair(and1(x, y. u), and1(x, y. y))")));
  TypeResult a = infer_cc(d.ctx, d.applied);
  TypeResult r = infer_cc(d.ctx, d.result1);
  ASSERT_TRUE(a);
  ASSERT_TRUE(r);
  EXPECT_EQ(a.prop(), r.prop());
}

TEST(Normalize, SwapCommutationDiverges) {
  // the inr/inl witness is itself an inr/inl commutation redex
  Term t = parse_term(
      "case(top_elim(star, inr(lam x0:Top. star)), x1. inr(bot_elim[Top /\\ Bot](bot_elim[Bot](x1))), "
      "x2. inl(inr(star)))",
      C);
  Trace tr = normalize_cc(t);
  EXPECT_EQ(tr.outcome, Outcome::FuelExhausted);
  EXPECT_NE(tr.reason.find("term size exceeded"), std::string::npos) << tr.reason;
  for (std::size_t i = 1; i < 10; ++i) EXPECT_EQ(tr.steps[i].rule.str(), "cc:31");
}
