#include <gtest/gtest.h>

#include "inlr/parse.hpp"
#include "inlr/print.hpp"
#include "inlr/quantum.hpp"
#include "inlr/typing.hpp"

using namespace inlr;

namespace {

constexpr Calculus Q = Calculus::Quantum;

Term P(const std::string& s) { return parse_term(s, Q); }

const char* kMeasure =
    "lam q:One (+) One. case_nd(q, y. one_elim(y, inl(1.0 . star)), z. one_elim(z, inr(1.0 . star)))";

Term measured(const char* state) { return P(std::string("app(") + kMeasure + ", " + state + ")"); }

}  // namespace

TEST(Norm, Examples) {
  EXPECT_DOUBLE_EQ(norm_sq(P("3.0 . star"), Prop::one()), 9.0);
  Prop b = Prop::oplus(Prop::one(), Prop::one());
  EXPECT_DOUBLE_EQ(norm_sq(P("inlr(3.0 . star, 4.0 . star)"), b), 25.0);
  EXPECT_DOUBLE_EQ(norm_sq(P("inl(1.0 . star)"), b), 1.0);
  EXPECT_DOUBLE_EQ(norm_sq(P("(0.0, 2.0) . star"), Prop::one()), 4.0);
}

TEST(Norm, Errors) {
  Prop b = Prop::oplus(Prop::one(), Prop::one());
  try {
    norm_sq(P("sum(1.0 . star, 1.0 . star)"), Prop::one());
    FAIL();
  } catch (const QuantumError& e) {
    EXPECT_EQ(e.kind(), QuantumError::Kind::NotIrreducible);
  }
  try {
    norm_sq(P("1.0 . star"), Prop::lollipop(Prop::one(), Prop::one()));
    FAIL();
  } catch (const QuantumError& e) {
    EXPECT_EQ(e.kind(), QuantumError::Kind::NotVectorProp);
  }
  try {
    norm_sq(P("1.0 . star"), b);
    FAIL();
  } catch (const QuantumError& e) {
    EXPECT_EQ(e.kind(), QuantumError::Kind::Mismatch);
  }
}

TEST(Measures, Examples) {
  EXPECT_EQ(measure_mu(P("x")), 0);
  EXPECT_EQ(measure_nu(P("x")), 0);
  EXPECT_EQ(measure_nu(P("sum(lam x:One. x, lam x:One. x)")), 3);
  EXPECT_EQ(measure_nu(P("lam x:One. sum(x, x)")), 2);
  EXPECT_EQ(measure_mu(P("sum(lam x:One. x, lam x:One. x)")), 2);
  EXPECT_EQ(measure_mu(P("lam x:One. sum(x, x)")), 2);
  EXPECT_EQ(measure_mu(P("prod(2.0, 5.0 . star)")), 2);
  EXPECT_EQ(measure_mu(P("one_elim(2.0 . star, t)")), 2);
  EXPECT_EQ(measure_mu(P("prod(2.0, t)")), 1);
}

TEST(Measures, LexDecrease) {
  EXPECT_TRUE(check_lex_decrease(P("one_elim(2.0 . star, t)"), P("prod(2.0, t)")));
  EXPECT_TRUE(check_lex_decrease(P("sum(lam x:One. x, lam x:One. x)"), P("lam x:One. sum(x, x)")));
  EXPECT_FALSE(check_lex_decrease(P("lam x:One. sum(x, x)"), P("sum(lam x:One. x, lam x:One. x)")));
  EXPECT_THROW(check_lex_decrease(P("x"), P("x"), false), std::invalid_argument);
}

TEST(Measures, SubstAdditivity) {
  EXPECT_TRUE(mu_subst_additivity(P("prod(2.0, x)"), P("5.0 . star"), "x"));
  EXPECT_TRUE(mu_subst_additivity(P("x"), P("sum(1.0 . star, 2.0 . star)"), "x"));
}

TEST(Measures, RootStepsDecrease) {
  const char* redexes[] = {
      "one_elim(2.0 . star, t)",
      "app(lam x:One. x, t)",
      "case(inl(t), x. inl(x), y. inr(y))",
      "case(inr(t), x. inl(x), y. inr(y))",
      "case(inlr(1.0 . star, 2.0 . star), x. inl(x), y. inr(y))",
      "case_nd(inl(t), x. inl(x), y. inr(y))",
      "case_nd(inr(t), x. inl(x), y. inr(y))",
      "case_nd(inlr(1.0 . star, 2.0 . star), x. inl(x), y. inr(y))",
      "sum(1.0 . star, 2.0 . star)",
      "sum(lam x:One. x, lam y:One. prod(2.0, y))",
      "sum(inl(1.0 . star), inl(2.0 . star))",
      "sum(inl(1.0 . star), inr(2.0 . star))",
      "sum(inl(1.0 . star), inlr(2.0 . star, 3.0 . star))",
      "sum(inr(1.0 . star), inl(2.0 . star))",
      "sum(inr(1.0 . star), inr(2.0 . star))",
      "sum(inr(1.0 . star), inlr(2.0 . star, 3.0 . star))",
      "sum(inlr(1.0 . star, 2.0 . star), inl(3.0 . star))",
      "sum(inlr(1.0 . star, 2.0 . star), inr(3.0 . star))",
      "sum(inlr(1.0 . star, 2.0 . star), inlr(3.0 . star, 4.0 . star))",
      "prod(2.0, 3.0 . star)",
      "prod(2.0, lam x:One. x)",
      "prod(2.0, inl(t))",
      "prod(2.0, inr(t))",
      "prod(2.0, inlr(1.0 . star, 2.0 . star))",
  };
  Context ctx = {{"t", Prop::one()}};
  for (const char* s : redexes) {
    Term t = P(s);
    auto all = find_redexes(t, quantum_rules());
    ASSERT_FALSE(all.empty()) << s;
    for (const auto& r : all) {
      if (!r.pos.empty()) continue;
      for (Choice c : {Choice::Left, Choice::Right}) {
        Rng rng(0);
        Term u = step_at(t, r.pos, r.rule, c, rng, quantum_rules()).term;
        EXPECT_TRUE(check_lex_decrease(t, u)) << s << " via " << r.rule.str();
        Context g = free_names(t).empty() ? Context{} : ctx;
        TypeResult before = infer_linear(g, t);
        ASSERT_TRUE(before) << s << ": " << before.error().render();
        EXPECT_TRUE(has_type(Q, g, u, before.prop())) << s << " via " << r.rule.str();
      }
    }
  }
}

TEST(Measure, Basis) {
  Histogram h = run_measure(measured("inlr(1.0 . star, 0.0 . star)"), 500, 3);
  EXPECT_DOUBLE_EQ(h.left_frequency(), 1.0);
  ASSERT_EQ(h.bins.size(), 1u);
  EXPECT_EQ(h.bins[0].display, "inl(1.0 . star)");
}

TEST(Measure, Balanced) {
  Histogram h = run_measure(measured("inlr(1.0 . star, 1.0 . star)"), 10000, 42);
  EXPECT_NEAR(h.left_frequency(), 0.5, 0.02);
  ASSERT_EQ(h.bins.size(), 2u);
  ASSERT_TRUE(h.bins[0].exact_weight);
  EXPECT_NEAR(*h.bins[0].exact_weight, 0.5, 1e-12);
}

TEST(Measure, ZeroNorm) {
  Histogram h = run_measure(measured("inlr(0.0 . star, 0.0 . star)"), 100, 1);
  EXPECT_TRUE(h.all_stuck());
  ASSERT_EQ(h.bins.size(), 1u);
  EXPECT_EQ(h.bins[0].outcome, "ZeroNormStuck");
}

TEST(Measure, Deterministic) {
  Term t = measured("inlr(0.6 . star, 0.8 . star)");
  EXPECT_EQ(run_measure(t, 300, 9).json(), run_measure(t, 300, 9).json());
  Histogram h = run_measure(t, 20000, 5);
  EXPECT_NEAR(h.left_frequency(), 0.36, 0.02);
}
