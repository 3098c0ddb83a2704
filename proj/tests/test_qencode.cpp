#include <gtest/gtest.h>

#include <cmath>

#include "inlr/generate.hpp"
#include "inlr/parse.hpp"
#include "inlr/print.hpp"
#include "inlr/qencode.hpp"
#include "inlr/typing.hpp"

using namespace inlr;

namespace {

constexpr Calculus Q = Calculus::Quantum;

Term P(const std::string& s) { return parse_term(s, Q); }
Prop PP(const std::string& s) { return parse_prop(s, Q); }

ComplexVector V(std::initializer_list<Scalar> xs) {
  ComplexVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (Scalar x : xs) v[i++] = x;
  return v;
}

double gap(const ComplexVector& a, const ComplexVector& b) {
  EXPECT_EQ(a.size(), b.size());
  return (a - b).cwiseAbs().maxCoeff();
}

bool mentions(const Term& t, Kind k) {
  if (t.kind() == k) return true;
  for (const auto& c : t.kids()) {
    if (mentions(c, k)) return true;
  }
  return false;
}

}  // namespace

TEST(Dim, Examples) {
  EXPECT_EQ(dim(Prop::one()), 1u);
  EXPECT_EQ(dim(q_n(2)), 4u);
  EXPECT_EQ(dim(PP("One (+) (One (+) One)")), 3u);
  EXPECT_THROW(dim(PP("One -o One")), QuantumError);
}

TEST(ToVector, Examples) {
  EXPECT_EQ(to_vector(P("inlr(1.0 . star, 0.0 . star)"), q_n(1)), V({1.0, 0.0}));
  EXPECT_EQ(to_vector(P("inl(1.0 . star)"), q_n(1)), V({1.0, 0.0}));
  EXPECT_EQ(to_vector(P("inr(2.0 . star)"), q_n(1)), V({0.0, 2.0}));
  EXPECT_EQ(to_vector(P("inlr(2.0 . star, inlr(3.0 . star, 4.0 . star))"), PP("One (+) (One (+) One)")),
            V({2.0, 3.0, 4.0}));
  // normalized first
  EXPECT_EQ(to_vector(P("sum(prod(2.0, inl(1.0 . star)), inr(3.0 . star))"), q_n(1)), V({2.0, 3.0}));
}

TEST(ToVector, Errors) {
  EXPECT_THROW(to_vector(P("inlr(1.0 . star, 0.0 . star)"), Prop::one()), QuantumError);
  EXPECT_THROW(to_vector(P("x"), Prop::one()), QuantumError);
  EXPECT_THROW(read_vector(P("sum(1.0 . star, 1.0 . star)"), Prop::one()), QuantumError);
}

TEST(FromVector, Examples) {
  EXPECT_EQ(print_term(from_vector(V({1.0, 0.0}), q_n(1))), "inlr(1.0 . star, 0.0 . star)");
  EXPECT_EQ(print_term(from_vector(V({Scalar(0.5, -1.0)}), Prop::one())), "(0.5, -1.0) . star");
  EXPECT_THROW(from_vector(V({1.0}), q_n(1)), QuantumError);
}

TEST(FromVector, RoundTrip) {
  Rng root(21);
  for (std::size_t i = 0; i < 200; ++i) {
    Rng rng = root.split(i);
    Prop p = random_vector_prop(rng, 16);
    ComplexVector v = random_vector(rng, dim(p));
    Term t = from_vector(v, p);
    EXPECT_FALSE(mentions(t, Kind::Inl) || mentions(t, Kind::Inr));
    EXPECT_FALSE(first_redex(t, quantum_rules()));
    EXPECT_TRUE(check(Q, {}, t, p).ok());
    EXPECT_EQ(to_vector(t, p), v);
  }
}

TEST(Homomorphism, SumAndProduct) {
  Rng root(4);
  GenOptions opt;
  opt.deterministic = true;
  for (std::size_t i = 0; i < 100; ++i) {
    Rng rng = root.split(i);
    Prop p = random_vector_prop(rng, 8);
    Term u = generate_at(Q, rng, p, opt);
    Term v = generate_at(Q, rng, p, opt);
    Scalar a = random_scalar(rng);
    ComplexVector du = to_vector(u, p);
    ComplexVector dv = to_vector(v, p);
    EXPECT_LT(gap(to_vector(Term::sum(u, v), p), du + dv), 1e-9) << print_term(u) << " / " << print_term(v);
    EXPECT_LT(gap(to_vector(Term::prod(a, u), p), a * du), 1e-9) << print_term(u);
  }
}

TEST(CompileMatrix, Examples) {
  ComplexMatrix two(1, 1);
  two << 2.0;
  Term t = compile_matrix(two, Prop::one(), Prop::one());
  EXPECT_TRUE(check(Q, {}, t, Prop::lollipop(Prop::one(), Prop::one())).ok());
  EXPECT_EQ(to_vector(Term::app(t, from_vector(V({3.0}), Prop::one())), Prop::one()), V({6.0}));

  ComplexMatrix swap(2, 2);
  swap << 0.0, 1.0, 1.0, 0.0;
  Term x = compile_matrix(swap, q_n(1), q_n(1));
  EXPECT_EQ(to_vector(Term::app(x, ket0()), q_n(1)), V({0.0, 1.0}));

  ComplexMatrix h(2, 2);
  double r = 1.0 / std::sqrt(2.0);
  h << r, r, r, -r;
  Term ht = compile_matrix(h, q_n(1), q_n(1));
  EXPECT_LT(gap(to_vector(Term::app(ht, ket0()), q_n(1)), V({0.70710678118654752, 0.70710678118654752})),
            1e-9);
  EXPECT_EQ(print_term(ht),
            "lam x:One (+) One. case(x, y. (lam x':One. one_elim(x', inlr(0.7071067811865475 . star, "
            "0.7071067811865475 . star))) y, z. (lam x':One. one_elim(x', inlr(0.7071067811865475 . star, "
            "-0.7071067811865475 . star))) z)");
}

TEST(CompileMatrix, AgreesWithOracle) {
  Rng root(8);
  for (std::size_t i = 0; i < 20; ++i) {
    Rng rng = root.split(i);
    std::size_t m = 1 + rng.below(6);
    std::size_t n = 1 + rng.below(6);
    Prop a = random_vector_prop_of_dim(rng, m);
    Prop b = random_vector_prop_of_dim(rng, n);
    ComplexMatrix mat = random_matrix(rng, n, m);
    Term t = compile_matrix(mat, a, b);
    ASSERT_TRUE(check(Q, {}, t, Prop::lollipop(a, b)).ok());
    for (std::size_t j = 0; j < m; ++j) {
      ComplexVector e = ComplexVector::Zero(static_cast<Eigen::Index>(m));
      e[static_cast<Eigen::Index>(j)] = 1.0;
      EXPECT_LT(gap(to_vector(Term::app(t, from_vector(e, a)), b), mat * e), 1e-9);
    }
    for (int k = 0; k < 5; ++k) {
      ComplexVector u = random_vector(rng, m);
      EXPECT_LT(gap(to_vector(Term::app(t, from_vector(u, a)), b), mat * u), 1e-9);
    }
  }
  EXPECT_THROW(compile_matrix(ComplexMatrix::Zero(2, 3), q_n(1), q_n(1)), QuantumError);
}

TEST(Measurement, Operators) {
  EXPECT_EQ(print_term(delta_qn(0, Term::free("x"), bool_zero())), "one_elim(x, inl(1.0 . star))");
  EXPECT_EQ(print_term(bool_zero()), "inl(1.0 . star)");
  EXPECT_EQ(print_term(meas_first(1)),
            "lam q:One (+) One. case_nd(q, x. one_elim(x, inl(1.0 . star)), y. one_elim(y, inr(1.0 . star)))");
  for (int n = 1; n <= 3; ++n) {
    EXPECT_TRUE(check(Q, {}, meas_first(n), Prop::lollipop(q_n(n), q_n(1))).ok()) << n;
    EXPECT_TRUE(check(Q, {}, meas_state(n), Prop::lollipop(q_n(n), q_n(n))).ok()) << n;
  }
}

TEST(Measurement, StateAfterForcedLeft) {
  Term t = Term::app(meas_state(1), P("inlr(0.6 . star, 0.8 . star)"));
  Rng rng(0);
  Term body = step_at(t, {}, *rule_from_string("quantum:20"), std::nullopt, rng, quantum_rules()).term;
  Term left = step_at(body, {}, *rule_from_string("quantum:26"), Choice::Left, rng, quantum_rules()).term;
  EXPECT_EQ(print_term(normalize(left, quantum_rules(), 100, Rng(0)).result), "inlr(0.6 . star, 0.0 . star)");
}

TEST(Measurement, PartialOnTwoQubits) {
  // |00> + |11>: the first qubit reads 0 half the time
  Term state = from_vector(V({1.0, 0.0, 0.0, 1.0}), q_n(2));
  Histogram h = run_measure(Term::app(meas_first(2), state), 4000, 17);
  EXPECT_NEAR(h.left_frequency(), 0.5, 0.03);
  Histogram s = run_measure(Term::app(meas_state(2), state), 2000, 17);
  for (const auto& bin : s.bins) {
    ASSERT_TRUE(bin.term);
    ComplexVector v = read_vector(*bin.term, q_n(2));
    EXPECT_TRUE(v == V({1.0, 0.0, 0.0, 0.0}) || v == V({0.0, 0.0, 0.0, 1.0})) << bin.display;
  }
}

TEST(Linearity, CompiledMaps) {
  Rng rng(12);
  ComplexMatrix m = random_matrix(rng, 4, 4);
  Prop a = q_n(2);
  LinearityReport rep = check_linear_map(compile_matrix(m, a, a), a, a, 100, 1e-9, 3);
  EXPECT_TRUE(rep.ok());
  EXPECT_LT(rep.additivity, 1e-9);
  EXPECT_LT(rep.homogeneity, 1e-9);
  EXPECT_LT(rep.semimodule, 1e-9);
  EXPECT_GT(rep.cloning, 1e-3);
}

TEST(Linearity, HandWrittenMap) {
  // swaps the two components and doubles them
  Term t = P("lam x:One (+) One. case(x, y. inr(prod(2.0, y)), z. inl(prod(2.0, z)))");
  Prop b = q_n(1);
  LinearityReport rep = check_linear_map(t, b, b, 30, 1e-9, 1);
  EXPECT_TRUE(rep.ok()) << rep.max_error();
}

TEST(Linearity, CloningControl) {
  Rng rng(2);
  auto clone = [](const ComplexVector& u) {
    ComplexVector out(u.size() * u.size());
    for (Eigen::Index i = 0; i < u.size(); ++i) out.segment(i * u.size(), u.size()) = u[i] * u;
    return out;
  };
  EXPECT_GT(additivity_defect(clone, 2, 20, rng), 1e-3);
  auto id = [](const ComplexVector& u) { return u; };
  EXPECT_LT(additivity_defect(id, 2, 20, rng), 1e-12);
}

TEST(Json, RoundTrip) {
  ComplexMatrix m = matrix_from_json(R"({"rows": 2, "cols": 1, "entries": [[1, 0], [0.5, -2]]})");
  EXPECT_EQ(m.rows(), 2);
  EXPECT_EQ(m(1, 0), Scalar(0.5, -2.0));
  EXPECT_EQ(matrix_to_json(m), R"({"cols":1,"entries":[[1.0,0.0],[0.5,-2.0]],"rows":2})");
  EXPECT_EQ(vector_to_json(vector_from_json("[[1,0],[0,1]]")), "[[1.0,0.0],[0.0,1.0]]");
  EXPECT_THROW(matrix_from_json(R"({"rows": 2, "cols": 2, "entries": [[1, 0]]})"), std::invalid_argument);
  EXPECT_THROW(vector_from_json("[[1]]"), std::invalid_argument);
}
