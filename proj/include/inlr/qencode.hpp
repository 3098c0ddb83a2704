#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>

#include "inlr/prop.hpp"
#include "inlr/quantum.hpp"
#include "inlr/rng.hpp"
#include "inlr/term.hpp"

namespace inlr {

using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

// Number of One leaves. Throws QuantumError(NotVectorProp).
std::size_t dim(const Prop& p);

// Q_0 = One, Q_{n+1} = Q_n (+) Q_n.
Prop q_n(int n);
// 0_0 = 0 . star, 0_{n+1} = inlr(0_n, 0_n).
Term zero_n(int n);
Term ket0();
Term ket1();
Term bool_zero();  // inl(1 . star)
Term bool_one();   // inr(1 . star)

// Reads a closed irreducible proof of p: a . star is (a), inlr concatenates
// blocks, inl/inr pad the missing block with zeros.
ComplexVector read_vector(const Term& value, const Prop& p);
// Typechecks t at p, normalizes it with the quantum rules (seed 0), then
// reads the result.
ComplexVector to_vector(const Term& t, const Prop& p, std::size_t fuel = kDefaultFuel);
// The inlr-only proof of p denoting v.
Term from_vector(const ComplexVector& v, const Prop& p);

// A closed proof of a -o b whose application to from_vector(u, a) denotes
// m * u. m has dim(b) rows and dim(a) columns.
Term compile_matrix(const ComplexMatrix& m, const Prop& a, const Prop& b);

// delta^{Q_n}(x, b).
Term delta_qn(int n, const Term& x, const Term& b);
// lam q:Q_n. pi_n(q), a measurement of the first qubit returning a Boolean.
Term meas_first(int n);
// lam q:Q_n. pi'_n(q), the state after measuring the first qubit, with
// the erased half written 0 . x so the term is linear.
Term meas_state(int n);

struct LinearityReport {
  std::size_t trials = 0;
  double tolerance = 0.0;
  double additivity = 0.0;    // |F(u+v) - F(u) - F(v)|
  double homogeneity = 0.0;   // |F(a u) - a F(u)|
  double distribution = 0.0;  // |[t (u+v)] - [t u + t v]|, same for scalars
  double semimodule = 0.0;    // largest defect over the semi-module laws
  double cloning = 0.0;       // additivity defect of u -> u (x) u
  double max_error() const;
  // Every defect within tolerance and the cloning control outside it.
  bool ok() const;
};

LinearityReport check_linear_map(const Term& t, const Prop& a, const Prop& b, std::size_t trials,
                                 double tol, std::uint64_t seed);

// Largest |F(u+v) - F(u) - F(v)| over random u, v of length m.
double additivity_defect(const std::function<ComplexVector(const ComplexVector&)>& f,
                         std::size_t m, std::size_t trials, Rng& rng);
ComplexVector random_vector(Rng& rng, std::size_t n);
ComplexMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols);

// {"rows": r, "cols": c, "entries": [[re, im], ...]} row-major.
ComplexMatrix matrix_from_json(const std::string& text);
std::string matrix_to_json(const ComplexMatrix& m);
// [[re, im], ...]
ComplexVector vector_from_json(const std::string& text);
std::string vector_to_json(const ComplexVector& v);

}  // namespace inlr
