#include "inlr/qencode.hpp"

#include <algorithm>
#include <cmath>

#include "inlr/print.hpp"
#include "inlr/typing.hpp"
#include "json.hpp"

namespace inlr {

namespace {

using json = nlohmann::json;

void require_vector_prop(const Prop& p) {
  if (!is_vector_prop(p)) {
    throw QuantumError(QuantumError::Kind::NotVectorProp, to_string(p) + " is not a vector proposition");
  }
}

void require_size(std::size_t got, std::size_t want, const std::string& what) {
  if (got != want) {
    throw QuantumError(QuantumError::Kind::Mismatch,
                       what + ": expected " + std::to_string(want) + ", got " + std::to_string(got));
  }
}

Term from_block(const ComplexVector& v, Eigen::Index at, const Prop& p) {
  if (p.kind() == PropKind::One) return Term::scalar_star(v[at]);
  auto n1 = static_cast<Eigen::Index>(dim(p.left()));
  return Term::inlr(from_block(v, at, p.left()), from_block(v, at + n1, p.right()));
}

void read_into(const Term& t, const Prop& p, ComplexVector& out, Eigen::Index at) {
  if (p.kind() == PropKind::One) {
    if (t.kind() == Kind::ScalarStar) {
      out[at] = t.scalar();
      return;
    }
  } else {
    auto n1 = static_cast<Eigen::Index>(dim(p.left()));
    switch (t.kind()) {
      case Kind::Inl: read_into(t.kid(0), p.left(), out, at); return;
      case Kind::Inr: read_into(t.kid(0), p.right(), out, at + n1); return;
      case Kind::Inlr2:
        read_into(t.kid(0), p.left(), out, at);
        read_into(t.kid(1), p.right(), out, at + n1);
        return;
      default: break;
    }
  }
  switch (t.kind()) {
    case Kind::ScalarStar:
    case Kind::Inl:
    case Kind::Inr:
    case Kind::Inlr2:
      throw QuantumError(QuantumError::Kind::Mismatch, print_term(t) + " is not a proof of " + to_string(p));
    default:
      throw QuantumError(QuantumError::Kind::NotIrreducible,
                         print_term(t) + " is not a closed irreducible proof");
  }
}

// Column j of the matrix as a proof of b.
Term column(const ComplexMatrix& m, Eigen::Index j, const Prop& b) {
  ComplexVector c = m.col(j);
  return from_vector(c, b);
}

Term compile_from(const ComplexMatrix& m, Eigen::Index first, const Prop& a, const Prop& b) {
  if (a.kind() == PropKind::One) {
    return build::lam("x", a, Term::one_elim(build::var("x"), column(m, first, b)));
  }
  auto m1 = static_cast<Eigen::Index>(dim(a.left()));
  Term t1 = compile_from(m, first, a.left(), b);
  Term t2 = compile_from(m, first + m1, a.right(), b);
  return build::lam("x", a,
                    build::case_of(build::var("x"), "y", Term::app(t1, build::var("y")), "z",
                                   Term::app(t2, build::var("z"))));
}

double dist(const ComplexVector& u, const ComplexVector& v) {
  if (u.size() != v.size()) return INFINITY;
  return u.size() == 0 ? 0.0 : (u - v).cwiseAbs().maxCoeff();
}

Scalar random_amplitude(Rng& rng) { return {2.0 * rng.uniform() - 1.0, 2.0 * rng.uniform() - 1.0}; }

ComplexVector kron_self(const ComplexVector& u) {
  ComplexVector out(u.size() * u.size());
  for (Eigen::Index i = 0; i < u.size(); ++i) out.segment(i * u.size(), u.size()) = u[i] * u;
  return out;
}

json pair_of(Scalar a) { return json::array({a.real(), a.imag()}); }

Scalar scalar_of(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw std::invalid_argument("expected [re, im], got " + j.dump());
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

std::size_t dim(const Prop& p) {
  require_vector_prop(p);
  if (p.kind() == PropKind::One) return 1;
  return dim(p.left()) + dim(p.right());
}

Prop q_n(int n) { return n == 0 ? Prop::one() : Prop::oplus(q_n(n - 1), q_n(n - 1)); }

Term zero_n(int n) { return n == 0 ? Term::scalar_star(0.0) : Term::inlr(zero_n(n - 1), zero_n(n - 1)); }

Term ket0() { return Term::inlr(Term::scalar_star(1.0), Term::scalar_star(0.0)); }
Term ket1() { return Term::inlr(Term::scalar_star(0.0), Term::scalar_star(1.0)); }
Term bool_zero() { return Term::inl(Term::scalar_star(1.0)); }
Term bool_one() { return Term::inr(Term::scalar_star(1.0)); }

ComplexVector read_vector(const Term& value, const Prop& p) {
  ComplexVector out = ComplexVector::Zero(static_cast<Eigen::Index>(dim(p)));
  read_into(value, p, out, 0);
  return out;
}

ComplexVector to_vector(const Term& t, const Prop& p, std::size_t fuel) {
  require_vector_prop(p);
  if (!is_closed(t)) throw QuantumError(QuantumError::Kind::Mismatch, print_term(t) + " is not closed");
  TypeResult r = check(Calculus::Quantum, {}, t, p);
  if (!r) throw QuantumError(QuantumError::Kind::Mismatch, r.error().render());
  Trace tr = normalize(t, quantum_rules(), fuel, Rng(0));
  if (tr.outcome != Outcome::NormalForm) {
    throw QuantumError(QuantumError::Kind::NotIrreducible,
                       std::string(to_string(tr.outcome)) + ": " + tr.reason);
  }
  return read_vector(tr.result, p);
}

Term from_vector(const ComplexVector& v, const Prop& p) {
  require_size(static_cast<std::size_t>(v.size()), dim(p), "vector length for " + to_string(p));
  return from_block(v, 0, p);
}

Term compile_matrix(const ComplexMatrix& m, const Prop& a, const Prop& b) {
  require_size(static_cast<std::size_t>(m.cols()), dim(a), "matrix columns");
  require_size(static_cast<std::size_t>(m.rows()), dim(b), "matrix rows");
  return compile_from(m, 0, a, b);
}

Term delta_qn(int n, const Term& x, const Term& b) {
  if (n == 0) return Term::one_elim(x, b);
  return build::case_nd(x, "y", delta_qn(n - 1, build::var("y"), b), "z",
                        delta_qn(n - 1, build::var("z"), b));
}

Term meas_first(int n) {
  Term q = build::var("q");
  return build::lam("q", q_n(n),
                    build::case_nd(q, "x", delta_qn(n - 1, build::var("x"), bool_zero()), "y",
                                   delta_qn(n - 1, build::var("y"), bool_one())));
}

// The erased half is 0 . x rather than the constant 0_{n-1}: inlr shares its
// context between both sides, so a closed 0_{n-1} next to x would leave x
// unused on that side. Both denote the zero vector.
Term meas_state(int n) {
  Term q = build::var("q");
  Term x = build::var("x");
  Term y = build::var("y");
  return build::lam("q", q_n(n),
                    build::case_nd(q, "x", Term::inlr(x, Term::prod(0.0, x)), "y",
                                   Term::inlr(Term::prod(0.0, y), y)));
}

double LinearityReport::max_error() const {
  return std::max({additivity, homogeneity, distribution, semimodule});
}

bool LinearityReport::ok() const { return max_error() < tolerance && cloning > tolerance; }

ComplexVector random_vector(Rng& rng, std::size_t n) {
  ComplexVector v(static_cast<Eigen::Index>(n));
  for (auto& x : v) x = random_amplitude(rng);
  return v;
}

ComplexMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  ComplexMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = random_amplitude(rng);
  }
  return m;
}

double additivity_defect(const std::function<ComplexVector(const ComplexVector&)>& f,
                         std::size_t m, std::size_t trials, Rng& rng) {
  double worst = 0.0;
  for (std::size_t i = 0; i < trials; ++i) {
    ComplexVector u = random_vector(rng, m);
    ComplexVector v = random_vector(rng, m);
    worst = std::max(worst, dist(f(u + v), f(u) + f(v)));
  }
  return worst;
}

LinearityReport check_linear_map(const Term& t, const Prop& a, const Prop& b, std::size_t trials,
                                 double tol, std::uint64_t seed) {
  LinearityReport rep;
  rep.trials = trials;
  rep.tolerance = tol;
  const std::size_t m = dim(a);
  require_vector_prop(b);
  Rng root(seed);
  auto den = [&](const Term& x) { return to_vector(x, b); };
  for (std::size_t i = 0; i < trials; ++i) {
    Rng rng = root.split(i);
    ComplexVector u = random_vector(rng, m);
    ComplexVector v = random_vector(rng, m);
    Scalar s = random_amplitude(rng);
    Scalar r = random_amplitude(rng);
    Term tu = from_vector(u, a);
    Term tv = from_vector(v, a);

    ComplexVector fu = den(Term::app(t, tu));
    ComplexVector fv = den(Term::app(t, tv));
    ComplexVector fsum = den(Term::app(t, Term::sum(tu, tv)));
    ComplexVector fprod = den(Term::app(t, Term::prod(s, tu)));
    rep.additivity = std::max(rep.additivity, dist(fsum, fu + fv));
    rep.homogeneity = std::max(rep.homogeneity, dist(fprod, s * fu));

    Term atu = Term::app(t, tu);
    Term atv = Term::app(t, tv);
    rep.distribution = std::max(rep.distribution, dist(fsum, den(Term::sum(atu, atv))));
    rep.distribution = std::max(rep.distribution, dist(fprod, den(Term::prod(s, atu))));

    // Semi-module laws, compared on denotations.
    Term aw = Term::app(t, from_vector(random_vector(rng, m), a));
    auto law = [&](const Term& l, const Term& rhs) {
      rep.semimodule = std::max(rep.semimodule, dist(den(l), den(rhs)));
    };
    law(Term::sum(Term::sum(atu, atv), aw), Term::sum(atu, Term::sum(atv, aw)));
    law(Term::sum(atu, atv), Term::sum(atv, atu));
    law(Term::prod(s, Term::prod(r, atu)), Term::prod(s * r, atu));
    law(Term::prod(s + r, atu), Term::sum(Term::prod(s, atu), Term::prod(r, atu)));
    law(Term::prod(s, Term::sum(atu, atv)), Term::sum(Term::prod(s, atu), Term::prod(s, atv)));
    law(Term::prod(1.0, atu), atu);
  }
  Rng control = root.split(trials);
  rep.cloning = additivity_defect(kron_self, m, std::max<std::size_t>(trials, 1), control);
  return rep;
}

ComplexMatrix matrix_from_json(const std::string& text) {
  json j = json::parse(text);
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries")) {
    throw std::invalid_argument("matrix JSON needs rows, cols and entries");
  }
  auto rows = j.at("rows").get<long>();
  auto cols = j.at("cols").get<long>();
  const json& e = j.at("entries");
  if (rows <= 0 || cols <= 0 || !e.is_array() || static_cast<long>(e.size()) != rows * cols) {
    throw std::invalid_argument("matrix JSON: entries must hold rows*cols pairs");
  }
  ComplexMatrix m(rows, cols);
  for (long i = 0; i < rows; ++i) {
    for (long k = 0; k < cols; ++k) m(i, k) = scalar_of(e[static_cast<std::size_t>(i * cols + k)]);
  }
  return m;
}

std::string matrix_to_json(const ComplexMatrix& m) {
  json e = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index k = 0; k < m.cols(); ++k) e.push_back(pair_of(m(i, k)));
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", e}}.dump();
}

ComplexVector vector_from_json(const std::string& text) {
  json j = json::parse(text);
  if (!j.is_array() || j.empty()) throw std::invalid_argument("vector JSON must be a non-empty array");
  ComplexVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v[static_cast<Eigen::Index>(i)] = scalar_of(j[i]);
  return v;
}

std::string vector_to_json(const ComplexVector& v) {
  json j = json::array();
  for (const auto& x : v) j.push_back(pair_of(x));
  return j.dump();
}

}  // namespace inlr
