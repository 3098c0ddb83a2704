#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "inlr/calculus.hpp"

namespace inlr {

struct CheckResult {
  std::string name;
  std::size_t samples = 0;
  std::size_t failures = 0;
  double max_error = 0.0;  // only for numeric checks
  bool numeric = false;
  std::vector<std::string> counterexamples;  // at most a few
  std::vector<std::string> notes;

  bool ok() const { return failures == 0; }
  void fail(std::string why);
  // "name: ok, N samples" or "name: F/N failed", then indented details.
  std::string text() const;
};

// Every one-step reduct of every term on the leftmost-outermost path of a
// random term checks at the term's inferred proposition. Terms alternate
// closed / open. For cc the path is cut after `cc_steps` steps.
CheckResult check_subject_reduction(Calculus c, std::size_t samples, std::uint64_t seed,
                                    std::size_t cc_steps = 50);

// Normalization of random closed terms (iplus, or the deterministic quantum
// fragment). Fills three results: introduction property, termination within
// fuel, and (mu, nu) decrease at every contracted redex (quantum only).
struct NormalizationChecks {
  CheckResult introduction;
  CheckResult termination;
  CheckResult lex_decrease;
  std::size_t root_steps = 0;
};
NormalizationChecks check_normalization(Calculus c, std::size_t samples, std::uint64_t seed,
                                        std::size_t fuel);

// Random terms with at least two redexes join (iplus, deterministic quantum).
CheckResult check_confluence(Calculus c, std::size_t peaks, std::uint64_t seed);

// [u (+) v] = [u] + [v] and [a . u] = a [u] for random closed proofs.
CheckResult check_vector_homomorphism(std::size_t samples, std::uint64_t seed, std::size_t max_dim,
                                      double tol);
CheckResult check_vector_round_trip(std::size_t samples, std::uint64_t seed, std::size_t max_dim);

// Compiled random matrices against the numeric product, and the linearity
// report of each compiled map.
struct MatrixChecks {
  CheckResult agreement;
  CheckResult linearity;
};
MatrixChecks check_matrices(std::size_t matrices, std::size_t vectors, std::uint64_t seed,
                            std::size_t max_dim, double tol);

// Left frequency of the first-qubit measurement on a state.
CheckResult check_measurement_frequency(const std::string& name, const std::string& state_term,
                                        std::size_t shots, std::uint64_t seed, double expected,
                                        double tol);

CheckResult check_cc_rules(std::size_t per_rule, std::uint64_t seed);
CheckResult check_cc_pi_types();
CheckResult check_cc_demo();
// Enumerated reduction graphs of random terms under the rules without the
// bottom choice: a single normal form, or the budget is hit (logged).
CheckResult check_cc_enumerate(std::size_t samples, std::uint64_t seed, std::size_t budget);

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool ok() const;
  std::string text() const;
};

// "iplus", "quantum", "qencode" or "cc". Throws std::invalid_argument
// for other names.
SuiteReport run_suite(const std::string& suite, std::size_t samples, std::uint64_t seed);

}  // namespace inlr
