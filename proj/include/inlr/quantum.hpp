#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "inlr/rewrite.hpp"

namespace inlr {

// Rules 19-43. The nondeterministic case_nd rules are 24-27; 26 and 27 form
// the probabilistic pair on an inlr scrutinee.
const RuleSet& quantum_rules();
// Without rules 24-27.
const RuleSet& quantum_det_rules();

class QuantumError : public std::runtime_error {
 public:
  enum class Kind { NotIrreducible, NotVectorProp, Mismatch };
  QuantumError(Kind k, const std::string& what) : std::runtime_error(what), kind_(k) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Squared norm of a closed irreducible proof of a vector proposition.
double norm_sq(const Term& t, const Prop& p);
// Same, reading the shape off the term; nullopt unless t is built from
// a . star, inl, inr and inlr only.
std::optional<double> value_norm_sq(const Term& t);

using BigInt = boost::multiprecision::cpp_int;

std::int64_t measure_mu(const Term& t);
BigInt measure_nu(const Term& t);

// (mu, nu) strictly decreases lexicographically from t to u. Only meaningful
// for root steps; `at_root` false is rejected.
bool check_lex_decrease(const Term& t, const Term& u, bool at_root = true);

// mu((u/x)t) = mu(t) + mu(u).
bool mu_subst_additivity(const Term& t, const Term& u, const std::string& x);

struct HistogramBin {
  std::optional<Term> term;  // empty for stuck / fuel bins
  std::string display;
  std::string outcome;  // NormalForm, ZeroNormStuck, FuelExhausted
  std::size_t count = 0;
  double frequency = 0.0;
  std::optional<double> exact_weight;
};

struct Histogram {
  std::size_t shots = 0;
  std::vector<HistogramBin> bins;

  // Fraction of shots whose normal form is inl-headed.
  double left_frequency() const;
  bool all_stuck() const;
  // [{term, count, frequency, exact_weight?}, ...]
  std::string json() const;
};

// Normalizes t `shots` times, shot i drawing from Rng(seed).split(i).
Histogram run_measure(const Term& t, std::size_t shots, std::uint64_t seed,
                      std::size_t fuel = kDefaultFuel);

}  // namespace inlr
