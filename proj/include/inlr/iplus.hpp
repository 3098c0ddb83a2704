#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "inlr/rewrite.hpp"

namespace inlr {

// Rules 1-19: top_elim, beta, and1, and2, case on inl/inr/inlr, then the
// sum rules (star, lam, pair, and the nine disjunction-introduction pairs).
const RuleSet& iplus_rules();

// Head constructor is star, lam, pair, inl, inr or inlr (either form);
// a . star counts too, for the linear calculus.
bool is_introduction(const Term& t);

struct PropertyReport {
  std::size_t samples = 0;
  std::size_t failures = 0;
  std::vector<std::string> counterexamples;  // a few, printed

  bool ok() const { return failures == 0; }
};

// Random closed well-typed iplus terms normalize to introductions.
PropertyReport check_introduction_property(std::size_t samples, std::uint64_t seed);

}  // namespace inlr
