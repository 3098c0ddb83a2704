#pragma once

#include <cstddef>

#include "inlr/calculus.hpp"
#include "inlr/prop.hpp"
#include "inlr/rewrite.hpp"
#include "inlr/rng.hpp"
#include "inlr/term.hpp"

namespace inlr {

// Type-directed random generation. Propositions are built without atoms
// (Top/Bot/=>/\//\/ or One/-o/(+)), which makes inhabitation decidable by
// evaluation, so every pick is known to succeed before it is made.
struct GenOptions {
  std::size_t max_size = 30;
  bool closed = true;
  // Quantum only: never produce case_nd.
  bool deterministic = false;
  int prop_depth = 2;
};

struct Sample {
  Context ctx;
  Term term;
  Prop prop;  // the goal the term was generated at
};

Prop random_prop(Calculus c, Rng& rng, int depth);
// Built from One and (+), dimension in [1, max_dim].
Prop random_vector_prop(Rng& rng, std::size_t max_dim);
// A random tree shape with exactly `dim` leaves.
Prop random_vector_prop_of_dim(Rng& rng, std::size_t dim);
Scalar random_scalar(Rng& rng);

Sample generate(Calculus c, Rng& rng, const GenOptions& opt = {});
// A closed term proving `goal`.
Term generate_at(Calculus c, Rng& rng, const Prop& goal, const GenOptions& opt = {});

// A random instance of the left-hand side of a cc rule, in a random context.
Sample cc_rule_instance(const RuleId& id, Rng& rng, std::size_t max_size = 20);

}  // namespace inlr
