#pragma once

#include <optional>
#include <string>
#include <vector>

#include "inlr/rewrite.hpp"

namespace inlr {

// Rules 1-36 of the commuting-cut calculus:
//   1-7    cuts (top_elim, beta, and1, and2, case on inl / inr / binder inlr)
//   8-12   bot_elim at Top, =>, /\, \/ (11 to inl, 12 to inr)
//   13-18  top_elim(t, intro) commutations
//   19-24  and_i(t, x. intro) commutations, variants .1 and .2
//   25-36  case(t, x1. intro, x2. intro) commutations
const RuleSet& cc_rules();
// Without the bottom-elimination choice rules 11 and 12.
const RuleSet& cc_det_rules();

// The witness of rules 30, 31, 33, 34, 35, 36. t1 (rules 34-36) and t2
// (rules 30, 33, 36) may mention the free names x1 and x2 respectively,
// which get bound by the enclosing case branches.
Term pi_term(int rule, const Term& t, const std::optional<Term>& t1 = std::nullopt,
             const std::optional<Term>& t2 = std::nullopt);

// Same, with t1 / t2 already in the scope of one extra binder.
Term pi_term_scoped(int rule, const Term& t, const std::optional<Term>& t1,
                    const std::optional<Term>& t2);

enum class CcPolicy { First, Enumerate };

struct ReductionGraph {
  struct Edge {
    std::size_t from;
    std::size_t to;
    RuleId rule;
    Path pos;
  };
  std::vector<Term> nodes;  // node 0 is the start term
  std::vector<Edge> edges;
  std::vector<std::size_t> normal_forms;
  bool budget_hit = false;

  // Digraph with normal forms drawn as double circles.
  std::string dot() const;
};

// Breadth-first exploration of all reducts, deduplicated up to alpha.
ReductionGraph explore_cc(const Term& t, std::size_t node_budget, const RuleSet& rs = cc_rules());

Trace normalize_cc(const Term& t, std::size_t fuel = kDefaultCcFuel);

struct DemoResult {
  Context ctx;
  Term applied;    // app(and1(x, y. lam z:C. pair(z, y)), u)
  Term unapplied;  // and1(x, y. lam z:C. pair(z, y))
  // Route 1: commute and1 past the lambda inside the application, then beta.
  Trace route1;
  // Route 2: commute the unapplied body, then apply it to u and beta-reduce.
  Trace route2_body;
  Trace route2_applied;
  Term result1;
  Term result2;
  // Both routes, normalized to the end under the full rule table.
  Term normal1;
  Term normal2;
  bool converge = false;
};

DemoResult demo_optimization();

}  // namespace inlr
