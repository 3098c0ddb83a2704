#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "inlr/calculus.hpp"
#include "inlr/rng.hpp"
#include "inlr/term.hpp"

namespace inlr {

struct RuleId {
  Calculus calc = Calculus::IPlus;
  int number = 0;
  int variant = 0;  // 1 or 2 for the and_i families of the cc calculus

  // "iplus:12", "cc:20.1"
  std::string str() const;
  friend bool operator==(const RuleId&, const RuleId&) = default;
};

std::optional<RuleId> rule_from_string(std::string_view s);

enum class Choice { Left, Right };

// Weights of the two branches of a probabilistic redex, not yet normalized.
using WeightFn = std::function<std::pair<double, double>(const Term& redex, Rng& rng)>;

struct Rule {
  RuleId id;
  Kind head;  // head constructor of the left-hand side
  std::function<bool(const Term&)> matches;
  std::function<Term(const Term&)> contract;
  // Set on both members of a probabilistic pair; `branch` says which side
  // this member contracts to.
  WeightFn weights;
  Choice branch = Choice::Left;
  // Nondeterministic alternatives listed but not probabilistic (cc bottom
  // rules, quantum rules on inl/inr scrutinees).
  bool nondeterministic = false;
};

struct RuleSet {
  Calculus calc;
  std::string name;
  std::vector<Rule> rules;

  const Rule* find(const RuleId& id) const;
};

struct Redex {
  Path pos;
  RuleId rule;
};

class RewriteError : public std::runtime_error {
 public:
  enum class Kind { NoMatch, ZeroNormStuck };
  RewriteError(Kind k, const std::string& what) : std::runtime_error(what), kind_(k) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

struct Step {
  RuleId rule;
  Path pos;
  std::optional<double> weight;
};

enum class Outcome { NormalForm, FuelExhausted, Stuck };
std::string_view to_string(Outcome o);

struct Trace {
  Term initial;
  std::vector<Step> steps;
  Outcome outcome = Outcome::NormalForm;
  Term result;  // normal form, or the term reached when fuel ran out or got stuck
  std::string reason;
};

struct StepResult {
  Term term;
  Step step;
};

// All (position, rule) pairs whose left-hand side matches, leftmost-outermost
// (preorder); at one position, rules in table order.
std::vector<Redex> find_redexes(const Term& t, const RuleSet& rs);
std::optional<Redex> first_redex(const Term& t, const RuleSet& rs);

// Contracts the redex at pos. For a probabilistic pair the branch is drawn
// from rng unless `choice` forces it; the recorded rule is the branch taken.
StepResult step_at(const Term& t, const Path& pos, const RuleId& rule, std::optional<Choice> choice,
                   Rng& rng, const RuleSet& rs);

// Leftmost-outermost normalization. Step k draws from rng.split(k).
// Growing past max_size counts as running out of fuel.
Trace normalize(const Term& t, const RuleSet& rs, std::size_t fuel, const Rng& rng,
                std::size_t max_size = std::numeric_limits<std::size_t>::max());

// Replays recorded steps; probabilistic steps take the recorded branch.
Term replay(const Term& initial, const std::vector<Step>& steps, const RuleSet& rs);

// Every one-step reduct of t normalizes to the same term (up to alpha, with
// the given scalar tolerance).
bool join_peak(const Term& t, const RuleSet& rs, std::size_t fuel, double tolerance = 0.0);

// One JSON object per line: {"rule": "...", "pos": [...], "weight": x|null}.
std::string trace_json_lines(const Trace& tr);

constexpr std::size_t kDefaultFuel = 1000000;
constexpr std::size_t kDefaultCcFuel = 100000;
constexpr std::size_t kCcSizeLimit = 5000;

}  // namespace inlr
