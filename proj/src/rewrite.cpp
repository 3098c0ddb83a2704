#include "inlr/rewrite.hpp"

#include <charconv>

#include "json.hpp"

namespace inlr {

std::string RuleId::str() const {
  std::string s = std::string(to_string(calc)) + ":" + std::to_string(number);
  if (variant) s += "." + std::to_string(variant);
  return s;
}

std::optional<RuleId> rule_from_string(std::string_view s) {
  auto colon = s.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  auto calc = calculus_from_string(s.substr(0, colon));
  if (!calc) return std::nullopt;
  std::string_view rest = s.substr(colon + 1);
  RuleId id{*calc, 0, 0};
  auto [p, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), id.number);
  if (ec != std::errc()) return std::nullopt;
  if (p != rest.data() + rest.size()) {
    if (*p != '.') return std::nullopt;
    auto [q, ec2] = std::from_chars(p + 1, rest.data() + rest.size(), id.variant);
    if (ec2 != std::errc() || q != rest.data() + rest.size()) return std::nullopt;
  }
  return id;
}

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::NormalForm: return "NormalForm";
    case Outcome::FuelExhausted: return "FuelExhausted";
    case Outcome::Stuck: return "Stuck";
  }
  return "?";
}

const Rule* RuleSet::find(const RuleId& id) const {
  for (const auto& r : rules) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

namespace {

void collect(const Term& t, const RuleSet& rs, Path& path, std::vector<Redex>& out) {
  for (const auto& r : rs.rules) {
    if (r.head == t.kind() && r.matches(t)) out.push_back({path, r.id});
  }
  for (std::size_t i = 0; i < t.arity(); ++i) {
    path.push_back(static_cast<int>(i));
    collect(t.kid(i), rs, path, out);
    path.pop_back();
  }
}

const Rule* first_at(const Term& t, const RuleSet& rs, Path& path) {
  for (const auto& r : rs.rules) {
    if (r.head == t.kind() && r.matches(t)) return &r;
  }
  for (std::size_t i = 0; i < t.arity(); ++i) {
    path.push_back(static_cast<int>(i));
    if (const Rule* r = first_at(t.kid(i), rs, path)) return r;
    path.pop_back();
  }
  return nullptr;
}

}  // namespace

std::vector<Redex> find_redexes(const Term& t, const RuleSet& rs) {
  std::vector<Redex> out;
  Path path;
  collect(t, rs, path, out);
  return out;
}

std::optional<Redex> first_redex(const Term& t, const RuleSet& rs) {
  Path path;
  if (const Rule* r = first_at(t, rs, path)) return Redex{path, r->id};
  return std::nullopt;
}

StepResult step_at(const Term& t, const Path& pos, const RuleId& rule, std::optional<Choice> choice,
                   Rng& rng, const RuleSet& rs) {
  const Rule* r = rs.find(rule);
  if (!r) throw RewriteError(RewriteError::Kind::NoMatch, "unknown rule " + rule.str());
  const Term& redex = subterm_at(t, pos);
  if (r->head != redex.kind() || !r->matches(redex)) {
    throw RewriteError(RewriteError::Kind::NoMatch, "rule " + rule.str() + " does not match");
  }
  std::optional<double> weight;
  if (r->weights) {
    auto [wl, wr] = r->weights(redex, rng);
    double total = wl + wr;
    if (!(total > 0.0)) {
      throw RewriteError(RewriteError::Kind::ZeroNormStuck,
                         "both branches of the measurement have norm zero");
    }
    Choice c = choice ? *choice : (rng.uniform() < wl / total ? Choice::Left : Choice::Right);
    weight = (c == Choice::Left ? wl : wr) / total;
    if (c != r->branch) {
      for (const auto& other : rs.rules) {
        if (other.weights && other.head == r->head && other.branch == c && other.matches(redex)) {
          r = &other;
          break;
        }
      }
    }
  } else if (r->nondeterministic && rs.calc == Calculus::Quantum) {
    weight = 1.0;
  }
  Term out = replace_at(t, pos, r->contract(redex));
  return {out, {r->id, pos, weight}};
}

Trace normalize(const Term& t, const RuleSet& rs, std::size_t fuel, const Rng& rng, std::size_t max_size) {
  Trace tr;
  tr.initial = t;
  Term cur = t;
  for (std::size_t k = 0;; ++k) {
    auto redex = first_redex(cur, rs);
    if (!redex) {
      tr.outcome = Outcome::NormalForm;
      break;
    }
    if (k >= fuel) {
      tr.outcome = Outcome::FuelExhausted;
      tr.reason = "fuel exhausted after " + std::to_string(k) + " steps";
      break;
    }
    if (cur.size() > max_size) {
      tr.outcome = Outcome::FuelExhausted;
      tr.reason = "term size exceeded " + std::to_string(max_size) + " after " + std::to_string(k) + " steps";
      break;
    }
    Rng step_rng = rng.split(k);
    try {
      StepResult s = step_at(cur, redex->pos, redex->rule, std::nullopt, step_rng, rs);
      cur = s.term;
      tr.steps.push_back(std::move(s.step));
    } catch (const RewriteError& e) {
      tr.outcome = Outcome::Stuck;
      tr.reason = e.what();
      break;
    }
  }
  tr.result = cur;
  return tr;
}

Term replay(const Term& initial, const std::vector<Step>& steps, const RuleSet& rs) {
  Term cur = initial;
  Rng rng(0);
  for (const auto& s : steps) {
    const Rule* r = rs.find(s.rule);
    std::optional<Choice> forced;
    if (r && r->weights) forced = r->branch;
    cur = step_at(cur, s.pos, s.rule, forced, rng, rs).term;
  }
  return cur;
}

bool join_peak(const Term& t, const RuleSet& rs, std::size_t fuel, double tolerance) {
  std::optional<Term> joined;
  Rng rng(0);
  for (const auto& redex : find_redexes(t, rs)) {
    const Rule* r = rs.find(redex.rule);
    if (r->weights) continue;
    Term reduct = step_at(t, redex.pos, redex.rule, std::nullopt, rng, rs).term;
    Trace tr = normalize(reduct, rs, fuel, rng);
    if (tr.outcome != Outcome::NormalForm) return false;
    if (!joined) {
      joined = tr.result;
    } else if (!alpha_eq(*joined, tr.result, tolerance)) {
      return false;
    }
  }
  return true;
}

std::string trace_json_lines(const Trace& tr) {
  std::string out;
  for (const auto& s : tr.steps) {
    nlohmann::ordered_json j;
    j["rule"] = s.rule.str();
    j["pos"] = s.pos;
    j["weight"] = s.weight ? nlohmann::ordered_json(*s.weight) : nlohmann::ordered_json(nullptr);
    out += j.dump();
    out += '\n';
  }
  return out;
}

}  // namespace inlr
