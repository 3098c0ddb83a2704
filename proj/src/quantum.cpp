#include "inlr/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>

#include "inlr/print.hpp"
#include "json.hpp"
#include "rule_util.hpp"

namespace inlr {

using namespace detail;

namespace {

std::pair<double, double> measurement_weights(const Term& redex, Rng& rng) {
  const Term& s = redex.kid(0);
  auto weight = [&](const Term& c, std::uint64_t i) -> std::optional<double> {
    Trace tr = normalize(c, quantum_rules(), kDefaultFuel, rng.split(i));
    if (tr.outcome != Outcome::NormalForm) return std::nullopt;
    return value_norm_sq(tr.result);
  };
  auto a = weight(s.kid(0), 1);
  auto b = weight(s.kid(1), 2);
  if (!a || !b) return {0.5, 0.5};
  return {*a, *b};
}

RuleSet build_quantum(bool with_nd) {
  constexpr Calculus c = Calculus::Quantum;
  RuleSet rs{c, with_nd ? "quantum" : "quantum-det", {}};
  auto& r = rs.rules;
  r.push_back(rule(
      c, 19, Kind::OneElim, [](const Term& t) { return kid_is(t, 0, Kind::ScalarStar); },
      [](const Term& t) { return Term::prod(t.kid(0).scalar(), t.kid(1)); }));
  r.push_back(rule(c, 20, Kind::App, [](const Term& t) { return kid_is(t, 0, Kind::Lam); }, beta));
  r.push_back(rule(c, 21, Kind::Case, [](const Term& t) { return kid_is(t, 0, Kind::Inl); }, case_inl));
  r.push_back(rule(c, 22, Kind::Case, [](const Term& t) { return kid_is(t, 0, Kind::Inr); }, case_inr));
  r.push_back(rule(c, 23, Kind::Case, [](const Term& t) { return kid_is(t, 0, Kind::Inlr2); }, case_inlr));
  if (with_nd) {
    r.push_back(rule(c, 24, Kind::CaseNd, [](const Term& t) { return kid_is(t, 0, Kind::Inl); }, case_inl));
    r.back().nondeterministic = true;
    r.push_back(rule(c, 25, Kind::CaseNd, [](const Term& t) { return kid_is(t, 0, Kind::Inr); }, case_inr));
    r.back().nondeterministic = true;
    r.push_back(rule(
        c, 26, Kind::CaseNd, [](const Term& t) { return kid_is(t, 0, Kind::Inlr2); },
        [](const Term& t) { return instantiate(t.kid(1), t.kid(0).kid(0)); }));
    r.back().weights = measurement_weights;
    r.back().branch = Choice::Left;
    r.push_back(rule(
        c, 27, Kind::CaseNd, [](const Term& t) { return kid_is(t, 0, Kind::Inlr2); },
        [](const Term& t) { return instantiate(t.kid(2), t.kid(0).kid(1)); }));
    r.back().weights = measurement_weights;
    r.back().branch = Choice::Right;
  }
  r.push_back(rule(
      c, 28, Kind::Sum,
      [](const Term& t) { return kid_is(t, 0, Kind::ScalarStar) && kid_is(t, 1, Kind::ScalarStar); },
      [](const Term& t) { return Term::scalar_star(t.kid(0).scalar() + t.kid(1).scalar()); }));
  r.push_back(rule(
      c, 29, Kind::Sum, [](const Term& t) { return kid_is(t, 0, Kind::Lam) && kid_is(t, 1, Kind::Lam); },
      sum_lam));
  add_sum_intro_rules(c, 30, r);
  r.push_back(rule(
      c, 39, Kind::Prod, [](const Term& t) { return kid_is(t, 0, Kind::ScalarStar); },
      [](const Term& t) { return Term::scalar_star(t.scalar() * t.kid(0).scalar()); }));
  r.push_back(rule(
      c, 40, Kind::Prod, [](const Term& t) { return kid_is(t, 0, Kind::Lam); },
      [](const Term& t) {
        const Term& f = t.kid(0);
        return Term::lam(f.hint(0), f.annotation(), Term::prod(t.scalar(), f.kid(0)));
      }));
  r.push_back(rule(
      c, 41, Kind::Prod, [](const Term& t) { return kid_is(t, 0, Kind::Inl); },
      [](const Term& t) { return Term::inl(Term::prod(t.scalar(), t.kid(0).kid(0))); }));
  r.push_back(rule(
      c, 42, Kind::Prod, [](const Term& t) { return kid_is(t, 0, Kind::Inr); },
      [](const Term& t) { return Term::inr(Term::prod(t.scalar(), t.kid(0).kid(0))); }));
  r.push_back(rule(
      c, 43, Kind::Prod, [](const Term& t) { return kid_is(t, 0, Kind::Inlr2); },
      [](const Term& t) {
        const Term& s = t.kid(0);
        return Term::inlr(Term::prod(t.scalar(), s.kid(0)), Term::prod(t.scalar(), s.kid(1)));
      }));
  return rs;
}

}  // namespace

const RuleSet& quantum_rules() {
  static const RuleSet rs = build_quantum(true);
  return rs;
}

const RuleSet& quantum_det_rules() {
  static const RuleSet rs = build_quantum(false);
  return rs;
}

double norm_sq(const Term& t, const Prop& p) {
  if (!is_vector_prop(p)) {
    throw QuantumError(QuantumError::Kind::NotVectorProp, to_string(p) + " is not a vector proposition");
  }
  if (p.kind() == PropKind::One) {
    if (t.kind() == Kind::ScalarStar) return std::norm(t.scalar());
  } else {
    switch (t.kind()) {
      case Kind::Inl: return norm_sq(t.kid(0), p.left());
      case Kind::Inr: return norm_sq(t.kid(0), p.right());
      case Kind::Inlr2: return norm_sq(t.kid(0), p.left()) + norm_sq(t.kid(1), p.right());
      default: break;
    }
  }
  if (t.kind() == Kind::ScalarStar || t.kind() == Kind::Inl || t.kind() == Kind::Inr ||
      t.kind() == Kind::Inlr2) {
    throw QuantumError(QuantumError::Kind::Mismatch, print_term(t) + " is not a proof of " + to_string(p));
  }
  throw QuantumError(QuantumError::Kind::NotIrreducible, print_term(t) + " is not a closed irreducible proof");
}

std::optional<double> value_norm_sq(const Term& t) {
  switch (t.kind()) {
    case Kind::ScalarStar:
      return std::norm(t.scalar());
    case Kind::Inl:
    case Kind::Inr:
      return value_norm_sq(t.kid(0));
    case Kind::Inlr2: {
      auto a = value_norm_sq(t.kid(0));
      auto b = value_norm_sq(t.kid(1));
      if (!a || !b) return std::nullopt;
      return *a + *b;
    }
    default:
      return std::nullopt;
  }
}

std::int64_t measure_mu(const Term& t) {
  switch (t.kind()) {
    case Kind::Var:
      return 0;
    case Kind::Sum:
    case Kind::Inlr2:
      return 1 + std::max(measure_mu(t.kid(0)), measure_mu(t.kid(1)));
    case Kind::Prod:
    case Kind::Lam:
    case Kind::Inl:
    case Kind::Inr:
      return 1 + measure_mu(t.kid(0));
    case Kind::ScalarStar:
      return 1;
    case Kind::OneElim:
    case Kind::App:
      return 1 + measure_mu(t.kid(0)) + measure_mu(t.kid(1));
    case Kind::Case:
    case Kind::CaseNd:
      return 1 + measure_mu(t.kid(0)) + std::max(measure_mu(t.kid(1)), measure_mu(t.kid(2)));
    default:
      throw std::invalid_argument("measure_mu: " + std::string(kind_name(t.kind())) +
                                  " is not a linear-calculus constructor");
  }
}

BigInt measure_nu(const Term& t) {
  switch (t.kind()) {
    case Kind::Var:
      return 0;
    case Kind::Sum:
      return 1 + 2 * std::max(measure_nu(t.kid(0)), measure_nu(t.kid(1)));
    case Kind::Prod:
      return 1 + 2 * measure_nu(t.kid(0));
    case Kind::ScalarStar:
    case Kind::OneElim:
    case Kind::App:
    case Kind::Case:
    case Kind::CaseNd:
      return 1;
    case Kind::Lam:
    case Kind::Inl:
    case Kind::Inr:
      return 1 + measure_nu(t.kid(0));
    case Kind::Inlr2:
      return 1 + std::max(measure_nu(t.kid(0)), measure_nu(t.kid(1)));
    default:
      throw std::invalid_argument("measure_nu: " + std::string(kind_name(t.kind())) +
                                  " is not a linear-calculus constructor");
  }
}

bool check_lex_decrease(const Term& t, const Term& u, bool at_root) {
  if (!at_root) throw std::invalid_argument("check_lex_decrease: only root steps are ordered");
  auto mt = measure_mu(t);
  auto mu = measure_mu(u);
  if (mt != mu) return mt > mu;
  return measure_nu(t) > measure_nu(u);
}

bool mu_subst_additivity(const Term& t, const Term& u, const std::string& x) {
  return measure_mu(subst(u, x, t)) == measure_mu(t) + measure_mu(u);
}

namespace {

constexpr const char* kStuck = "ZeroNormStuck";
constexpr const char* kFuel = "FuelExhausted";

struct Outcomes {
  std::unordered_map<Term, double, TermHash, TermAlphaEq> terms;
  double stuck = 0.0;
  std::size_t leaves = 0;
  bool complete = true;
};

// Walks every probabilistic branch, multiplying the branch weights.
void enumerate(Term cur, double p, std::size_t fuel, Outcomes& out) {
  const RuleSet& rs = quantum_rules();
  Rng rng(0);
  for (std::size_t k = 0; k < fuel; ++k) {
    auto redex = first_redex(cur, rs);
    if (!redex) {
      out.terms[cur] += p;
      ++out.leaves;
      return;
    }
    const Rule* r = rs.find(redex->rule);
    if (!r->weights) {
      cur = step_at(cur, redex->pos, redex->rule, std::nullopt, rng, rs).term;
      continue;
    }
    auto [wl, wr] = r->weights(subterm_at(cur, redex->pos), rng);
    double total = wl + wr;
    if (!(total > 0.0)) {
      out.stuck += p;
      ++out.leaves;
      return;
    }
    for (Choice c : {Choice::Left, Choice::Right}) {
      double w = (c == Choice::Left ? wl : wr) / total;
      if (w <= 0.0) continue;
      if (out.leaves > 4096) {
        out.complete = false;
        return;
      }
      Term next = step_at(cur, redex->pos, redex->rule, c, rng, rs).term;
      enumerate(next, p * w, fuel - k - 1, out);
    }
    return;
  }
  out.complete = false;
}

}  // namespace

Histogram run_measure(const Term& t, std::size_t shots, std::uint64_t seed, std::size_t fuel) {
  Histogram h;
  h.shots = shots;
  std::unordered_map<Term, std::size_t, TermHash, TermAlphaEq> index;
  std::vector<HistogramBin> normal;
  HistogramBin stuck{std::nullopt, "", kStuck, 0, 0.0, std::nullopt};
  HistogramBin exhausted{std::nullopt, "", kFuel, 0, 0.0, std::nullopt};
  Rng root(seed);
  for (std::size_t i = 0; i < shots; ++i) {
    Trace tr = normalize(t, quantum_rules(), fuel, root.split(i));
    if (tr.outcome == Outcome::Stuck) {
      ++stuck.count;
    } else if (tr.outcome == Outcome::FuelExhausted) {
      ++exhausted.count;
    } else {
      auto [it, fresh] = index.emplace(tr.result, normal.size());
      if (fresh) normal.push_back({tr.result, print_term(tr.result), "NormalForm", 0, 0.0, std::nullopt});
      ++normal[it->second].count;
    }
  }
  Outcomes exact;
  enumerate(t, 1.0, fuel, exact);
  std::sort(normal.begin(), normal.end(),
            [](const HistogramBin& a, const HistogramBin& b) { return a.display < b.display; });
  for (auto& b : normal) {
    if (exact.complete) {
      auto it = exact.terms.find(*b.term);
      b.exact_weight = it == exact.terms.end() ? 0.0 : it->second;
    }
    h.bins.push_back(b);
  }
  if (exact.complete) stuck.exact_weight = exact.stuck;
  if (stuck.count) h.bins.push_back(stuck);
  if (exhausted.count) h.bins.push_back(exhausted);
  for (auto& b : h.bins) b.frequency = shots ? static_cast<double>(b.count) / static_cast<double>(shots) : 0.0;
  return h;
}

double Histogram::left_frequency() const {
  std::size_t left = 0;
  for (const auto& b : bins) {
    if (b.term && b.term->kind() == Kind::Inl) left += b.count;
  }
  return shots ? static_cast<double>(left) / static_cast<double>(shots) : 0.0;
}

bool Histogram::all_stuck() const {
  for (const auto& b : bins) {
    if (b.outcome != kStuck && b.count) return false;
  }
  return shots > 0;
}

std::string Histogram::json() const {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& b : bins) {
    nlohmann::ordered_json j;
    j["term"] = b.term ? nlohmann::ordered_json(b.display) : nlohmann::ordered_json(nullptr);
    if (!b.term) j["outcome"] = b.outcome;
    j["count"] = b.count;
    j["frequency"] = b.frequency;
    if (b.exact_weight) j["exact_weight"] = *b.exact_weight;
    arr.push_back(j);
  }
  return arr.dump();
}

}  // namespace inlr
