#include "inlr/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "inlr/cc.hpp"
#include "inlr/generate.hpp"
#include "inlr/iplus.hpp"
#include "inlr/parse.hpp"
#include "inlr/print.hpp"
#include "inlr/qencode.hpp"
#include "inlr/quantum.hpp"
#include "inlr/typing.hpp"

namespace inlr {

namespace {

constexpr std::size_t kMaxCounterexamples = 5;

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

const RuleSet& full_rules(Calculus c) {
  switch (c) {
    case Calculus::IPlus: return iplus_rules();
    case Calculus::Quantum: return quantum_rules();
    case Calculus::CC: return cc_rules();
  }
  return iplus_rules();
}

const RuleSet& det_rules(Calculus c) {
  return c == Calculus::Quantum ? quantum_det_rules() : full_rules(c);
}

std::string show(const Term& t) {
  std::string s = print_term(t);
  return s.size() > 400 ? s.substr(0, 400) + "..." : s;
}

std::string show(const Context& ctx, const Term& t) {
  std::string g;
  for (const auto& [x, a] : ctx) g += (g.empty() ? "" : ", ") + x + ":" + to_string(a);
  return (g.empty() ? "" : g + " |- ") + show(t);
}

// All one-step reducts, both branches of a probabilistic redex included.
// Redexes that cannot fire (zero norm) are skipped.
std::vector<std::pair<Redex, Term>> all_reducts(const Term& t, const RuleSet& rs) {
  std::vector<std::pair<Redex, Term>> out;
  Rng rng(0);
  for (const auto& r : find_redexes(t, rs)) {
    const Rule* rule = rs.find(r.rule);
    std::optional<Choice> forced;
    if (rule->weights) forced = rule->branch;
    try {
      out.emplace_back(r, step_at(t, r.pos, r.rule, forced, rng, rs).term);
    } catch (const RewriteError&) {
    }
  }
  return out;
}

bool mentions(const Term& t, Kind k) {
  if (t.kind() == k) return true;
  for (const auto& c : t.kids()) {
    if (mentions(c, k)) return true;
  }
  return false;
}

}  // namespace

void CheckResult::fail(std::string why) {
  ++failures;
  if (counterexamples.size() < kMaxCounterexamples) counterexamples.push_back(std::move(why));
}

std::string CheckResult::text() const {
  std::string s = name + ": ";
  s += ok() ? "ok" : std::to_string(failures) + "/" + std::to_string(samples) + " failed";
  s += ", " + std::to_string(samples) + " samples";
  if (numeric) s += ", max error " + sci(max_error);
  s += '\n';
  for (const auto& n : notes) s += "  " + n + '\n';
  for (const auto& c : counterexamples) s += "  counterexample: " + c + '\n';
  return s;
}

CheckResult check_subject_reduction(Calculus c, std::size_t samples, std::uint64_t seed,
                                    std::size_t cc_steps) {
  CheckResult res;
  res.name = std::string(to_string(c)) + " subject reduction";
  const RuleSet& rs = full_rules(c);
  Rng root(seed);
  std::size_t steps = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    Rng rng = root.split(i);
    GenOptions opt;
    opt.closed = i % 2 == 0;
    Sample s = generate(c, rng, opt);
    ++res.samples;
    TypeResult ty = infer(c, s.ctx, s.term);
    if (!ty) {
      res.fail("generated term does not typecheck: " + show(s.ctx, s.term));
      continue;
    }
    const Prop a = ty.prop();
    std::size_t limit = c == Calculus::CC ? cc_steps : kDefaultFuel;
    Trace tr = normalize(s.term, rs, limit, rng.split(1), c == Calculus::CC ? kCcSizeLimit : SIZE_MAX);
    Term cur = s.term;
    bool bad = false;
    for (std::size_t k = 0; k <= tr.steps.size() && !bad; ++k) {
      for (const auto& [redex, u] : all_reducts(cur, rs)) {
        ++steps;
        if (!has_type(c, s.ctx, u, a)) {
          res.fail(redex.rule.str() + " at " + render_path(redex.pos) + ": " + show(s.ctx, cur) +
                   "  ~>  " + show(u) + "  loses " + to_string(a));
          bad = true;
          break;
        }
      }
      if (k < tr.steps.size()) cur = replay(cur, {tr.steps[k]}, rs);
    }
  }
  res.notes.push_back(std::to_string(steps) + " one-step reducts checked");
  return res;
}

NormalizationChecks check_normalization(Calculus c, std::size_t samples, std::uint64_t seed,
                                        std::size_t fuel) {
  NormalizationChecks out;
  std::string prefix = c == Calculus::Quantum ? "quantum-det" : std::string(to_string(c));
  out.introduction.name = prefix + " introduction property";
  out.termination.name = prefix + " termination";
  out.lex_decrease.name = prefix + " (mu, nu) decrease";
  const RuleSet& rs = det_rules(c);
  Rng root(seed);
  GenOptions opt;
  opt.deterministic = true;
  for (std::size_t i = 0; i < samples; ++i) {
    Rng rng = root.split(i);
    Sample s = generate(c, rng, opt);
    Trace tr = normalize(s.term, rs, fuel, rng.split(1));
    ++out.termination.samples;
    ++out.introduction.samples;
    if (tr.outcome != Outcome::NormalForm) {
      out.termination.fail(std::string(to_string(tr.outcome)) + " on " + show(s.term) + ": " + tr.reason);
      out.introduction.fail("no normal form for " + show(s.term));
    } else if (!is_introduction(tr.result)) {
      out.introduction.fail(show(s.term) + " ~> " + show(tr.result));
    }
    if (c != Calculus::Quantum) continue;
    Term cur = s.term;
    for (const auto& st : tr.steps) {
      Term next = replay(cur, {st}, rs);
      const Term& redex = subterm_at(cur, st.pos);
      const Term& contractum = subterm_at(next, st.pos);
      ++out.lex_decrease.samples;
      if (st.pos.empty()) ++out.root_steps;
      if (!check_lex_decrease(redex, contractum)) {
        out.lex_decrease.fail(st.rule.str() + ": " + show(redex) + " ~> " + show(contractum) + " (mu " +
                              std::to_string(measure_mu(redex)) + " -> " +
                              std::to_string(measure_mu(contractum)) + ", nu " +
                              measure_nu(redex).str() + " -> " + measure_nu(contractum).str() + ")");
      }
      cur = next;
    }
  }
  if (c == Calculus::Quantum) {
    out.lex_decrease.notes.push_back(std::to_string(out.root_steps) + " of them at the root of the sample");
  }
  return out;
}

CheckResult check_confluence(Calculus c, std::size_t peaks, std::uint64_t seed) {
  CheckResult res;
  res.name = std::string(c == Calculus::Quantum ? "quantum-det" : to_string(c)) + " confluence";
  const RuleSet& rs = det_rules(c);
  Rng root(seed);
  GenOptions opt;
  opt.deterministic = true;
  std::size_t tried = 0;
  for (std::size_t i = 0; res.samples < peaks && i < peaks * 100; ++i) {
    Rng rng = root.split(i);
    opt.closed = i % 2 == 0;
    Sample s = generate(c, rng, opt);
    ++tried;
    if (find_redexes(s.term, rs).size() < 2) continue;
    ++res.samples;
    if (!join_peak(s.term, rs, kDefaultFuel, 1e-9)) res.fail(show(s.ctx, s.term));
  }
  if (res.samples < peaks) res.fail("only " + std::to_string(res.samples) + " peaks found");
  res.notes.push_back(std::to_string(tried) + " terms generated to find the peaks");
  return res;
}

CheckResult check_vector_homomorphism(std::size_t samples, std::uint64_t seed, std::size_t max_dim,
                                      double tol) {
  CheckResult res;
  res.name = "vector homomorphism";
  res.numeric = true;
  Rng root(seed);
  GenOptions opt;
  opt.deterministic = true;
  for (std::size_t i = 0; i < samples; ++i) {
    Rng rng = root.split(i);
    Prop p = random_vector_prop(rng, max_dim);
    Term u = generate_at(Calculus::Quantum, rng, p, opt);
    Term v = generate_at(Calculus::Quantum, rng, p, opt);
    Scalar a = random_scalar(rng);
    ++res.samples;
    try {
      ComplexVector du = to_vector(u, p);
      ComplexVector dv = to_vector(v, p);
      double e1 = (to_vector(Term::sum(u, v), p) - (du + dv)).cwiseAbs().maxCoeff();
      double e2 = (to_vector(Term::prod(a, u), p) - a * du).cwiseAbs().maxCoeff();
      res.max_error = std::max({res.max_error, e1, e2});
      if (!(e1 < tol && e2 < tol)) res.fail(show(u) + " , " + show(v) + " at " + to_string(p));
    } catch (const std::exception& e) {
      res.fail(show(u) + ": " + e.what());
    }
  }
  return res;
}

CheckResult check_vector_round_trip(std::size_t samples, std::uint64_t seed, std::size_t max_dim) {
  CheckResult res;
  res.name = "vector round trip";
  Rng root(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    Rng rng = root.split(i);
    Prop p = random_vector_prop(rng, max_dim);
    ComplexVector v = random_vector(rng, dim(p));
    Term t = from_vector(v, p);
    ++res.samples;
    bool shape = !mentions(t, Kind::Inl) && !mentions(t, Kind::Inr) && !first_redex(t, quantum_rules());
    if (!shape || to_vector(t, p) != v) res.fail(show(t) + " at " + to_string(p));
  }
  return res;
}

MatrixChecks check_matrices(std::size_t matrices, std::size_t vectors, std::uint64_t seed,
                            std::size_t max_dim, double tol) {
  MatrixChecks out;
  out.agreement.name = "compiled matrices";
  out.agreement.numeric = true;
  out.linearity.name = "linearity of compiled maps";
  out.linearity.numeric = true;
  Rng root(seed);
  for (std::size_t i = 0; i < matrices; ++i) {
    Rng rng = root.split(i);
    std::size_t m = 1 + rng.below(max_dim);
    std::size_t n = 1 + rng.below(max_dim);
    Prop a = random_vector_prop_of_dim(rng, m);
    Prop b = random_vector_prop_of_dim(rng, n);
    ComplexMatrix mat = random_matrix(rng, n, m);
    Term t = compile_matrix(mat, a, b);
    std::string where = std::to_string(n) + "x" + std::to_string(m) + " " + to_string(a) + " -o " + to_string(b);
    if (!check(Calculus::Quantum, {}, t, Prop::lollipop(a, b))) {
      out.agreement.fail("compiled term does not typecheck: " + where);
      continue;
    }
    for (std::size_t j = 0; j < vectors; ++j) {
      ComplexVector u = random_vector(rng, m);
      ++out.agreement.samples;
      double e = (to_vector(Term::app(t, from_vector(u, a)), b) - mat * u).cwiseAbs().maxCoeff();
      out.agreement.max_error = std::max(out.agreement.max_error, e);
      if (!(e < tol)) out.agreement.fail(where + ", error " + sci(e));
    }
    LinearityReport rep = check_linear_map(t, a, b, 10, tol, seed + i);
    ++out.linearity.samples;
    out.linearity.max_error = std::max(out.linearity.max_error, rep.max_error());
    if (!rep.ok()) {
      out.linearity.fail(where + ": additivity " + sci(rep.additivity) + ", homogeneity " +
                         sci(rep.homogeneity) + ", distribution " + sci(rep.distribution) +
                         ", semi-module " + sci(rep.semimodule) + ", cloning control " + sci(rep.cloning));
    }
  }
  return out;
}

CheckResult check_measurement_frequency(const std::string& name, const std::string& state_term,
                                        std::size_t shots, std::uint64_t seed, double expected,
                                        double tol) {
  CheckResult res;
  res.name = name;
  res.numeric = true;
  res.samples = shots;
  Term state = parse_term(state_term, Calculus::Quantum);
  Histogram h = run_measure(Term::app(meas_first(1), state), shots, seed);
  double f = h.left_frequency();
  res.max_error = std::abs(f - expected);
  char buf[64];
  std::snprintf(buf, sizeof buf, "left frequency %.4f", f);
  res.notes.push_back(buf);
  if (!(res.max_error <= tol)) res.fail(buf);
  return res;
}

CheckResult check_cc_rules(std::size_t per_rule, std::uint64_t seed) {
  CheckResult res;
  res.name = "cc rule soundness";
  Rng root(seed);
  std::size_t i = 0;
  for (const Rule& r : cc_rules().rules) {
    for (std::size_t k = 0; k < per_rule; ++k) {
      Rng rng = root.split(i++);
      Sample s = cc_rule_instance(r.id, rng);
      ++res.samples;
      bool at_root = false;
      for (const auto& x : find_redexes(s.term, cc_rules())) at_root |= x.pos.empty() && x.rule == r.id;
      TypeResult ty = infer_cc(s.ctx, s.term);
      if (!at_root || !ty) {
        res.fail(r.id.str() + ": bad instance " + show(s.ctx, s.term));
        continue;
      }
      Rng step_rng(0);
      Term u = step_at(s.term, {}, r.id, std::nullopt, step_rng, cc_rules()).term;
      if (!has_type(Calculus::CC, s.ctx, u, ty.prop())) {
        res.fail(r.id.str() + ": " + show(s.ctx, s.term) + " ~> " + show(u));
      }
    }
  }
  res.notes.push_back(std::to_string(cc_rules().rules.size()) + " rules");
  return res;
}

CheckResult check_cc_pi_types() {
  CheckResult res;
  res.name = "cc pi terms";
  const Calculus c = Calculus::CC;
  Context g = parse_context("t:A1 \\/ A2, f:A1 => (B1 \\/ B2), h:A2 => (B3 \\/ B4)", c);
  Term t = Term::free("t");
  Term t1 = parse_term("f x1", c);
  Term t2 = parse_term("h x2", c);
  const std::pair<int, const char*> stated[] = {
      {30, "(A1 \\/ (A2 /\\ B3)) \\/ (A2 /\\ B4)"},
      {31, "A2 \\/ A1"},
      {33, "(A2 /\\ B3) \\/ (A1 \\/ (A2 /\\ B4))"},
      {34, "((A1 /\\ B1) \\/ A2) \\/ (A1 /\\ B2)"},
      {35, "(A1 /\\ B1) \\/ ((A1 /\\ B2) \\/ A2)"},
      {36, "((A1 /\\ B1) \\/ (A2 /\\ B3)) \\/ ((A1 /\\ B2) \\/ (A2 /\\ B4))"},
  };
  for (const auto& [rule, prop] : stated) {
    ++res.samples;
    Term pi = pi_term(rule, t, t1, t2);
    TypeResult r = infer_cc(g, pi);
    if (!r || r.prop() != parse_prop(prop, c)) {
      res.fail("rule " + std::to_string(rule) + ": " + show(pi) + " : " +
               (r ? to_string(r.prop()) : r.error().render()));
    }
  }
  return res;
}

CheckResult check_cc_demo() {
  CheckResult res;
  res.name = "cc optimization demo";
  res.samples = 1;
  DemoResult d = demo_optimization();
  res.notes.push_back("route 1: " + show(d.result1));
  res.notes.push_back("route 2: " + show(d.result2));
  if (!d.converge) res.fail("routes differ");
  return res;
}

CheckResult check_cc_enumerate(std::size_t samples, std::uint64_t seed, std::size_t budget) {
  CheckResult res;
  res.name = "cc enumerated normal forms";
  Rng root(seed);
  GenOptions opt;
  opt.max_size = 25;
  std::size_t single = 0;
  std::size_t many = 0;
  std::size_t hit = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    Rng rng = root.split(i);
    opt.closed = i % 2 == 0;
    Sample s = generate(Calculus::CC, rng, opt);
    ++res.samples;
    ReductionGraph g = explore_cc(s.term, budget, cc_det_rules());
    if (g.budget_hit) {
      ++hit;
    } else if (g.normal_forms.size() == 1) {
      ++single;
    } else {
      ++many;
      if (res.notes.size() < kMaxCounterexamples) {
        res.notes.push_back("several normal forms: " + show(s.ctx, s.term));
      }
    }
  }
  res.notes.insert(res.notes.begin(), std::to_string(single) + " single normal form, " + std::to_string(many) +
                                          " several, " + std::to_string(hit) + " hit the budget of " +
                                          std::to_string(budget) + " nodes");
  return res;
}

bool SuiteReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.ok(); });
}

std::string SuiteReport::text() const {
  std::string s = "suite " + suite + '\n';
  for (const auto& c : checks) s += c.text();
  s += ok() ? "suite ok\n" : "suite FAILED\n";
  return s;
}

SuiteReport run_suite(const std::string& suite, std::size_t samples, std::uint64_t seed) {
  SuiteReport rep;
  rep.suite = suite;
  auto& out = rep.checks;
  if (suite == "iplus" || suite == "quantum") {
    Calculus c = suite == "iplus" ? Calculus::IPlus : Calculus::Quantum;
    out.push_back(check_subject_reduction(c, samples, seed));
    NormalizationChecks n = check_normalization(c, samples, seed, kDefaultFuel);
    out.push_back(n.introduction);
    out.push_back(n.termination);
    if (c == Calculus::Quantum) out.push_back(n.lex_decrease);
    out.push_back(check_confluence(c, std::max<std::size_t>(samples / 2, 1), seed));
    if (c == Calculus::Quantum) {
      out.push_back(check_measurement_frequency("measurement of inlr(1.0 . star, 1.0 . star)",
                                                "inlr(1.0 . star, 1.0 . star)", std::max<std::size_t>(samples * 10, 1000),
                                                seed, 0.5, 0.02));
    }
  } else if (suite == "qencode") {
    out.push_back(check_vector_round_trip(samples, seed, 16));
    out.push_back(check_vector_homomorphism(samples, seed, 16, 1e-9));
    MatrixChecks m = check_matrices(std::max<std::size_t>(samples / 4, 1), 20, seed, 8, 1e-9);
    out.push_back(m.agreement);
    out.push_back(m.linearity);
  } else if (suite == "cc") {
    out.push_back(check_subject_reduction(Calculus::CC, samples, seed));
    out.push_back(check_cc_rules(std::max<std::size_t>(samples / 10, 1), seed));
    out.push_back(check_cc_pi_types());
    out.push_back(check_cc_demo());
    out.push_back(check_cc_enumerate(samples, seed, 200));
  } else {
    throw std::invalid_argument("unknown suite " + suite + " (iplus, quantum, qencode, cc)");
  }
  return rep;
}

}  // namespace inlr
