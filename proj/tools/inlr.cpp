// Command-line front end: check, norm, measure, compile-matrix, encode,
// demo-opt, selftest.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "inlr/cc.hpp"
#include "inlr/iplus.hpp"
#include "inlr/parse.hpp"
#include "inlr/print.hpp"
#include "inlr/qencode.hpp"
#include "inlr/quantum.hpp"
#include "inlr/selftest.hpp"
#include "inlr/typing.hpp"

using namespace inlr;

namespace {

enum Exit { kOk = 0, kTypeError = 1, kStuck = 2, kFuel = 3, kUsage = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Calculus calculus_of(const std::string& name) {
  auto c = calculus_from_string(name);
  if (!c) throw UsageError("unknown calculus " + name + " (iplus, quantum, cc)");
  return *c;
}

const RuleSet& rules_of(Calculus c) {
  switch (c) {
    case Calculus::IPlus: return iplus_rules();
    case Calculus::Quantum: return quantum_rules();
    case Calculus::CC: return cc_rules();
  }
  return iplus_rules();
}

struct Typed {
  Context ctx;
  Term term;
  Prop prop;
};

// Parses and typechecks; prints the diagnostic and returns nullopt on error.
std::optional<Typed> load(const std::string& file, Calculus c, const std::string& ctx_text) {
  Typed t;
  t.ctx = parse_context(ctx_text, c);
  t.term = parse_term(slurp(file), c);
  TypeResult r = infer(c, t.ctx, t.term);
  if (!r) {
    std::cerr << "type error: " << r.error().render() << '\n';
    return std::nullopt;
  }
  t.prop = r.prop();
  return t;
}

int exit_for(Outcome o) {
  switch (o) {
    case Outcome::NormalForm: return kOk;
    case Outcome::Stuck: return kStuck;
    case Outcome::FuelExhausted: return kFuel;
  }
  return kOk;
}

void print_steps(const Trace& tr) {
  for (const auto& s : tr.steps) std::cout << "  " << s.rule.str() << " at " << render_path(s.pos) << '\n';
}

struct Options {
  std::string file;
  std::string calculus = "iplus";
  std::string ctx;
  std::size_t fuel = 0;
  std::uint64_t seed = 0;
  std::size_t shots = 1000;
  bool trace = false;
  std::string from;
  std::string to;
  std::string prop;
  std::string vec;
  std::string term_file;
  std::string suite;
  std::size_t samples = 100;
};

int cmd_check(const Options& o) {
  Calculus c = calculus_of(o.calculus);
  auto t = load(o.file, c, o.ctx);
  if (!t) return kTypeError;
  std::cout << to_string(t->prop) << '\n';
  return kOk;
}

int cmd_norm(const Options& o) {
  Calculus c = calculus_of(o.calculus);
  auto t = load(o.file, c, o.ctx);
  if (!t) return kTypeError;
  std::size_t fuel = o.fuel ? o.fuel : c == Calculus::CC ? kDefaultCcFuel : kDefaultFuel;
  Trace tr = c == Calculus::CC ? normalize(t->term, rules_of(c), fuel, Rng(o.seed), kCcSizeLimit)
                               : normalize(t->term, rules_of(c), fuel, Rng(o.seed));
  std::cout << print_term(tr.result) << '\n';
  if (o.trace) std::cout << trace_json_lines(tr);
  if (tr.outcome != Outcome::NormalForm) std::cerr << to_string(tr.outcome) << ": " << tr.reason << '\n';
  return exit_for(tr.outcome);
}

int cmd_measure(const Options& o) {
  auto t = load(o.file, Calculus::Quantum, o.ctx);
  if (!t) return kTypeError;
  if (!is_closed(t->term)) {
    std::cerr << "measure needs a closed term\n";
    return kTypeError;
  }
  Histogram h = run_measure(t->term, o.shots, o.seed, o.fuel ? o.fuel : kDefaultFuel);
  std::cout << h.json() << '\n';
  if (h.all_stuck()) {
    std::cerr << "stuck: every shot hit a zero-norm measurement\n";
    return kStuck;
  }
  for (const auto& b : h.bins) {
    if (b.outcome == "FuelExhausted") return kFuel;
  }
  return kOk;
}

int cmd_compile(const Options& o) {
  ComplexMatrix m = matrix_from_json(slurp(o.file));
  Prop a = parse_prop(o.from, Calculus::Quantum);
  Prop b = parse_prop(o.to, Calculus::Quantum);
  std::cout << print_term(compile_matrix(m, a, b)) << '\n';
  return kOk;
}

int cmd_encode(const Options& o) {
  Prop p = parse_prop(o.prop, Calculus::Quantum);
  if (o.vec.empty() == o.term_file.empty()) throw UsageError("encode needs exactly one of --vec and --term");
  if (!o.vec.empty()) {
    std::cout << print_term(from_vector(vector_from_json(slurp(o.vec)), p)) << '\n';
  } else {
    Term t = parse_term(slurp(o.term_file), Calculus::Quantum);
    std::cout << vector_to_json(to_vector(t, p, o.fuel ? o.fuel : kDefaultFuel)) << '\n';
  }
  return kOk;
}

int cmd_demo() {
  DemoResult d = demo_optimization();
  std::string g;
  for (const auto& [x, a] : d.ctx) g += (g.empty() ? "" : ", ") + x + ":" + to_string(a);
  std::cout << "context: " << g << '\n';
  std::cout << "applied: " << print_term(d.applied) << '\n';
  std::cout << "route 1, commute inside the application then beta:\n";
  print_steps(d.route1);
  std::cout << "  result: " << print_term(d.result1) << '\n';
  std::cout << "route 2, commute the unapplied body:\n";
  std::cout << "  body: " << print_term(d.unapplied) << '\n';
  print_steps(d.route2_body);
  std::cout << "  body result: " << print_term(d.route2_body.result) << '\n';
  std::cout << "  applied to u:\n";
  print_steps(d.route2_applied);
  std::cout << "  result: " << print_term(d.result2) << '\n';
  std::cout << "normal form 1: " << print_term(d.normal1) << '\n';
  std::cout << "normal form 2: " << print_term(d.normal2) << '\n';
  std::cout << "converge: " << (d.converge ? "yes" : "no") << '\n';
  return d.converge ? kOk : kTypeError;
}

int cmd_selftest(const Options& o) {
  if (o.suite != "iplus" && o.suite != "quantum" && o.suite != "qencode" && o.suite != "cc") {
    throw UsageError("unknown suite " + o.suite + " (iplus, quantum, qencode, cc)");
  }
  SuiteReport r = run_suite(o.suite, o.samples, o.seed);
  std::cout << r.text();
  return r.ok() ? kOk : kTypeError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"inlr: proof terms of the in-left-right calculi"};
  app.require_subcommand(1);
  Options o;

  auto* check = app.add_subcommand("check", "print the proposition of a term");
  check->add_option("file", o.file, "term file")->required();
  check->add_option("--calculus", o.calculus, "iplus, quantum or cc");
  check->add_option("--ctx", o.ctx, "hypotheses, e.g. \"x:A, y:B\"");

  auto* norm = app.add_subcommand("norm", "normalize leftmost-outermost");
  norm->add_option("file", o.file, "term file")->required();
  norm->add_option("--calculus", o.calculus, "iplus, quantum or cc");
  norm->add_option("--ctx", o.ctx, "hypotheses");
  norm->add_option("--fuel", o.fuel, "maximum number of steps");
  norm->add_option("--seed", o.seed, "seed for measurement steps");
  norm->add_flag("--trace", o.trace, "print the steps as JSON lines");

  auto* measure = app.add_subcommand("measure", "histogram of repeated normalization (quantum)");
  measure->add_option("file", o.file, "term file")->required();
  measure->add_option("--shots", o.shots, "number of runs");
  measure->add_option("--seed", o.seed, "seed");
  measure->add_option("--fuel", o.fuel, "maximum number of steps per run");

  auto* compile = app.add_subcommand("compile-matrix", "proof of A -o B for a matrix");
  compile->add_option("file", o.file, "matrix JSON")->required();
  compile->add_option("--from", o.from, "domain vector proposition")->required();
  compile->add_option("--to", o.to, "codomain vector proposition")->required();

  auto* encode = app.add_subcommand("encode", "vector to proof, or proof to vector");
  encode->add_option("--vec", o.vec, "vector JSON file");
  encode->add_option("--term", o.term_file, "term file");
  encode->add_option("--prop", o.prop, "vector proposition")->required();
  encode->add_option("--fuel", o.fuel, "maximum number of steps");

  auto* demo = app.add_subcommand("demo-opt", "the commuting-cut optimization example");

  auto* selftest = app.add_subcommand("selftest", "run a property suite");
  selftest->add_option("--suite", o.suite, "iplus, quantum, qencode or cc")->required();
  selftest->add_option("--samples", o.samples, "samples per check");
  selftest->add_option("--seed", o.seed, "seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*check) return cmd_check(o);
    if (*norm) return cmd_norm(o);
    if (*measure) return cmd_measure(o);
    if (*compile) return cmd_compile(o);
    if (*encode) return cmd_encode(o);
    if (*demo) return cmd_demo();
    if (*selftest) return cmd_selftest(o);
  } catch (const UsageError& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const SyntaxError& e) {
    std::cerr << "syntax error: " << e.what() << '\n';
    return kTypeError;
  } catch (const QuantumError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kTypeError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kTypeError;
  }
  return kUsage;
}
