// Acceptance run: one PASS/FAIL line per criterion.
//
//   acceptance --cli build/inlr --golden tests/golden [--only N] [--update-golden]

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "inlr/cc.hpp"
#include "inlr/generate.hpp"
#include "inlr/parse.hpp"
#include "inlr/print.hpp"
#include "inlr/qencode.hpp"
#include "inlr/quantum.hpp"
#include "inlr/selftest.hpp"
#include "inlr/typing.hpp"

using namespace inlr;
namespace fs = std::filesystem;

namespace {

constexpr std::uint64_t kSeed = 20240601;
constexpr double kVectorTol = 1e-9;
constexpr double kFrequencyTol = 0.02;
constexpr double kSubjectReductionSeconds = 60.0;
constexpr double kMatrixSeconds = 120.0;

struct Verdict {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    if (!detail.empty()) detail += "; ";
    detail += what + (ok ? "" : " [failed]");
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fixed(double x, int digits = 2) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

std::string sci(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

void require_check(Verdict& v, const CheckResult& c) {
  v.require(c.ok(), c.name + " " + std::to_string(c.samples) + " samples, " + std::to_string(c.failures) +
                        " failures");
  if (!c.ok()) {
    for (const auto& x : c.counterexamples) std::cerr << "    " << c.name << ": " << x << '\n';
  }
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) out += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return out + "'";
}

struct Run {
  std::string out;
  std::string err;
  int code = -1;
  std::string transcript() const { return out + "--- stderr\n" + err + "--- exit " + std::to_string(code) + '\n'; }
};

Run run_cli(const std::string& cli, const std::string& args, const fs::path& cwd) {
  fs::path tmp = fs::temp_directory_path() / ("inlr-acceptance-" + std::to_string(::getpid()));
  fs::create_directories(tmp);
  std::string cmd = "cd " + shell_quote(cwd.string()) + " && " + shell_quote(cli) + " " + args + " > " +
                    shell_quote((tmp / "out").string()) + " 2> " + shell_quote((tmp / "err").string());
  int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = read_file(tmp / "out");
  r.err = read_file(tmp / "err");
  fs::remove_all(tmp);
  return r;
}

// 1. One-step reducts keep the inferred proposition.
Verdict subject_reduction() {
  Verdict v;
  auto t0 = std::chrono::steady_clock::now();
  for (Calculus c : {Calculus::IPlus, Calculus::Quantum, Calculus::CC}) {
    require_check(v, check_subject_reduction(c, 1000, kSeed));
  }
  double s = seconds_since(t0);
  v.require(s < kSubjectReductionSeconds, fixed(s) + " s");
  return v;
}

// 2, 3 and 5 share the normalization traces.
struct Normalized {
  NormalizationChecks iplus;
  NormalizationChecks quantum;
};

const Normalized& normalized() {
  static const Normalized n{check_normalization(Calculus::IPlus, 1000, kSeed, kDefaultFuel),
                            check_normalization(Calculus::Quantum, 1000, kSeed, kDefaultFuel)};
  return n;
}

Verdict introduction() {
  Verdict v;
  require_check(v, normalized().iplus.introduction);
  require_check(v, normalized().quantum.introduction);
  return v;
}

Verdict termination() {
  Verdict v;
  require_check(v, normalized().iplus.termination);
  require_check(v, normalized().quantum.termination);
  return v;
}

Verdict confluence() {
  Verdict v;
  require_check(v, check_confluence(Calculus::IPlus, 500, kSeed));
  require_check(v, check_confluence(Calculus::Quantum, 500, kSeed));
  return v;
}

Verdict lex_decrease() {
  Verdict v;
  const auto& q = normalized().quantum;
  require_check(v, q.lex_decrease);
  v.require(q.root_steps > 0, std::to_string(q.root_steps) + " root steps");
  // (lam x. x) (+) (lam x. x) -> lam x. (x (+) x): nu 3 then 2
  Term t = parse_term("sum(lam x:One. x, lam x:One. x)", Calculus::Quantum);
  Term u = parse_term("lam x:One. sum(x, x)", Calculus::Quantum);
  BigInt nt = measure_nu(t);
  BigInt nu = measure_nu(u);
  v.require(nt == 3 && nu == 2 && measure_mu(t) == measure_mu(u) && check_lex_decrease(t, u),
            "worked pair nu " + nt.str() + " -> " + nu.str());
  return v;
}

// 6. Denotation of sums and scalar products against vector arithmetic.
Verdict vector_homomorphism() {
  Verdict v;
  Rng root(kSeed);
  GenOptions opt;
  opt.deterministic = true;
  double worst = 0.0;
  std::size_t bad = 0;
  for (std::size_t i = 0; i < 200; ++i) {
    Rng rng = root.split(i);
    Prop p = random_vector_prop(rng, 16);
    Term u = generate_at(Calculus::Quantum, rng, p, opt);
    Term w = generate_at(Calculus::Quantum, rng, p, opt);
    Scalar a = random_scalar(rng);
    ComplexVector du = to_vector(u, p);
    ComplexVector dw = to_vector(w, p);
    ComplexVector expect_sum(du.size());
    ComplexVector expect_prod(du.size());
    for (Eigen::Index k = 0; k < du.size(); ++k) {
      expect_sum[k] = du[k] + dw[k];
      expect_prod[k] = a * du[k];
    }
    double e = std::max((to_vector(Term::sum(u, w), p) - expect_sum).cwiseAbs().maxCoeff(),
                        (to_vector(Term::prod(a, u), p) - expect_prod).cwiseAbs().maxCoeff());
    worst = std::max(worst, e);
    if (!(e < kVectorTol)) {
      ++bad;
      std::cerr << "    " << print_term(u) << " , " << print_term(w) << " at " << to_string(p) << '\n';
    }
  }
  v.require(bad == 0, "200 proof pairs, " + std::to_string(bad) + " failures, max error " + sci(worst));
  return v;
}

struct Compiled {
  ComplexMatrix m;
  Prop a;
  Prop b;
  Term t;
};

std::vector<Compiled> compiled_matrices() {
  std::vector<Compiled> out;
  Rng root(kSeed);
  for (std::size_t i = 0; i < 50; ++i) {
    Rng rng = root.split(i);
    std::size_t cols = 1 + rng.below(8);
    std::size_t rows = 1 + rng.below(8);
    Compiled c;
    c.a = random_vector_prop_of_dim(rng, cols);
    c.b = random_vector_prop_of_dim(rng, rows);
    c.m = random_matrix(rng, rows, cols);
    c.t = compile_matrix(c.m, c.a, c.b);
    out.push_back(std::move(c));
  }
  return out;
}

// 7. Compiled matrices applied to vectors against a plain matrix product.
Verdict matrix_compilation() {
  Verdict v;
  auto t0 = std::chrono::steady_clock::now();
  Rng root(kSeed + 1);
  double worst = 0.0;
  std::size_t bad = 0;
  std::size_t ill = 0;
  std::size_t i = 0;
  for (const auto& c : compiled_matrices()) {
    if (!check(Calculus::Quantum, {}, c.t, Prop::lollipop(c.a, c.b))) ++ill;
    Rng rng = root.split(i++);
    for (int k = 0; k < 20; ++k) {
      ComplexVector u = random_vector(rng, static_cast<std::size_t>(c.m.cols()));
      ComplexVector expect = ComplexVector::Zero(c.m.rows());
      for (Eigen::Index r = 0; r < c.m.rows(); ++r) {
        for (Eigen::Index s = 0; s < c.m.cols(); ++s) expect[r] += c.m(r, s) * u[s];
      }
      double e = (to_vector(Term::app(c.t, from_vector(u, c.a)), c.b) - expect).cwiseAbs().maxCoeff();
      worst = std::max(worst, e);
      if (!(e < kVectorTol)) ++bad;
    }
  }
  v.require(ill == 0, "50 matrices typecheck at A -o B");
  v.require(bad == 0, "1000 products, " + std::to_string(bad) + " failures, max error " + sci(worst));
  double s = seconds_since(t0);
  v.require(s < kMatrixSeconds, fixed(s) + " s");
  return v;
}

// 8. Linearity reports of the same compiled maps.
Verdict linear_maps() {
  Verdict v;
  double worst = 0.0;
  std::size_t bad = 0;
  std::uint64_t seed = kSeed;
  for (const auto& c : compiled_matrices()) {
    LinearityReport rep = check_linear_map(c.t, c.a, c.b, 20, kVectorTol, seed++);
    worst = std::max(worst, rep.max_error());
    if (!rep.ok()) ++bad;
  }
  v.require(bad == 0 && worst < kVectorTol,
            "50 maps, " + std::to_string(bad) + " failures, max error " + sci(worst));
  return v;
}

// 9. Measurement frequencies and the zero-norm exit code.
Verdict measurement(const std::string& cli, const fs::path& golden) {
  Verdict v;
  Term balanced = parse_term("inlr(1.0 . star, 1.0 . star)", Calculus::Quantum);
  double f1 = run_measure(Term::app(meas_first(1), balanced), 10000, kSeed).left_frequency();
  v.require(std::abs(f1 - 0.5) <= kFrequencyTol, "inlr(1.0 . star, 1.0 . star) left " + fixed(f1, 4));

  const double r = 1.0 / std::sqrt(2.0);
  ComplexMatrix h(2, 2);
  h << r, r, r, -r;
  Prop q1 = q_n(1);
  Term image = Term::app(compile_matrix(h, q1, q1), ket0());
  double f2 = run_measure(Term::app(meas_first(1), image), 10000, kSeed).left_frequency();
  v.require(std::abs(f2 - 0.5) <= kFrequencyTol, "Hadamard image of ket 0 left " + fixed(f2, 4));

  if (cli.empty()) {
    v.require(false, "no --cli given for the zero-norm exit code");
  } else {
    Run z = run_cli(cli, "measure inputs/measure_zero.term --shots 100 --seed 1", golden);
    v.require(z.code == 2, "zero norm exits " + std::to_string(z.code));
  }
  return v;
}

// 10. cc rules, pi terms, optimization demo.
Verdict cc_soundness() {
  Verdict v;
  require_check(v, check_cc_rules(300, kSeed));

  const Calculus c = Calculus::CC;
  Context g = parse_context("t:A1 \\/ A2, f:A1 => (B1 \\/ B2), h:A2 => (B3 \\/ B4)", c);
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
  std::size_t typed = 0;
  for (const auto& [rule, prop] : stated) {
    TypeResult r = infer_cc(g, pi_term(rule, Term::free("t"), t1, t2));
    if (r && r.prop() == parse_prop(prop, c)) ++typed;
  }
  v.require(typed == 6, std::to_string(typed) + "/6 pi terms at their stated propositions");

  DemoResult d = demo_optimization();
  Term expected = parse_term("and1(x, y. pair(u, y))", c);
  v.require(d.converge && alpha_eq(d.result1, expected) && alpha_eq(d.result2, expected),
            "demo routes meet at " + print_term(d.result1));
  return v;
}

struct GoldenCase {
  std::string name;
  std::string args;
};

std::vector<GoldenCase> golden_cases(const fs::path& dir) {
  std::vector<GoldenCase> out;
  std::istringstream in(read_file(dir / "cases.txt"));
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto bar = line.find(" | ");
    if (bar == std::string::npos) continue;
    out.push_back({line.substr(0, bar), line.substr(bar + 3)});
  }
  return out;
}

// 11. CLI transcripts against the pinned outputs, twice.
Verdict golden(const std::string& cli, const fs::path& dir, bool update) {
  Verdict v;
  if (cli.empty()) {
    v.require(false, "no --cli given");
    return v;
  }
  auto cases = golden_cases(dir);
  std::size_t same = 0;
  std::size_t stable = 0;
  for (const auto& c : cases) {
    std::string first = run_cli(cli, c.args, dir).transcript();
    std::string second = run_cli(cli, c.args, dir).transcript();
    fs::path expected = dir / "expected" / (c.name + ".out");
    if (update) {
      std::ofstream(expected, std::ios::binary) << first;
    }
    if (first == second) {
      ++stable;
    } else {
      std::cerr << "    " << c.name << ": differs between runs\n";
    }
    if (first == read_file(expected)) {
      ++same;
    } else {
      std::cerr << "    " << c.name << ": differs from " << expected.string() << "\n" << first;
    }
  }
  v.require(cases.size() >= 20, std::to_string(cases.size()) + " inputs");
  v.require(same == cases.size(), std::to_string(same) + " match the pinned output");
  v.require(stable == cases.size(), std::to_string(stable) + " identical across two runs");
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli;
  fs::path golden_dir = "tests/golden";
  int only = 0;
  bool update = false;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--cli" && i + 1 < argc) {
      cli = fs::absolute(argv[++i]).string();
    } else if (a == "--golden" && i + 1 < argc) {
      golden_dir = fs::absolute(argv[++i]);
    } else if (a == "--only" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else if (a == "--update-golden") {
      update = true;
    } else {
      std::cerr << "usage: acceptance --cli PATH --golden DIR [--only N] [--update-golden]\n";
      return 4;
    }
  }

  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"subject reduction", subject_reduction},
      {"introduction property", introduction},
      {"termination", termination},
      {"confluence", confluence},
      {"lexicographic decrease", lex_decrease},
      {"vector homomorphism", vector_homomorphism},
      {"matrix compilation", matrix_compilation},
      {"linearity of compiled maps", linear_maps},
      {"measurement statistics", [&] { return measurement(cli, golden_dir); }},
      {"cc rule soundness", cc_soundness},
      {"CLI golden suite", [&] { return golden(cli, golden_dir, update); }},
  };

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only && static_cast<std::size_t>(only) != i + 1) continue;
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    all &= v.pass;
    std::cout << (v.pass ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << ": " << v.detail
              << std::endl;
  }
  return all ? 0 : 1;
}
