#include "inlr/iplus.hpp"

#include "inlr/generate.hpp"
#include "inlr/print.hpp"
#include "rule_util.hpp"

namespace inlr {

using namespace detail;

namespace {

RuleSet build_iplus() {
  constexpr Calculus c = Calculus::IPlus;
  RuleSet rs{c, "iplus", {}};
  auto& r = rs.rules;
  r.push_back(rule(c, 1, Kind::TopElim, [](const Term& t) { return kid_is(t, 0, Kind::Star); },
                   [](const Term& t) { return t.kid(1); }));
  r.push_back(rule(c, 2, Kind::App, [](const Term& t) { return kid_is(t, 0, Kind::Lam); }, beta));
  r.push_back(rule(c, 3, Kind::AndElim1, [](const Term& t) { return kid_is(t, 0, Kind::Pair); },
                   [](const Term& t) { return instantiate(t.kid(1), t.kid(0).kid(0)); }));
  r.push_back(rule(c, 4, Kind::AndElim2, [](const Term& t) { return kid_is(t, 0, Kind::Pair); },
                   [](const Term& t) { return instantiate(t.kid(1), t.kid(0).kid(1)); }));
  r.push_back(rule(c, 5, Kind::Case, [](const Term& t) { return kid_is(t, 0, Kind::Inl); }, case_inl));
  r.push_back(rule(c, 6, Kind::Case, [](const Term& t) { return kid_is(t, 0, Kind::Inr); }, case_inr));
  r.push_back(rule(c, 7, Kind::Case, [](const Term& t) { return kid_is(t, 0, Kind::Inlr2); }, case_inlr));
  r.push_back(rule(
      c, 8, Kind::Sum, [](const Term& t) { return kid_is(t, 0, Kind::Star) && kid_is(t, 1, Kind::Star); },
      [](const Term&) { return Term::star(); }));
  r.push_back(rule(
      c, 9, Kind::Sum, [](const Term& t) { return kid_is(t, 0, Kind::Lam) && kid_is(t, 1, Kind::Lam); },
      sum_lam));
  r.push_back(rule(
      c, 10, Kind::Sum,
      [](const Term& t) { return kid_is(t, 0, Kind::Pair) && kid_is(t, 1, Kind::Pair); },
      [](const Term& t) {
        const Term& a = t.kid(0);
        const Term& b = t.kid(1);
        return Term::pair(Term::sum(a.kid(0), b.kid(0)), Term::sum(a.kid(1), b.kid(1)));
      }));
  add_sum_intro_rules(c, 11, r);
  return rs;
}

}  // namespace

const RuleSet& iplus_rules() {
  static const RuleSet rs = build_iplus();
  return rs;
}

bool is_introduction(const Term& t) {
  switch (t.kind()) {
    case Kind::Star:
    case Kind::ScalarStar:
    case Kind::Lam:
    case Kind::Pair:
    case Kind::Inl:
    case Kind::Inr:
    case Kind::Inlr2:
    case Kind::Inlr3:
      return true;
    default:
      return false;
  }
}

PropertyReport check_introduction_property(std::size_t samples, std::uint64_t seed) {
  PropertyReport rep;
  Rng root(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    Rng rng = root.split(i);
    Sample s = generate(Calculus::IPlus, rng);
    Trace tr = normalize(s.term, iplus_rules(), kDefaultFuel, rng.split(1));
    ++rep.samples;
    if (tr.outcome != Outcome::NormalForm || !is_introduction(tr.result)) {
      ++rep.failures;
      if (rep.counterexamples.size() < 5) {
        rep.counterexamples.push_back(print_term(s.term) + " ~> " + print_term(tr.result));
      }
    }
  }
  return rep;
}

}  // namespace inlr
