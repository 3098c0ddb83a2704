#pragma once

#include <optional>

#include "inlr/rewrite.hpp"

namespace inlr::detail {

inline Rule rule(Calculus c, int n, Kind head, std::function<bool(const Term&)> m,
                 std::function<Term(const Term&)> k) {
  Rule r;
  r.id = {c, n, 0};
  r.head = head;
  r.matches = std::move(m);
  r.contract = std::move(k);
  return r;
}

inline bool kid_is(const Term& t, std::size_t i, Kind k) { return t.kid(i).kind() == k; }

// Components of a disjunction introduction: inl(t) = (t, -), inr(u) = (-, u),
// inlr(t, u) = (t, u).
struct Sides {
  std::optional<Term> left;
  std::optional<Term> right;
};

inline Sides sides(const Term& t) {
  switch (t.kind()) {
    case Kind::Inl: return {t.kid(0), std::nullopt};
    case Kind::Inr: return {std::nullopt, t.kid(0)};
    default: return {t.kid(0), t.kid(1)};
  }
}

inline std::optional<Term> add(const std::optional<Term>& a, const std::optional<Term>& b) {
  if (a && b) return Term::sum(*a, *b);
  return a ? a : b;
}

inline Term from_sides(const Sides& s) {
  if (s.left && s.right) return Term::inlr(*s.left, *s.right);
  if (s.left) return Term::inl(*s.left);
  return Term::inr(*s.right);
}

// The nine sum-versus-disjunction-introduction rules, numbered from `first`
// in the order inl/inl, inl/inr, inl/inlr, inr/inl, ..., inlr/inlr.
inline void add_sum_intro_rules(Calculus c, int first, std::vector<Rule>& out) {
  const Kind intro[] = {Kind::Inl, Kind::Inr, Kind::Inlr2};
  int n = first;
  for (Kind a : intro) {
    for (Kind b : intro) {
      out.push_back(rule(
          c, n++, Kind::Sum, [a, b](const Term& t) { return kid_is(t, 0, a) && kid_is(t, 1, b); },
          [](const Term& t) {
            Sides x = sides(t.kid(0));
            Sides y = sides(t.kid(1));
            return from_sides({add(x.left, y.left), add(x.right, y.right)});
          }));
    }
  }
}

inline Term beta(const Term& t) { return instantiate(t.kid(0).kid(0), t.kid(1)); }

inline Term sum_lam(const Term& t) {
  const Term& f = t.kid(0);
  return Term::lam(f.hint(0), f.annotation(), Term::sum(f.kid(0), t.kid(1).kid(0)));
}

// Case on inl/inr/inlr: rules shared by the intuitionistic and linear
// calculi (the latter also for case_nd on inl/inr).
inline Term case_inl(const Term& t) { return instantiate(t.kid(1), t.kid(0).kid(0)); }
inline Term case_inr(const Term& t) { return instantiate(t.kid(2), t.kid(0).kid(0)); }
inline Term case_inlr(const Term& t) {
  return Term::sum(instantiate(t.kid(1), t.kid(0).kid(0)), instantiate(t.kid(2), t.kid(0).kid(1)));
}

}  // namespace inlr::detail
