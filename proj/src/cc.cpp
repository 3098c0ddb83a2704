#include "inlr/cc.hpp"

#include <deque>
#include <stdexcept>
#include <unordered_map>

#include "inlr/print.hpp"
#include "rule_util.hpp"

namespace inlr {

using namespace detail;

namespace {

constexpr Calculus kCc = Calculus::CC;

Term b(int i) { return Term::bound(i); }
Term up(const Term& t) { return shift(t, 1, 0); }

Term proj(int i, const Term& w) { return Term::and_elim(i, w, "z", b(0)); }

// u lives under binders [x, y]; the result lives under m new binders, the
// innermost of which is w, with x := and1(w, z. z) and y := and2(w, z. z).
Term pair_env(const Term& u, int m) { return substitute_env(u, 2, {proj(2, b(0)), proj(1, b(0))}, m); }

// u lives under one binder x; insert a new binder just outside x.
Term under_extra(const Term& u) { return substitute_env(u, 1, {b(0)}, 2); }

// u lives under [x, y]; swap the two binders.
Term swap01(const Term& u) { return substitute_env(u, 2, {b(1), b(0)}, 2); }

Term and_i(int i, const Term& t, const std::string& x, const Term& body) {
  return Term::and_elim(i, t, x, body);
}

Term pair_xy() { return Term::pair(b(1), b(0)); }

Term pi_scoped(int rule, const Term& t, const std::optional<Term>& t1, const std::optional<Term>& t2) {
  auto need = [&](const std::optional<Term>& s, const char* which) -> const Term& {
    if (!s) throw std::invalid_argument("pi term of rule " + std::to_string(rule) + " needs " + which);
    return *s;
  };
  switch (rule) {
    case 30:
      return Term::case_of(
          t, "x1", Term::inl(Term::inl(b(0))), "x2",
          Term::case_of(need(t2, "t2"), "y3", Term::inl(Term::inr(pair_xy())), "y4", Term::inr(pair_xy())));
    case 31:
      return Term::case_of(t, "x1", Term::inr(b(0)), "x2", Term::inl(b(0)));
    case 33:
      return Term::case_of(
          t, "x1", Term::inr(Term::inl(b(0))), "x2",
          Term::case_of(need(t2, "t2"), "y3", Term::inl(pair_xy()), "y4", Term::inr(Term::inr(pair_xy()))));
    case 34:
      return Term::case_of(
          t, "x1",
          Term::case_of(need(t1, "t1"), "y1", Term::inl(Term::inl(pair_xy())), "y2", Term::inr(pair_xy())),
          "x2", Term::inl(Term::inr(b(0))));
    case 35:
      return Term::case_of(
          t, "x1",
          Term::case_of(need(t1, "t1"), "y1", Term::inl(pair_xy()), "y2", Term::inr(Term::inl(pair_xy()))),
          "x2", Term::inr(Term::inr(b(0))));
    case 36:
      return Term::case_of(
          t, "x1",
          Term::case_of(need(t1, "t1"), "y1", Term::inl(Term::inl(pair_xy())), "y2",
                        Term::inr(Term::inl(pair_xy()))),
          "x2",
          Term::case_of(need(t2, "t2"), "y3", Term::inl(Term::inr(pair_xy())), "y4",
                        Term::inr(Term::inr(pair_xy()))));
    default:
      throw std::invalid_argument("rule " + std::to_string(rule) + " has no pi term");
  }
}

bool branches(const Term& t, Kind a, Kind c) { return kid_is(t, 1, a) && kid_is(t, 2, c); }

void add_and_rules(int i, std::vector<Rule>& r) {
  Kind head = i == 1 ? Kind::AndElim1 : Kind::AndElim2;
  auto add = [&](int n, Kind body, std::function<Term(const Term&)> k) {
    Rule x = rule(kCc, n, head, [body](const Term& t) { return kid_is(t, 1, body); }, std::move(k));
    x.id.variant = i;
    r.push_back(std::move(x));
  };
  add(19, Kind::Star, [](const Term&) { return Term::star(); });
  add(20, Kind::Lam, [i](const Term& t) {
    const Term& l = t.kid(1);
    return Term::lam(l.hint(0), l.annotation(), and_i(i, up(t.kid(0)), t.hint(1), swap01(l.kid(0))));
  });
  add(21, Kind::Pair, [i](const Term& t) {
    const Term& p = t.kid(1);
    return Term::pair(and_i(i, t.kid(0), t.hint(1), p.kid(0)), and_i(i, t.kid(0), t.hint(1), p.kid(1)));
  });
  add(22, Kind::Inl, [i](const Term& t) { return Term::inl(and_i(i, t.kid(0), t.hint(1), t.kid(1).kid(0))); });
  add(23, Kind::Inr, [i](const Term& t) { return Term::inr(and_i(i, t.kid(0), t.hint(1), t.kid(1).kid(0))); });
  add(24, Kind::Inlr3, [i](const Term& t) {
    const Term& s = t.kid(1);
    const std::string& x = t.hint(1);
    // The scrutinee u sits under x; when it does not mention x it moves out
    // as written, otherwise the elimination stays wrapped around it.
    Term u = has_index(s.kid(0), 0) ? and_i(i, t.kid(0), x, s.kid(0)) : instantiate(s.kid(0), Term::star());
    return Term::inlr3(u, s.hint(1), and_i(i, up(t.kid(0)), x, swap01(s.kid(1))), s.hint(2),
                       and_i(i, up(t.kid(0)), x, swap01(s.kid(2))));
  });
}

RuleSet build_cc(bool with_choice) {
  RuleSet rs{kCc, with_choice ? "cc" : "cc-det", {}};
  auto& r = rs.rules;
  // Cuts.
  r.push_back(rule(kCc, 1, Kind::TopElim, [](const Term& t) { return kid_is(t, 0, Kind::Star); },
                   [](const Term& t) { return t.kid(1); }));
  r.push_back(rule(kCc, 2, Kind::App, [](const Term& t) { return kid_is(t, 0, Kind::Lam); }, beta));
  r.push_back(rule(kCc, 3, Kind::AndElim1, [](const Term& t) { return kid_is(t, 0, Kind::Pair); },
                   [](const Term& t) { return instantiate(t.kid(1), t.kid(0).kid(0)); }));
  r.push_back(rule(kCc, 4, Kind::AndElim2, [](const Term& t) { return kid_is(t, 0, Kind::Pair); },
                   [](const Term& t) { return instantiate(t.kid(1), t.kid(0).kid(1)); }));
  r.push_back(rule(kCc, 5, Kind::Case, [](const Term& t) { return kid_is(t, 0, Kind::Inl); }, case_inl));
  r.push_back(rule(kCc, 6, Kind::Case, [](const Term& t) { return kid_is(t, 0, Kind::Inr); }, case_inr));
  r.push_back(rule(kCc, 7, Kind::Case, [](const Term& t) { return kid_is(t, 0, Kind::Inlr3); },
                   [](const Term& t) {
                     const Term& s = t.kid(0);
                     return Term::case_of(s.kid(0), s.hint(1), substitute_env(t.kid(1), 1, {s.kid(1)}, 1),
                                          s.hint(2), substitute_env(t.kid(2), 1, {s.kid(2)}, 1));
                   }));

  // Bottom elimination by the shape of its conclusion.
  auto bot_at = [](PropKind k) {
    return [k](const Term& t) { return t.annotation()->kind() == k; };
  };
  r.push_back(rule(kCc, 8, Kind::BotElim, bot_at(PropKind::Top), [](const Term&) { return Term::star(); }));
  r.push_back(rule(kCc, 9, Kind::BotElim, bot_at(PropKind::Impl), [](const Term& t) {
    const Prop& p = *t.annotation();
    return Term::lam("x", p.left(), Term::bot_elim(p.right(), up(t.kid(0))));
  }));
  r.push_back(rule(kCc, 10, Kind::BotElim, bot_at(PropKind::Conj), [](const Term& t) {
    const Prop& p = *t.annotation();
    return Term::pair(Term::bot_elim(p.left(), t.kid(0)), Term::bot_elim(p.right(), t.kid(0)));
  }));
  if (with_choice) {
    r.push_back(rule(kCc, 11, Kind::BotElim, bot_at(PropKind::Disj), [](const Term& t) {
      return Term::inl(Term::bot_elim(t.annotation()->left(), t.kid(0)));
    }));
    r.back().nondeterministic = true;
    r.push_back(rule(kCc, 12, Kind::BotElim, bot_at(PropKind::Disj), [](const Term& t) {
      return Term::inr(Term::bot_elim(t.annotation()->right(), t.kid(0)));
    }));
    r.back().nondeterministic = true;
  }

  // top_elim(t, intro).
  auto top_on = [](Kind k) { return [k](const Term& t) { return kid_is(t, 1, k); }; };
  r.push_back(rule(kCc, 13, Kind::TopElim, top_on(Kind::Star), [](const Term&) { return Term::star(); }));
  r.push_back(rule(kCc, 14, Kind::TopElim, top_on(Kind::Lam), [](const Term& t) {
    const Term& l = t.kid(1);
    return Term::lam(l.hint(0), l.annotation(), Term::top_elim(up(t.kid(0)), l.kid(0)));
  }));
  r.push_back(rule(kCc, 15, Kind::TopElim, top_on(Kind::Pair), [](const Term& t) {
    const Term& p = t.kid(1);
    return Term::pair(Term::top_elim(t.kid(0), p.kid(0)), Term::top_elim(t.kid(0), p.kid(1)));
  }));
  r.push_back(rule(kCc, 16, Kind::TopElim, top_on(Kind::Inl),
                   [](const Term& t) { return Term::inl(Term::top_elim(t.kid(0), t.kid(1).kid(0))); }));
  r.push_back(rule(kCc, 17, Kind::TopElim, top_on(Kind::Inr),
                   [](const Term& t) { return Term::inr(Term::top_elim(t.kid(0), t.kid(1).kid(0))); }));
  r.push_back(rule(kCc, 18, Kind::TopElim, top_on(Kind::Inlr3), [](const Term& t) {
    const Term& s = t.kid(1);
    Term tt = up(t.kid(0));
    return Term::inlr3(s.kid(0), s.hint(1), Term::top_elim(tt, s.kid(1)), s.hint(2), Term::top_elim(tt, s.kid(2)));
  }));

  // and_i(t, x. intro), stored per i so that ids stay stable.
  std::vector<Rule> and1;
  std::vector<Rule> and2;
  add_and_rules(1, and1);
  add_and_rules(2, and2);
  for (std::size_t k = 0; k < and1.size(); ++k) {
    r.push_back(and1[k]);
    r.push_back(and2[k]);
  }

  // case(t, x1. intro, x2. intro).
  r.push_back(rule(kCc, 25, Kind::Case, [](const Term& t) { return branches(t, Kind::Star, Kind::Star); },
                   [](const Term&) { return Term::star(); }));
  r.push_back(rule(kCc, 26, Kind::Case, [](const Term& t) { return branches(t, Kind::Lam, Kind::Lam); },
                   [](const Term& t) {
                     const Term& l1 = t.kid(1);
                     const Term& l2 = t.kid(2);
                     return Term::lam(l1.hint(0), l1.annotation(),
                                      Term::case_of(up(t.kid(0)), t.hint(1), swap01(l1.kid(0)), t.hint(2),
                                                    swap01(l2.kid(0))));
                   }));
  r.push_back(rule(kCc, 27, Kind::Case, [](const Term& t) { return branches(t, Kind::Pair, Kind::Pair); },
                   [](const Term& t) {
                     const Term& p1 = t.kid(1);
                     const Term& p2 = t.kid(2);
                     return Term::pair(Term::case_of(t.kid(0), t.hint(1), p1.kid(0), t.hint(2), p2.kid(0)),
                                       Term::case_of(t.kid(0), t.hint(1), p1.kid(1), t.hint(2), p2.kid(1)));
                   }));
  r.push_back(rule(kCc, 28, Kind::Case, [](const Term& t) { return branches(t, Kind::Inl, Kind::Inl); },
                   [](const Term& t) {
                     return Term::inl(Term::case_of(t.kid(0), t.hint(1), t.kid(1).kid(0), t.hint(2),
                                                    t.kid(2).kid(0)));
                   }));
  r.push_back(rule(kCc, 29, Kind::Case, [](const Term& t) { return branches(t, Kind::Inl, Kind::Inr); },
                   [](const Term& t) {
                     return Term::inlr3(t.kid(0), t.hint(1), t.kid(1).kid(0), t.hint(2), t.kid(2).kid(0));
                   }));
  r.push_back(rule(kCc, 30, Kind::Case, [](const Term& t) { return branches(t, Kind::Inl, Kind::Inlr3); },
                   [](const Term& t) {
                     const Term& u1 = t.kid(1).kid(0);
                     const Term& s = t.kid(2);
                     Term pi = pi_scoped(30, t.kid(0), std::nullopt, s.kid(0));
                     return Term::inlr3(pi, "z1",
                                        Term::case_of(b(0), t.hint(1), under_extra(u1), "w2", pair_env(s.kid(1), 2)),
                                        "z2", pair_env(s.kid(2), 1));
                   }));
  r.push_back(rule(kCc, 31, Kind::Case, [](const Term& t) { return branches(t, Kind::Inr, Kind::Inl); },
                   [](const Term& t) {
                     Term pi = pi_scoped(31, t.kid(0), std::nullopt, std::nullopt);
                     return Term::inlr3(pi, t.hint(2), t.kid(2).kid(0), t.hint(1), t.kid(1).kid(0));
                   }));
  r.push_back(rule(kCc, 32, Kind::Case, [](const Term& t) { return branches(t, Kind::Inr, Kind::Inr); },
                   [](const Term& t) {
                     return Term::inr(Term::case_of(t.kid(0), t.hint(1), t.kid(1).kid(0), t.hint(2),
                                                    t.kid(2).kid(0)));
                   }));
  r.push_back(rule(kCc, 33, Kind::Case, [](const Term& t) { return branches(t, Kind::Inr, Kind::Inlr3); },
                   [](const Term& t) {
                     const Term& u2 = t.kid(1).kid(0);
                     const Term& s = t.kid(2);
                     Term pi = pi_scoped(33, t.kid(0), std::nullopt, s.kid(0));
                     return Term::inlr3(pi, "z1", pair_env(s.kid(1), 1), "z2",
                                        Term::case_of(b(0), t.hint(1), under_extra(u2), "w2", pair_env(s.kid(2), 2)));
                   }));
  r.push_back(rule(kCc, 34, Kind::Case, [](const Term& t) { return branches(t, Kind::Inlr3, Kind::Inl); },
                   [](const Term& t) {
                     const Term& s = t.kid(1);
                     const Term& u3 = t.kid(2).kid(0);
                     Term pi = pi_scoped(34, t.kid(0), s.kid(0), std::nullopt);
                     return Term::inlr3(pi, "z1",
                                        Term::case_of(b(0), "w1", pair_env(s.kid(1), 2), t.hint(2), under_extra(u3)),
                                        "z2", pair_env(s.kid(2), 1));
                   }));
  r.push_back(rule(kCc, 35, Kind::Case, [](const Term& t) { return branches(t, Kind::Inlr3, Kind::Inr); },
                   [](const Term& t) {
                     const Term& s = t.kid(1);
                     const Term& u4 = t.kid(2).kid(0);
                     Term pi = pi_scoped(35, t.kid(0), s.kid(0), std::nullopt);
                     return Term::inlr3(pi, "z1", pair_env(s.kid(1), 1), "z2",
                                        Term::case_of(b(0), "w1", pair_env(s.kid(2), 2), t.hint(2), under_extra(u4)));
                   }));
  r.push_back(rule(kCc, 36, Kind::Case, [](const Term& t) { return branches(t, Kind::Inlr3, Kind::Inlr3); },
                   [](const Term& t) {
                     const Term& s1 = t.kid(1);
                     const Term& s2 = t.kid(2);
                     Term pi = pi_scoped(36, t.kid(0), s1.kid(0), s2.kid(0));
                     return Term::inlr3(
                         pi, "z1", Term::case_of(b(0), "w1", pair_env(s1.kid(1), 2), "w2", pair_env(s2.kid(1), 2)),
                         "z2", Term::case_of(b(0), "w1", pair_env(s1.kid(2), 2), "w2", pair_env(s2.kid(2), 2)));
                   }));
  return rs;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

Trace demo_trace(const Term& start, const std::vector<std::pair<Path, RuleId>>& steps) {
  Trace tr;
  tr.initial = start;
  Term cur = start;
  Rng rng(0);
  for (const auto& [pos, id] : steps) {
    StepResult s = step_at(cur, pos, id, std::nullopt, rng, cc_rules());
    cur = s.term;
    tr.steps.push_back(s.step);
  }
  tr.result = cur;
  if (first_redex(cur, cc_rules())) {
    tr.outcome = Outcome::FuelExhausted;
    tr.reason = "stopped after the demonstrated steps";
  }
  return tr;
}

}  // namespace

const RuleSet& cc_rules() {
  static const RuleSet rs = build_cc(true);
  return rs;
}

const RuleSet& cc_det_rules() {
  static const RuleSet rs = build_cc(false);
  return rs;
}

Term pi_term_scoped(int rule, const Term& t, const std::optional<Term>& t1, const std::optional<Term>& t2) {
  return pi_scoped(rule, t, t1, t2);
}

Term pi_term(int rule, const Term& t, const std::optional<Term>& t1, const std::optional<Term>& t2) {
  std::optional<Term> s1;
  std::optional<Term> s2;
  if (t1) s1 = abstract(*t1, "x1");
  if (t2) s2 = abstract(*t2, "x2");
  return pi_scoped(rule, t, s1, s2);
}

ReductionGraph explore_cc(const Term& t, std::size_t node_budget, const RuleSet& rs) {
  ReductionGraph g;
  std::unordered_map<Term, std::size_t, TermHash, TermAlphaEq> seen;
  g.nodes.push_back(t);
  seen.emplace(t, 0);
  std::deque<std::size_t> queue{0};
  Rng rng(0);
  while (!queue.empty()) {
    std::size_t id = queue.front();
    queue.pop_front();
    Term cur = g.nodes[id];
    auto redexes = find_redexes(cur, rs);
    if (redexes.empty()) {
      g.normal_forms.push_back(id);
      continue;
    }
    for (const auto& rx : redexes) {
      Term next = step_at(cur, rx.pos, rx.rule, std::nullopt, rng, rs).term;
      auto it = seen.find(next);
      std::size_t to;
      if (it != seen.end()) {
        to = it->second;
      } else {
        if (g.nodes.size() >= node_budget) {
          g.budget_hit = true;
          continue;
        }
        to = g.nodes.size();
        g.nodes.push_back(next);
        seen.emplace(next, to);
        queue.push_back(to);
      }
      g.edges.push_back({id, to, rx.rule, rx.pos});
    }
  }
  return g;
}

std::string ReductionGraph::dot() const {
  std::string out = "digraph reductions {\n  node [shape=box];\n";
  std::vector<bool> normal(nodes.size(), false);
  for (auto n : normal_forms) normal[n] = true;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    out += "  n" + std::to_string(i) + " [label=\"" + dot_escape(print_term(nodes[i])) + "\"";
    if (normal[i]) out += ", peripheries=2";
    out += "];\n";
  }
  for (const auto& e : edges) {
    out += "  n" + std::to_string(e.from) + " -> n" + std::to_string(e.to) + " [label=\"" + e.rule.str() + "\"];\n";
  }
  out += "}\n";
  return out;
}

Trace normalize_cc(const Term& t, std::size_t fuel) { return normalize(t, cc_rules(), fuel, Rng(0), kCcSizeLimit); }

DemoResult demo_optimization() {
  DemoResult d;
  Prop a = Prop::atom("A");
  Prop bb = Prop::atom("B");
  Prop c = Prop::atom("C");
  d.ctx = {{"x", Prop::conj(a, bb)}, {"u", c}};
  Term x = Term::free("x");
  Term u = Term::free("u");
  Term body = build::lam("z", c, Term::pair(Term::free("z"), Term::free("y")));
  d.unapplied = build::and1(x, "y", body);
  d.applied = Term::app(d.unapplied, u);

  const RuleId and_lam{kCc, 20, 1};
  const RuleId beta_id{kCc, 2, 0};
  d.route1 = demo_trace(d.applied, {{{0}, and_lam}, {{}, beta_id}});
  d.route2_body = demo_trace(d.unapplied, {{{}, and_lam}});
  d.route2_applied = demo_trace(Term::app(d.route2_body.result, u), {{{}, beta_id}});
  d.result1 = d.route1.result;
  d.result2 = d.route2_applied.result;
  d.normal1 = normalize_cc(d.result1).result;
  d.normal2 = normalize_cc(d.result2).result;
  d.converge = alpha_eq(d.result1, d.result2) && alpha_eq(d.normal1, d.normal2);
  return d;
}

}  // namespace inlr
