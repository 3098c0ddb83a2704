#include "inlr/generate.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

namespace inlr {

namespace {

using Hyps = std::vector<std::pair<std::string, Prop>>;

// Truth value of an atom-free proposition. For such propositions
// intuitionistic provability coincides with classical truth.
bool val(const Prop& p) {
  switch (p.kind()) {
    case PropKind::Bot: return false;
    case PropKind::Impl: return !val(p.left()) || val(p.right());
    case PropKind::Conj: return val(p.left()) && val(p.right());
    case PropKind::Disj: return val(p.left()) || val(p.right());
    default: return true;
  }
}

bool consistent(const Hyps& g) {
  for (const auto& h : g) {
    if (!val(h.second)) return false;
  }
  return true;
}

std::size_t part(Rng& rng, std::size_t s) { return s == 0 ? 0 : rng.below(s + 1); }

template <class F>
auto with_hyp(Hyps& g, const std::string& x, const Prop& p, F&& f) {
  g.emplace_back(x, p);
  auto r = f();
  g.pop_back();
  return r;
}

Prop prop_of_kind(Calculus c, Rng& rng, PropKind k, int depth) {
  if (k == PropKind::Top || k == PropKind::Bot || k == PropKind::One) {
    return k == PropKind::Top ? Prop::top() : k == PropKind::Bot ? Prop::bot() : Prop::one();
  }
  Prop l = random_prop(c, rng, depth - 1);
  return Prop::binary(k, l, random_prop(c, rng, depth - 1));
}

// Intuitionistic generator, shared by the iplus and cc calculi.
class IGen {
 public:
  IGen(Calculus c, Rng& rng) : c_(c), rng_(rng) {}

  bool inh(const Hyps& g, const Prop& a) const { return !consistent(g) || val(a); }

  std::string fresh() { return "x" + std::to_string(n_++); }

  Prop aux(const Hyps& g, std::optional<PropKind> kind, int depth = 2) {
    for (int i = 0; i < 64; ++i) {
      Prop p = kind ? prop_of_kind(c_, rng_, *kind, depth) : random_prop(c_, rng_, depth);
      if (inh(g, p)) return p;
    }
    return kind ? Prop::binary(*kind, Prop::top(), Prop::top()) : Prop::top();
  }

  Term inhabit(Hyps& g, const Prop& a) {
    if (val(a)) return canonical(g, a);
    // The newest false hypothesis is the smallest one, which keeps the
    // refutation from cycling back through an older one.
    for (std::size_t i = g.size(); i-- > 0;) {
      if (val(g[i].second)) continue;
      auto h = g[i];
      return Term::bot_elim(a, refute(g, Term::free(h.first), h.second));
    }
    throw std::logic_error("inhabit: uninhabited proposition");
  }

  Term gen(Hyps& g, const Prop& a, std::size_t s) {
    std::vector<std::string> vars;
    for (const auto& h : g) {
      if (h.second == a) vars.push_back(h.first);
    }
    if (s <= 1) {
      if (!vars.empty() && rng_.below(2) == 0) return Term::free(vars[rng_.below(vars.size())]);
      return inhabit(g, a);
    }
    enum Opt { Var, Intro, Sum, App, AndE, Case, TopE, BotE };
    std::vector<std::pair<Opt, int>> opts;
    if (!vars.empty()) opts.push_back({Var, 2});
    if (a.kind() != PropKind::Bot) opts.push_back({Intro, 4});
    if (c_ == Calculus::IPlus) opts.push_back({Sum, 3});
    opts.push_back({App, 2});
    opts.push_back({AndE, 1});
    opts.push_back({Case, 2});
    opts.push_back({TopE, 1});
    if (!consistent(g)) opts.push_back({BotE, 1});
    int total = 0;
    for (auto& o : opts) total += o.second;
    int r = static_cast<int>(rng_.below(total));
    Opt pick = opts.back().first;
    for (auto& o : opts) {
      if (r < o.second) {
        pick = o.first;
        break;
      }
      r -= o.second;
    }
    std::size_t rest = s - 1;
    std::size_t k = part(rng_, rest);
    switch (pick) {
      case Var: return Term::free(vars[rng_.below(vars.size())]);
      case Intro: return intro(g, a, rest);
      case Sum: return Term::sum(gen(g, a, k), gen(g, a, rest - k));
      case App: {
        Prop c = aux(g, std::nullopt, 1);
        Term f = gen(g, Prop::impl(c, a), k);
        return Term::app(f, gen(g, c, rest - k));
      }
      case AndE: {
        Prop p = aux(g, PropKind::Conj, 2);
        int i = rng_.coin() ? 1 : 2;
        Term t = gen(g, p, k);
        std::string x = fresh();
        Term body = with_hyp(g, x, i == 1 ? p.left() : p.right(), [&] { return gen(g, a, rest - k); });
        return i == 1 ? build::and1(t, x, body) : build::and2(t, x, body);
      }
      case Case: {
        Prop p = aux(g, PropKind::Disj, 2);
        std::size_t k2 = part(rng_, rest - k);
        Term t = gen(g, p, k);
        std::string x = fresh();
        std::string y = fresh();
        Term u = with_hyp(g, x, p.left(), [&] { return gen(g, a, k2); });
        Term v = with_hyp(g, y, p.right(), [&] { return gen(g, a, rest - k - k2); });
        return build::case_of(t, x, u, y, v);
      }
      case TopE: {
        Term t = gen(g, Prop::top(), k);
        return Term::top_elim(t, gen(g, a, rest - k));
      }
      case BotE: return Term::bot_elim(a, gen(g, Prop::bot(), rest));
    }
    return inhabit(g, a);
  }

  // Some introduction of a.
  Term intro(Hyps& g, const Prop& a, std::size_t s) {
    switch (a.kind()) {
      case PropKind::Impl: return shaped(g, a, Kind::Lam, s).value();
      case PropKind::Conj: return shaped(g, a, Kind::Pair, s).value();
      case PropKind::Disj: {
        std::vector<Kind> ks;
        if (inh(g, a.left())) ks.push_back(Kind::Inl);
        if (inh(g, a.right())) ks.push_back(Kind::Inr);
        if (c_ == Calculus::IPlus && ks.size() == 2) ks.push_back(Kind::Inlr2);
        if (c_ == Calculus::CC) ks.push_back(Kind::Inlr3);
        for (int tries = 0; tries < 4; ++tries) {
          if (auto t = shaped(g, a, ks[rng_.below(ks.size())], s)) return *t;
        }
        return inhabit(g, a);
      }
      default: return Term::star();
    }
  }

  // An introduction of a with the given head, if one exists.
  std::optional<Term> shaped(Hyps& g, const Prop& a, Kind head, std::size_t s) {
    std::size_t rest = s == 0 ? 0 : s - 1;
    std::size_t k = part(rng_, rest);
    switch (head) {
      case Kind::Star:
        if (a.kind() != PropKind::Top) return std::nullopt;
        return Term::star();
      case Kind::Lam: {
        if (a.kind() != PropKind::Impl || !inh(g, a)) return std::nullopt;
        std::string x = fresh();
        Term body = with_hyp(g, x, a.left(), [&] { return gen(g, a.right(), rest); });
        return build::lam(x, a.left(), body);
      }
      case Kind::Pair:
        if (a.kind() != PropKind::Conj || !inh(g, a)) return std::nullopt;
        return Term::pair(gen(g, a.left(), k), gen(g, a.right(), rest - k));
      case Kind::Inl:
        if (a.kind() != PropKind::Disj || !inh(g, a.left())) return std::nullopt;
        return Term::inl(gen(g, a.left(), rest));
      case Kind::Inr:
        if (a.kind() != PropKind::Disj || !inh(g, a.right())) return std::nullopt;
        return Term::inr(gen(g, a.right(), rest));
      case Kind::Inlr2:
        if (a.kind() != PropKind::Disj || !inh(g, a.left()) || !inh(g, a.right())) return std::nullopt;
        return Term::inlr(gen(g, a.left(), k), gen(g, a.right(), rest - k));
      case Kind::Inlr3: {
        if (a.kind() != PropKind::Disj) return std::nullopt;
        for (int i = 0; i < 16; ++i) {
          Prop p = aux(g, PropKind::Disj, 2);
          std::string x = fresh();
          std::string y = fresh();
          bool ok = with_hyp(g, x, p.left(), [&] { return inh(g, a.left()); }) &&
                    with_hyp(g, y, p.right(), [&] { return inh(g, a.right()); });
          if (!ok) continue;
          std::size_t k2 = part(rng_, rest - k);
          Term t = gen(g, p, k);
          Term u = with_hyp(g, x, p.left(), [&] { return gen(g, a.left(), k2); });
          Term v = with_hyp(g, y, p.right(), [&] { return gen(g, a.right(), rest - k - k2); });
          return build::inlr3(t, x, u, y, v);
        }
        return std::nullopt;
      }
      default: return std::nullopt;
    }
  }

  Calculus calc() const { return c_; }
  Rng& rng() { return rng_; }

 private:
  Term canonical(Hyps& g, const Prop& a) {
    switch (a.kind()) {
      case PropKind::Top: return Term::star();
      case PropKind::Impl: {
        std::string x = fresh();
        Term body = with_hyp(g, x, a.left(), [&] { return inhabit(g, a.right()); });
        return build::lam(x, a.left(), body);
      }
      case PropKind::Conj: return Term::pair(inhabit(g, a.left()), inhabit(g, a.right()));
      case PropKind::Disj:
        return val(a.left()) ? Term::inl(inhabit(g, a.left())) : Term::inr(inhabit(g, a.right()));
      default: throw std::logic_error("canonical: false proposition");
    }
  }

  // A proof of Bot from s : p, where p is false.
  Term refute(Hyps& g, const Term& s, const Prop& p) {
    switch (p.kind()) {
      case PropKind::Bot: return s;
      case PropKind::Impl: return refute(g, Term::app(s, inhabit(g, p.left())), p.right());
      case PropKind::Conj: {
        std::string y = fresh();
        bool left = !val(p.left());
        const Prop& q = left ? p.left() : p.right();
        Term body = with_hyp(g, y, q, [&] { return refute(g, Term::free(y), q); });
        return left ? build::and1(s, y, body) : build::and2(s, y, body);
      }
      case PropKind::Disj: {
        std::string y = fresh();
        std::string z = fresh();
        Term u = with_hyp(g, y, p.left(), [&] { return refute(g, Term::free(y), p.left()); });
        Term v = with_hyp(g, z, p.right(), [&] { return refute(g, Term::free(z), p.right()); });
        return build::case_of(s, y, u, z, v);
      }
      default: throw std::logic_error("refute: true proposition");
    }
  }

  Calculus c_;
  Rng& rng_;
  int n_ = 0;
};

// Linear generator: every hypothesis of the context is consumed exactly once.
class LGen {
 public:
  LGen(Rng& rng, bool deterministic) : rng_(rng), det_(deterministic) {}

  std::string fresh() { return "x" + std::to_string(n_++); }

  Term gen(const Hyps& d, const Prop& a, std::size_t s) {
    bool var = d.size() == 1 && d[0].second == a;
    if (s <= 1) return var && rng_.below(4) != 0 ? Term::free(d[0].first) : fallback(d, a);
    enum Opt { Var, Intro, Sum, Prod, App, OneE, Case, CaseNd };
    std::vector<std::pair<Opt, int>> opts;
    if (var) opts.push_back({Var, 3});
    if (a.kind() != PropKind::One || d.empty()) opts.push_back({Intro, 4});
    opts.push_back({Sum, 3});
    opts.push_back({Prod, 2});
    opts.push_back({App, 2});
    opts.push_back({OneE, 2});
    opts.push_back({Case, 2});
    if (!det_) opts.push_back({CaseNd, 2});
    int total = 0;
    for (auto& o : opts) total += o.second;
    int r = static_cast<int>(rng_.below(total));
    Opt pick = opts.back().first;
    for (auto& o : opts) {
      if (r < o.second) {
        pick = o.first;
        break;
      }
      r -= o.second;
    }
    std::size_t rest = s - 1;
    std::size_t k = part(rng_, rest);
    switch (pick) {
      case Var: return Term::free(d[0].first);
      case Intro: return intro(d, a, rest);
      case Sum: return Term::sum(gen(d, a, k), gen(d, a, rest - k));
      case Prod: return Term::prod(random_scalar(rng_), gen(d, a, rest));
      case App: {
        auto [d1, d2] = split(d);
        Prop c = random_prop(Calculus::Quantum, rng_, 1);
        Term f = gen(d1, Prop::lollipop(c, a), k);
        return Term::app(f, gen(d2, c, rest - k));
      }
      case OneE: {
        auto [d1, d2] = split(d);
        Term t = gen(d1, Prop::one(), k);
        return Term::one_elim(t, gen(d2, a, rest - k));
      }
      case Case:
      case CaseNd: {
        auto [d1, d2] = split(d);
        Prop p = prop_of_kind(Calculus::Quantum, rng_, PropKind::OPlus, 2);
        std::size_t k2 = part(rng_, rest - k);
        Term t = gen(d1, p, k);
        std::string x = fresh();
        std::string y = fresh();
        Hyps dx = d2;
        dx.emplace_back(x, p.left());
        Hyps dy = d2;
        dy.emplace_back(y, p.right());
        Term u = gen(dx, a, k2);
        Term v = gen(dy, a, rest - k - k2);
        return pick == Case ? build::case_of(t, x, u, y, v) : build::case_nd(t, x, u, y, v);
      }
    }
    return fallback(d, a);
  }

  Term intro(const Hyps& d, const Prop& a, std::size_t s) {
    switch (a.kind()) {
      case PropKind::One: return Term::scalar_star(random_scalar(rng_));
      case PropKind::Lollipop: {
        std::string x = fresh();
        Hyps dx = d;
        dx.emplace_back(x, a.left());
        return build::lam(x, a.left(), gen(dx, a.right(), s));
      }
      default: {
        switch (rng_.below(3)) {
          case 0: return Term::inl(gen(d, a.left(), s));
          case 1: return Term::inr(gen(d, a.right(), s));
          default: {
            std::size_t k = part(rng_, s);
            return Term::inlr(gen(d, a.left(), k), gen(d, a.right(), s - k));
          }
        }
      }
    }
  }

  Term closed_value(const Prop& a) {
    switch (a.kind()) {
      case PropKind::One: return Term::scalar_star(random_scalar(rng_));
      case PropKind::Lollipop: {
        std::string x = fresh();
        return build::lam(x, a.left(), consume(Term::free(x), a.left(), closed_value(a.right())));
      }
      default:
        switch (rng_.below(3)) {
          case 0: return Term::inl(closed_value(a.left()));
          case 1: return Term::inr(closed_value(a.right()));
          default: return Term::inlr(closed_value(a.left()), closed_value(a.right()));
        }
    }
  }

 private:
  std::pair<Hyps, Hyps> split(const Hyps& d) {
    Hyps l;
    Hyps r;
    for (const auto& h : d) (rng_.coin() ? l : r).push_back(h);
    return {l, r};
  }

  Term fallback(const Hyps& d, const Prop& a) {
    Term t = closed_value(a);
    for (auto it = d.rbegin(); it != d.rend(); ++it) t = consume(Term::free(it->first), it->second, t);
    return t;
  }

  // Uses up s : p, then continues with t.
  Term consume(const Term& s, const Prop& p, const Term& t) {
    switch (p.kind()) {
      case PropKind::One: return Term::one_elim(s, t);
      case PropKind::Lollipop: return consume(Term::app(s, closed_value(p.left())), p.right(), t);
      default: {
        std::string y = fresh();
        std::string z = fresh();
        return build::case_of(s, y, consume(Term::free(y), p.left(), t), z,
                              consume(Term::free(z), p.right(), t));
      }
    }
  }

  Rng& rng_;
  bool det_;
  int n_ = 0;
};

Hyps random_hyps(Calculus c, Rng& rng, std::size_t max_count) {
  Hyps g;
  std::size_t n = rng.below(max_count + 1);
  for (std::size_t i = 0; i < n; ++i) g.emplace_back("h" + std::to_string(i), random_prop(c, rng, 2));
  return g;
}

}  // namespace

Prop random_prop(Calculus c, Rng& rng, int depth) {
  bool quantum = c == Calculus::Quantum;
  if (depth <= 0 || rng.below(3) == 0) {
    if (quantum) return Prop::one();
    return rng.below(3) == 0 ? Prop::bot() : Prop::top();
  }
  static const PropKind intuitionistic[] = {PropKind::Impl, PropKind::Conj, PropKind::Disj};
  static const PropKind linear[] = {PropKind::Lollipop, PropKind::OPlus};
  PropKind k = quantum ? linear[rng.below(2)] : intuitionistic[rng.below(3)];
  return prop_of_kind(c, rng, k, depth);
}

Prop random_vector_prop_of_dim(Rng& rng, std::size_t dim) {
  if (dim == 1) return Prop::one();
  std::size_t k = 1 + rng.below(dim - 1);
  return Prop::oplus(random_vector_prop_of_dim(rng, k), random_vector_prop_of_dim(rng, dim - k));
}

Prop random_vector_prop(Rng& rng, std::size_t max_dim) {
  return random_vector_prop_of_dim(rng, 1 + rng.below(max_dim));
}

Scalar random_scalar(Rng& rng) {
  auto half = [&] { return (static_cast<double>(rng.below(9)) - 4.0) / 2.0; };
  double re = half();
  double im = rng.below(3) == 0 ? half() : 0.0;
  return {re, im};
}

Sample generate(Calculus c, Rng& rng, const GenOptions& opt) {
  for (int attempt = 0;; ++attempt) {
    std::size_t cap = attempt < 100 ? opt.max_size : 4;
    std::size_t s = 1 + rng.below(cap);
    Hyps g = opt.closed ? Hyps{} : random_hyps(c, rng, 2);
    Term t;
    Prop goal;
    if (c == Calculus::Quantum) {
      goal = random_prop(c, rng, opt.prop_depth);
      LGen gen(rng, opt.deterministic);
      t = gen.gen(g, goal, s);
    } else {
      IGen gen(c, rng);
      goal = gen.aux(g, std::nullopt, opt.prop_depth);
      if (!gen.inh(g, goal)) continue;
      t = gen.gen(g, goal, s);
    }
    if (t.size() <= opt.max_size) return {g, t, goal};
  }
}

Term generate_at(Calculus c, Rng& rng, const Prop& goal, const GenOptions& opt) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::size_t cap = attempt < 100 ? opt.max_size : 4;
    std::size_t s = 1 + rng.below(cap);
    Hyps g;
    Term t;
    if (c == Calculus::Quantum) {
      LGen gen(rng, opt.deterministic);
      t = gen.gen(g, goal, s);
    } else {
      IGen gen(c, rng);
      if (!gen.inh(g, goal)) throw std::invalid_argument("generate_at: uninhabited proposition");
      t = gen.gen(g, goal, s);
    }
    if (t.size() <= opt.max_size || attempt == 999) return t;
  }
  throw std::logic_error("unreachable");
}

namespace {

Kind intro_shape(int rule) {
  // 13-18 and 19-24 share the order star, lam, pair, inl, inr, inlr.
  static const Kind order[] = {Kind::Star, Kind::Lam, Kind::Pair, Kind::Inl, Kind::Inr, Kind::Inlr3};
  return order[(rule - 13) % 6];
}

PropKind goal_kind(Kind shape) {
  switch (shape) {
    case Kind::Star: return PropKind::Top;
    case Kind::Lam: return PropKind::Impl;
    case Kind::Pair: return PropKind::Conj;
    default: return PropKind::Disj;
  }
}

std::optional<Term> cc_lhs(int n, int variant, IGen& gen, Hyps& g, Prop& goal, std::size_t s) {
  Rng& rng = gen.rng();
  std::size_t k = part(rng, s);
  auto any_goal = [&] { return gen.aux(g, std::nullopt, 2); };
  if (n == 1) {
    goal = any_goal();
    return Term::top_elim(Term::star(), gen.gen(g, goal, s));
  }
  if (n == 2) {
    goal = any_goal();
    Prop c = gen.aux(g, std::nullopt, 1);
    std::string x = gen.fresh();
    Term body = with_hyp(g, x, c, [&] { return gen.gen(g, goal, k); });
    return Term::app(build::lam(x, c, body), gen.gen(g, c, s - k));
  }
  if (n == 3 || n == 4) {
    goal = any_goal();
    Prop p = gen.aux(g, PropKind::Conj, 2);
    std::size_t k2 = part(rng, s - k);
    Term pr = Term::pair(gen.gen(g, p.left(), k), gen.gen(g, p.right(), k2));
    std::string x = gen.fresh();
    Term body = with_hyp(g, x, n == 3 ? p.left() : p.right(), [&] { return gen.gen(g, goal, s - k - k2); });
    return n == 3 ? build::and1(pr, x, body) : build::and2(pr, x, body);
  }
  if (n >= 5 && n <= 7) {
    goal = any_goal();
    Prop p = gen.aux(g, PropKind::Disj, 2);
    Term scrut;
    Prop l = p.left();
    Prop r = p.right();
    if (n == 5) {
      if (!gen.inh(g, l)) return std::nullopt;
      scrut = Term::inl(gen.gen(g, l, k));
    } else if (n == 6) {
      if (!gen.inh(g, r)) return std::nullopt;
      scrut = Term::inr(gen.gen(g, r, k));
    } else {
      // The binder-form inlr proves l' \/ r' from p.
      Prop target = gen.aux(g, PropKind::Disj, 2);
      auto t = gen.shaped(g, target, Kind::Inlr3, k);
      if (!t) return std::nullopt;
      scrut = *t;
      l = target.left();
      r = target.right();
    }
    std::size_t k2 = part(rng, s - k);
    std::string x = gen.fresh();
    std::string y = gen.fresh();
    Term u = with_hyp(g, x, l, [&] { return gen.gen(g, goal, k2); });
    Term v = with_hyp(g, y, r, [&] { return gen.gen(g, goal, s - k - k2); });
    return build::case_of(scrut, x, u, y, v);
  }
  if (n >= 8 && n <= 12) {
    static const PropKind kinds[] = {PropKind::Top, PropKind::Impl, PropKind::Conj, PropKind::Disj,
                                     PropKind::Disj};
    goal = prop_of_kind(gen.calc(), rng, kinds[n - 8], 2);
    if (consistent(g)) g.emplace_back("e", rng.coin() ? Prop::bot() : Prop::impl(Prop::top(), Prop::bot()));
    return Term::bot_elim(goal, gen.gen(g, Prop::bot(), s));
  }
  if (n >= 13 && n <= 24) {
    Kind shape = intro_shape(n);
    goal = gen.aux(g, goal_kind(shape), 2);
    if (n <= 18) {
      auto body = gen.shaped(g, goal, shape, s - k);
      if (!body) return std::nullopt;
      return Term::top_elim(gen.gen(g, Prop::top(), k), *body);
    }
    Prop p = gen.aux(g, PropKind::Conj, 2);
    Term t = gen.gen(g, p, k);
    std::string x = gen.fresh();
    auto body = with_hyp(g, x, variant == 1 ? p.left() : p.right(),
                         [&] { return gen.shaped(g, goal, shape, s - k); });
    if (!body) return std::nullopt;
    return variant == 1 ? build::and1(t, x, *body) : build::and2(t, x, *body);
  }
  if (n >= 25 && n <= 36) {
    static const std::pair<Kind, Kind> shapes[] = {
        {Kind::Star, Kind::Star},  {Kind::Lam, Kind::Lam},     {Kind::Pair, Kind::Pair},
        {Kind::Inl, Kind::Inl},    {Kind::Inl, Kind::Inr},     {Kind::Inl, Kind::Inlr3},
        {Kind::Inr, Kind::Inl},    {Kind::Inr, Kind::Inr},     {Kind::Inr, Kind::Inlr3},
        {Kind::Inlr3, Kind::Inl},  {Kind::Inlr3, Kind::Inr},   {Kind::Inlr3, Kind::Inlr3},
    };
    auto [s1, s2] = shapes[n - 25];
    goal = gen.aux(g, goal_kind(s1), 2);
    Prop p = gen.aux(g, PropKind::Disj, 2);
    std::size_t k2 = part(rng, s - k);
    Term t = gen.gen(g, p, k);
    std::string x = gen.fresh();
    std::string y = gen.fresh();
    auto u = with_hyp(g, x, p.left(), [&] { return gen.shaped(g, goal, s1, k2); });
    auto v = with_hyp(g, y, p.right(), [&] { return gen.shaped(g, goal, s2, s - k - k2); });
    if (!u || !v) return std::nullopt;
    return build::case_of(t, x, *u, y, *v);
  }
  throw std::invalid_argument("no cc rule " + std::to_string(n));
}

}  // namespace

Sample cc_rule_instance(const RuleId& id, Rng& rng, std::size_t max_size) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::size_t cap = attempt < 200 ? max_size : 6;
    Hyps g = random_hyps(Calculus::CC, rng, 2);
    IGen gen(Calculus::CC, rng);
    Prop goal;
    auto t = cc_lhs(id.number, id.variant, gen, g, goal, rng.below(cap));
    if (t && t->size() <= max_size) return {g, *t, goal};
  }
  throw std::runtime_error("cc_rule_instance: no instance found for " + id.str());
}

}  // namespace inlr
