#include "inlr/typing.hpp"

#include <map>
#include "json.hpp"

namespace inlr {

std::string_view to_string(TypeErrorKind k) {
  switch (k) {
    case TypeErrorKind::UnboundVar: return "UnboundVar";
    case TypeErrorKind::Mismatch: return "Mismatch";
    case TypeErrorKind::NotAFunction: return "NotAFunction";
    case TypeErrorKind::LinearUnused: return "LinearUnused";
    case TypeErrorKind::LinearReused: return "LinearReused";
    case TypeErrorKind::ConstructorOutsideCalculus: return "ConstructorOutsideCalculus";
    case TypeErrorKind::AnnotationRequired: return "AnnotationRequired";
  }
  return "?";
}

std::string render_path(const Path& p) {
  if (p.empty()) return "root";
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += '.';
    s += std::to_string(p[i]);
  }
  return s;
}

namespace {

std::string join(const std::vector<std::string>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ", ";
    s += xs[i];
  }
  return s;
}

}  // namespace

std::string TypeError::render() const {
  std::string detail;
  switch (kind) {
    case TypeErrorKind::Mismatch:
      detail = "expected " + expected + ", found " + found;
      break;
    case TypeErrorKind::NotAFunction:
      detail = "applied term has proposition " + found;
      break;
    case TypeErrorKind::UnboundVar:
      detail = "unbound variable " + join(vars);
      break;
    case TypeErrorKind::LinearUnused:
      detail = "hypotheses not used exactly once: " + join(vars);
      break;
    case TypeErrorKind::LinearReused:
      detail = "hypothesis used twice: " + join(vars);
      break;
    case TypeErrorKind::ConstructorOutsideCalculus:
      detail = found + " is not in the calculus";
      break;
    case TypeErrorKind::AnnotationRequired:
      detail = "lambda binder " + join(vars) + " needs a proposition annotation";
      break;
  }
  return render_path(path) + ": " + std::string(to_string(kind)) + ": " + detail;
}

std::string TypeError::json() const {
  nlohmann::ordered_json j;
  j["path"] = path;
  j["kind"] = std::string(to_string(kind));
  j["expected"] = expected.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(expected);
  j["found"] = found.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(found);
  if (!vars.empty()) j["vars"] = vars;
  return j.dump();
}

namespace {

struct Failure {
  TypeError error;
};

PropKind arrow_of(Calculus c) { return c == Calculus::Quantum ? PropKind::Lollipop : PropKind::Impl; }
PropKind disj_of(Calculus c) { return c == Calculus::Quantum ? PropKind::OPlus : PropKind::Disj; }

class Checker {
 public:
  Checker(Calculus c, const Context& ctx) : calc_(c), linear_(c == Calculus::Quantum) {
    for (const auto& [x, a] : ctx) free_.push_back({x, a, false});
  }

  TypeResult run(const Term& t, const std::optional<Prop>& expected) {
    try {
      if (auto bad = first_outside(calc_, t)) {
        const Term& s = subterm_at(t, *bad);
        std::string what(kind_name(s.kind()));
        if (allows(calc_, s.kind())) what = "proposition " + to_string(*s.annotation());
        throw Failure{{TypeErrorKind::ConstructorOutsideCalculus, *bad, "", what, {}}};
      }
      Prop a = infer(t);
      if (expected) {
        std::map<int, Prop> seen;
        unify_or_fail(freshen(*expected, seen), a);
      }
      if (linear_) {
        std::vector<std::string> unused;
        for (const auto& h : free_) {
          if (!h.used) unused.push_back(h.name);
        }
        if (!unused.empty()) fail(TypeErrorKind::LinearUnused, unused);
      }
      return canonical(zonk(a));
    } catch (const Failure& f) {
      return f.error;
    }
  }

 private:
  struct Hyp {
    std::string name;
    Prop type;
    bool used;
  };
  struct Snapshot {
    std::vector<bool> free;
    std::vector<bool> bound;
  };

  Snapshot snapshot() const {
    Snapshot s;
    for (const auto& h : free_) s.free.push_back(h.used);
    for (const auto& h : bound_) s.bound.push_back(h.used);
    return s;
  }
  void restore(const Snapshot& s) {
    for (std::size_t i = 0; i < free_.size(); ++i) free_[i].used = s.free[i];
    for (std::size_t i = 0; i < bound_.size(); ++i) bound_[i].used = s.bound[i];
  }
  // Both premises of an additive rule must consume the same hypotheses.
  void same_consumption(const Snapshot& a, const Snapshot& b) {
    std::vector<std::string> diff;
    for (std::size_t i = 0; i < a.free.size(); ++i) {
      if (a.free[i] != b.free[i]) diff.push_back(free_[i].name);
    }
    for (std::size_t i = 0; i < a.bound.size(); ++i) {
      if (a.bound[i] != b.bound[i]) diff.push_back(bound_[i].name);
    }
    if (!diff.empty()) fail(TypeErrorKind::LinearUnused, diff);
  }

  [[noreturn]] void fail(TypeErrorKind k, std::vector<std::string> vars = {}, std::string expected = {},
                         std::string found = {}) {
    throw Failure{{k, path_, std::move(expected), std::move(found), std::move(vars)}};
  }

  Prop fresh() {
    metas_.emplace_back();
    return Prop::meta(static_cast<int>(metas_.size()) - 1);
  }

  Prop freshen(const Prop& p, std::map<int, Prop>& seen) {
    if (p.kind() == PropKind::Meta) {
      auto it = seen.find(p.meta_id());
      if (it == seen.end()) it = seen.emplace(p.meta_id(), fresh()).first;
      return it->second;
    }
    if (p.is_binary()) {
      Prop l = freshen(p.left(), seen);
      return Prop::binary(p.kind(), l, freshen(p.right(), seen));
    }
    return p;
  }

  Prop resolve(Prop p) const {
    while (p.kind() == PropKind::Meta && metas_[p.meta_id()]) p = *metas_[p.meta_id()];
    return p;
  }

  Prop zonk(const Prop& p) const {
    Prop r = resolve(p);
    if (r.is_binary()) return Prop::binary(r.kind(), zonk(r.left()), zonk(r.right()));
    return r;
  }

  bool occurs(int m, const Prop& p) const {
    Prop r = resolve(p);
    if (r.kind() == PropKind::Meta) return r.meta_id() == m;
    if (r.is_binary()) return occurs(m, r.left()) || occurs(m, r.right());
    return false;
  }

  bool unify(const Prop& a0, const Prop& b0) {
    Prop a = resolve(a0);
    Prop b = resolve(b0);
    if (a.kind() == PropKind::Meta && b.kind() == PropKind::Meta && a.meta_id() == b.meta_id()) return true;
    if (a.kind() == PropKind::Meta) {
      if (occurs(a.meta_id(), b)) return false;
      metas_[a.meta_id()] = b;
      return true;
    }
    if (b.kind() == PropKind::Meta) return unify(b, a);
    if (a.kind() != b.kind()) return false;
    if (a.kind() == PropKind::Atom) return a.name() == b.name();
    if (a.is_binary()) return unify(a.left(), b.left()) && unify(a.right(), b.right());
    return true;
  }

  void unify_or_fail(const Prop& expected, const Prop& found) {
    if (!unify(expected, found)) {
      fail(TypeErrorKind::Mismatch, {}, show(expected), show(found));
    }
  }

  std::string show(const Prop& p) const { return to_string(zonk(p)); }

  // Splits p as a binary proposition of kind k, refining a metavariable.
  std::pair<Prop, Prop> expect_binary(const Prop& p, PropKind k, TypeErrorKind err) {
    Prop r = resolve(p);
    if (r.kind() == PropKind::Meta) {
      Prop a = fresh();
      Prop b = fresh();
      metas_[r.meta_id()] = Prop::binary(k, a, b);
      return {a, b};
    }
    if (r.kind() != k) {
      Prop shape = Prop::binary(k, Prop::atom("_"), Prop::atom("_"));
      fail(err, {}, to_string(shape), show(r));
    }
    return {r.left(), r.right()};
  }

  Prop child(const Term& t, std::size_t i) {
    path_.push_back(static_cast<int>(i));
    Prop p = infer(t.kid(i));
    path_.pop_back();
    return p;
  }

  // Infers child i under a binder of proposition `a`; the binder must be
  // consumed in linear mode.
  Prop child_under(const Term& t, std::size_t i, const Prop& a) {
    std::string name = t.hint(i).empty() ? "_" : t.hint(i);
    bound_.push_back({name, a, false});
    path_.push_back(static_cast<int>(i));
    Prop p = infer(t.kid(i));
    bool used = bound_.back().used;
    if (linear_ && !used) fail(TypeErrorKind::LinearUnused, {name});
    path_.pop_back();
    bound_.pop_back();
    return p;
  }

  Hyp& lookup(const Term& v) {
    if (v.is_bound_var()) {
      auto i = static_cast<std::size_t>(v.index());
      if (i >= bound_.size()) fail(TypeErrorKind::UnboundVar, {"#" + std::to_string(i)});
      return bound_[bound_.size() - 1 - i];
    }
    for (auto& h : free_) {
      if (h.name == v.name()) return h;
    }
    fail(TypeErrorKind::UnboundVar, {v.name()});
  }

  Prop infer(const Term& t) {
    switch (t.kind()) {
      case Kind::Var: {
        Hyp& h = lookup(t);
        if (linear_) {
          if (h.used) fail(TypeErrorKind::LinearReused, {h.name});
          h.used = true;
        }
        return h.type;
      }
      case Kind::Star:
        return Prop::top();
      case Kind::ScalarStar:
        return Prop::one();
      case Kind::Sum:
      case Kind::Inlr2: {
        Snapshot before = snapshot();
        Prop a = child(t, 0);
        Snapshot left = snapshot();
        restore(before);
        Prop b = child(t, 1);
        same_consumption(left, snapshot());
        if (t.kind() == Kind::Inlr2) return Prop::binary(disj_of(calc_), a, b);
        unify_or_fail(a, b);
        return a;
      }
      case Kind::Prod:
        return child(t, 0);
      case Kind::TopElim: {
        Prop a = child(t, 0);
        path_.push_back(0);
        unify_or_fail(Prop::top(), a);
        path_.pop_back();
        return child(t, 1);
      }
      case Kind::OneElim: {
        Prop a = child(t, 0);
        path_.push_back(0);
        unify_or_fail(Prop::one(), a);
        path_.pop_back();
        return child(t, 1);
      }
      case Kind::BotElim: {
        Prop a = child(t, 0);
        path_.push_back(0);
        unify_or_fail(Prop::bot(), a);
        path_.pop_back();
        return *t.annotation();
      }
      case Kind::Lam: {
        if (!t.annotation()) fail(TypeErrorKind::AnnotationRequired, {t.hint(0)});
        Prop a = *t.annotation();
        Prop b = child_under(t, 0, a);
        return Prop::binary(arrow_of(calc_), a, b);
      }
      case Kind::App: {
        Prop f = child(t, 0);
        path_.push_back(0);
        auto [a, b] = expect_binary(f, arrow_of(calc_), TypeErrorKind::NotAFunction);
        path_.pop_back();
        Prop x = child(t, 1);
        path_.push_back(1);
        unify_or_fail(a, x);
        path_.pop_back();
        return b;
      }
      case Kind::Pair:
        return Prop::conj(child(t, 0), child(t, 1));
      case Kind::AndElim1:
      case Kind::AndElim2: {
        Prop s = child(t, 0);
        path_.push_back(0);
        auto [a, b] = expect_binary(s, PropKind::Conj, TypeErrorKind::Mismatch);
        path_.pop_back();
        return child_under(t, 1, t.kind() == Kind::AndElim1 ? a : b);
      }
      case Kind::Inl:
        return Prop::binary(disj_of(calc_), child(t, 0), fresh());
      case Kind::Inr:
        return Prop::binary(disj_of(calc_), fresh(), child(t, 0));
      case Kind::Case:
      case Kind::CaseNd:
      case Kind::Inlr3: {
        Prop s = child(t, 0);
        path_.push_back(0);
        auto [a, b] = expect_binary(s, disj_of(calc_), TypeErrorKind::Mismatch);
        path_.pop_back();
        Snapshot before = snapshot();
        Prop c = child_under(t, 1, a);
        Snapshot left = snapshot();
        restore(before);
        Prop d = child_under(t, 2, b);
        same_consumption(left, snapshot());
        if (t.kind() == Kind::Inlr3) return Prop::binary(disj_of(calc_), c, d);
        unify_or_fail(c, d);
        return c;
      }
    }
    fail(TypeErrorKind::ConstructorOutsideCalculus, {}, "", std::string(kind_name(t.kind())));
  }

  static Prop canonical(const Prop& p) {
    std::map<int, int> renum;
    return renumber(p, renum);
  }

  static Prop renumber(const Prop& p, std::map<int, int>& renum) {
    if (p.kind() == PropKind::Meta) {
      auto [it, fresh] = renum.emplace(p.meta_id(), static_cast<int>(renum.size()));
      return Prop::meta(it->second);
    }
    if (p.is_binary()) {
      Prop l = renumber(p.left(), renum);
      return Prop::binary(p.kind(), l, renumber(p.right(), renum));
    }
    return p;
  }

  Calculus calc_;
  bool linear_;
  std::vector<Hyp> free_;
  std::vector<Hyp> bound_;
  std::vector<std::optional<Prop>> metas_;
  Path path_;
};

bool same_rec(const Prop& a, const Prop& b, std::map<int, int>& ab, std::map<int, int>& ba) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case PropKind::Meta: {
      auto [i, fi] = ab.emplace(a.meta_id(), b.meta_id());
      auto [j, fj] = ba.emplace(b.meta_id(), a.meta_id());
      return i->second == b.meta_id() && j->second == a.meta_id();
    }
    case PropKind::Atom:
      return a.name() == b.name();
    default:
      if (a.is_binary()) return same_rec(a.left(), b.left(), ab, ba) && same_rec(a.right(), b.right(), ab, ba);
      return true;
  }
}

}  // namespace

TypeResult infer(Calculus c, const Context& ctx, const Term& t) {
  return Checker(c, ctx).run(t, std::nullopt);
}

TypeResult infer_iplus(const Context& ctx, const Term& t) { return infer(Calculus::IPlus, ctx, t); }
TypeResult infer_linear(const Context& ctx, const Term& t) { return infer(Calculus::Quantum, ctx, t); }
TypeResult infer_cc(const Context& ctx, const Term& t) { return infer(Calculus::CC, ctx, t); }

TypeResult check(Calculus c, const Context& ctx, const Term& t, const Prop& expected) {
  return Checker(c, ctx).run(t, expected);
}

bool same_up_to_metas(const Prop& a, const Prop& b) {
  std::map<int, int> ab;
  std::map<int, int> ba;
  return same_rec(a, b, ab, ba);
}

namespace {

Prop rigid(const Prop& p) {
  if (p.kind() == PropKind::Meta) return Prop::atom("?" + std::to_string(p.meta_id()));
  if (p.is_binary()) return Prop::binary(p.kind(), rigid(p.left()), rigid(p.right()));
  return p;
}

}  // namespace

bool has_type(Calculus c, const Context& ctx, const Term& t, const Prop& a) {
  return check(c, ctx, t, rigid(a)).ok();
}

}  // namespace inlr
