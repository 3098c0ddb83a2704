#include "inlr/term.hpp"

#include <algorithm>
#include <cassert>
#include <cstring>
#include <functional>
#include <map>

namespace inlr {

struct Term::Node {
  Kind kind;
  std::vector<Term> kids;
  std::vector<std::string> hints;
  std::string name;
  int index = -1;
  Scalar scalar;
  std::optional<Prop> annotation;
  std::size_t hash = 0;
  std::size_t size = 1;
  int loose = 0;  // 1 + largest dangling index, 0 if none
  bool has_free = false;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t hash_double(double x) {
  if (x == 0.0) x = 0.0;  // fold -0.0
  std::uint64_t bits;
  std::memcpy(&bits, &x, sizeof bits);
  return std::hash<std::uint64_t>{}(bits);
}

const std::string kEmpty;

}  // namespace

std::string_view kind_name(Kind k) {
  switch (k) {
    case Kind::Var: return "var";
    case Kind::Sum: return "sum";
    case Kind::Prod: return "prod";
    case Kind::Star: return "star";
    case Kind::ScalarStar: return "scalar star";
    case Kind::TopElim: return "top_elim";
    case Kind::BotElim: return "bot_elim";
    case Kind::Lam: return "lam";
    case Kind::App: return "application";
    case Kind::Pair: return "pair";
    case Kind::AndElim1: return "and1";
    case Kind::AndElim2: return "and2";
    case Kind::Inl: return "inl";
    case Kind::Inr: return "inr";
    case Kind::Inlr2: return "inlr";
    case Kind::Inlr3: return "inlr (binder form)";
    case Kind::Case: return "case";
    case Kind::CaseNd: return "case_nd";
    case Kind::OneElim: return "one_elim";
  }
  return "?";
}

int binders_at(Kind k, std::size_t child) {
  switch (k) {
    case Kind::Lam:
      return child == 0 ? 1 : 0;
    case Kind::AndElim1:
    case Kind::AndElim2:
      return child == 1 ? 1 : 0;
    case Kind::Case:
    case Kind::CaseNd:
    case Kind::Inlr3:
      return child >= 1 ? 1 : 0;
    default:
      return 0;
  }
}

Term::Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Term::Term() : Term(star()) {}

Term Term::make(Kind k, std::vector<Term> kids, std::vector<std::string> hints, Scalar a,
                std::optional<Prop> annotation) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->hints = std::move(hints);
  n->hints.resize(kids.size());
  n->scalar = a;
  n->annotation = std::move(annotation);
  std::size_t h = static_cast<std::size_t>(k) * 0x100000001b3ULL + 17;
  if (k == Kind::ScalarStar || k == Kind::Prod) {
    h = mix(h, hash_double(a.real()));
    h = mix(h, hash_double(a.imag()));
  }
  if (n->annotation) h = mix(h, n->annotation->hash());
  for (std::size_t i = 0; i < kids.size(); ++i) {
    const auto& kid = kids[i];
    h = mix(h, kid.hash());
    n->size += kid.size();
    n->loose = std::max(n->loose, kid.node_->loose - binders_at(k, i));
    n->has_free = n->has_free || kid.node_->has_free;
  }
  n->hash = h;
  n->kids = std::move(kids);
  return Term(n);
}

Term Term::free(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Var;
  n->hash = mix(0xf7ee, std::hash<std::string>{}(name));
  n->name = std::move(name);
  n->has_free = true;
  return Term(n);
}

Term Term::bound(int index) {
  assert(index >= 0);
  auto n = std::make_shared<Node>();
  n->kind = Kind::Var;
  n->index = index;
  n->hash = mix(0xb0d, static_cast<std::size_t>(index));
  n->loose = index + 1;
  return Term(n);
}

Term Term::star() {
  static const Term s = make(Kind::Star, {});
  return s;
}
Term Term::scalar_star(Scalar a) { return make(Kind::ScalarStar, {}, {}, a); }
Term Term::sum(Term t, Term u) { return make(Kind::Sum, {std::move(t), std::move(u)}); }
Term Term::prod(Scalar a, Term t) { return make(Kind::Prod, {std::move(t)}, {}, a); }
Term Term::top_elim(Term t, Term u) { return make(Kind::TopElim, {std::move(t), std::move(u)}); }
Term Term::bot_elim(Prop result, Term t) {
  return make(Kind::BotElim, {std::move(t)}, {}, {}, std::move(result));
}
Term Term::lam(std::string hint, std::optional<Prop> annotation, Term body) {
  return make(Kind::Lam, {std::move(body)}, {std::move(hint)}, {}, std::move(annotation));
}
Term Term::app(Term f, Term a) { return make(Kind::App, {std::move(f), std::move(a)}); }
Term Term::pair(Term t, Term u) { return make(Kind::Pair, {std::move(t), std::move(u)}); }
Term Term::and_elim(int which, Term t, std::string hint, Term body) {
  assert(which == 1 || which == 2);
  return make(which == 1 ? Kind::AndElim1 : Kind::AndElim2, {std::move(t), std::move(body)},
              {"", std::move(hint)});
}
Term Term::inl(Term t) { return make(Kind::Inl, {std::move(t)}); }
Term Term::inr(Term t) { return make(Kind::Inr, {std::move(t)}); }
Term Term::inlr(Term t, Term u) { return make(Kind::Inlr2, {std::move(t), std::move(u)}); }
Term Term::inlr3(Term t, std::string x, Term u, std::string y, Term v) {
  return make(Kind::Inlr3, {std::move(t), std::move(u), std::move(v)}, {"", std::move(x), std::move(y)});
}
Term Term::case_of(Term t, std::string x, Term u, std::string y, Term v) {
  return make(Kind::Case, {std::move(t), std::move(u), std::move(v)}, {"", std::move(x), std::move(y)});
}
Term Term::case_nd(Term t, std::string x, Term u, std::string y, Term v) {
  return make(Kind::CaseNd, {std::move(t), std::move(u), std::move(v)},
              {"", std::move(x), std::move(y)});
}
Term Term::one_elim(Term t, Term u) { return make(Kind::OneElim, {std::move(t), std::move(u)}); }

Term Term::with_kids(std::vector<Term> kids) const {
  if (kind() == Kind::Var) return *this;
  assert(kids.size() == arity());
  bool same = true;
  for (std::size_t i = 0; i < kids.size() && same; ++i) same = kids[i].node_ == node_->kids[i].node_;
  if (same) return *this;
  return make(kind(), std::move(kids), node_->hints, node_->scalar, node_->annotation);
}

Kind Term::kind() const { return node_->kind; }
std::size_t Term::arity() const { return node_->kids.size(); }
const Term& Term::kid(std::size_t i) const { return node_->kids.at(i); }
const std::vector<Term>& Term::kids() const { return node_->kids; }
const std::string& Term::hint(std::size_t i) const {
  return i < node_->hints.size() ? node_->hints[i] : kEmpty;
}
bool Term::is_free_var() const { return node_->kind == Kind::Var && node_->index < 0; }
bool Term::is_bound_var() const { return node_->kind == Kind::Var && node_->index >= 0; }
const std::string& Term::name() const { return node_->name; }
int Term::index() const { return node_->index; }
Scalar Term::scalar() const { return node_->scalar; }
const std::optional<Prop>& Term::annotation() const { return node_->annotation; }
std::size_t Term::size() const { return node_->size; }
std::size_t Term::hash() const { return node_->hash; }

int Term::loose() const { return node_->loose; }
bool Term::has_free_names() const { return node_->has_free; }

namespace {

bool scalar_close(Scalar a, Scalar b, double tol) {
  if (tol <= 0.0) return a == b;
  return std::abs(a.real() - b.real()) <= tol && std::abs(a.imag() - b.imag()) <= tol;
}

bool alpha_eq_rec(const Term& t, const Term& u, double tol) {
  if (t.same_node(u)) return true;
  if (t.kind() != u.kind() || t.arity() != u.arity() || t.size() != u.size()) return false;
  if (tol <= 0.0 && t.hash() != u.hash()) return false;
  if (t.kind() == Kind::Var) return t.index() == u.index() && t.name() == u.name();
  if (t.kind() == Kind::ScalarStar || t.kind() == Kind::Prod) {
    if (!scalar_close(t.scalar(), u.scalar(), tol)) return false;
  }
  if (t.annotation().has_value() != u.annotation().has_value()) return false;
  if (t.annotation() && *t.annotation() != *u.annotation()) return false;
  for (std::size_t i = 0; i < t.arity(); ++i) {
    if (!alpha_eq_rec(t.kid(i), u.kid(i), tol)) return false;
  }
  return true;
}

// Rebuilds t bottom-up, handing every variable to on_var together with the
// number of binders crossed. Subterms for which skip() holds are kept.
template <typename VarFn, typename SkipFn>
Term map_vars(const Term& t, int depth, const VarFn& on_var, const SkipFn& skip) {
  if (skip(t, depth)) return t;
  if (t.kind() == Kind::Var) return on_var(t, depth);
  std::vector<Term> kids;
  kids.reserve(t.arity());
  for (std::size_t i = 0; i < t.arity(); ++i) {
    kids.push_back(map_vars(t.kid(i), depth + binders_at(t.kind(), i), on_var, skip));
  }
  return t.with_kids(std::move(kids));
}

Term subst_names(const Term& t, const std::map<std::string, Term>& reps) {
  return map_vars(
      t, 0,
      [&](const Term& v, int depth) {
        if (!v.is_free_var()) return v;
        auto it = reps.find(v.name());
        return it == reps.end() ? v : shift(it->second, depth, 0);
      },
      [](const Term& s, int) { return !s.has_free_names(); });
}

void collect_free(const Term& t, std::set<std::string>& out) {
  if (!t.has_free_names()) return;
  if (t.is_free_var()) {
    out.insert(t.name());
    return;
  }
  for (const auto& k : t.kids()) collect_free(k, out);
}

bool has_index_rec(const Term& t, int k) {
  if (t.loose() <= k) return false;
  if (t.kind() == Kind::Var) return t.index() == k;
  for (std::size_t i = 0; i < t.arity(); ++i) {
    if (has_index_rec(t.kid(i), k + binders_at(t.kind(), i))) return true;
  }
  return false;
}

}  // namespace

bool alpha_eq(const Term& t, const Term& u, double tolerance) {
  return alpha_eq_rec(t, u, tolerance);
}

Term shift(const Term& t, int delta, int cutoff) {
  if (delta == 0) return t;
  return map_vars(
      t, cutoff,
      [&](const Term& v, int depth) {
        if (v.is_bound_var() && v.index() >= depth) return Term::bound(v.index() + delta);
        return v;
      },
      [](const Term& s, int depth) { return s.loose() <= depth; });
}

Term substitute_env(const Term& t, int n, const std::vector<Term>& replacements, int m) {
  assert(static_cast<int>(replacements.size()) == n);
  if (n == 0 && m == 0) return t;
  return map_vars(
      t, 0,
      [&](const Term& v, int depth) {
        if (!v.is_bound_var() || v.index() < depth) return v;
        int j = v.index() - depth;
        if (j < n) return shift(replacements[j], depth, 0);
        return Term::bound(j - n + m + depth);
      },
      [](const Term& s, int depth) { return s.loose() <= depth; });
}

Term instantiate(const Term& body, const Term& u) { return substitute_env(body, 1, {u}, 0); }

Term abstract(const Term& t, const std::string& name) {
  return map_vars(
      t, 0,
      [&](const Term& v, int depth) {
        if (v.is_free_var()) return v.name() == name ? Term::bound(depth) : v;
        if (v.index() >= depth) return Term::bound(v.index() + 1);
        return v;
      },
      [](const Term& s, int depth) { return !s.has_free_names() && s.loose() <= depth; });
}

Term subst(const Term& u, const std::string& x, const Term& t) {
  return subst_names(t, {{x, u}});
}

Term pair_subst(const Term& w, const std::string& x, const std::string& y, const Term& t) {
  Term p1 = Term::and_elim(1, w, "z", Term::bound(0));
  Term p2 = Term::and_elim(2, w, "z", Term::bound(0));
  if (x == y) return subst_names(t, {{x, p1}});
  return subst_names(t, {{x, p1}, {y, p2}});
}

bool has_index(const Term& t, int k) { return has_index_rec(t, k); }

std::set<std::string> free_names(const Term& t) {
  std::set<std::string> out;
  collect_free(t, out);
  return out;
}

bool is_closed(const Term& t) { return !t.has_free_names() && t.loose() == 0; }

const Term& subterm_at(const Term& t, const Path& p) {
  const Term* cur = &t;
  for (int i : p) cur = &cur->kid(static_cast<std::size_t>(i));
  return *cur;
}

namespace {

Term replace_rec(const Term& t, const Path& p, std::size_t at, const Term& r) {
  if (at == p.size()) return r;
  std::vector<Term> kids = t.kids();
  auto i = static_cast<std::size_t>(p[at]);
  kids.at(i) = replace_rec(kids[i], p, at + 1, r);
  return t.with_kids(std::move(kids));
}

}  // namespace

Term replace_at(const Term& t, const Path& p, const Term& replacement) {
  return replace_rec(t, p, 0, replacement);
}

int binder_depth(const Term& t, const Path& p) {
  int d = 0;
  const Term* cur = &t;
  for (int i : p) {
    d += binders_at(cur->kind(), static_cast<std::size_t>(i));
    cur = &cur->kid(static_cast<std::size_t>(i));
  }
  return d;
}

namespace build {

Term var(const std::string& x) { return Term::free(x); }

Term lam(const std::string& x, std::optional<Prop> annotation, const Term& body) {
  return Term::lam(x, std::move(annotation), abstract(body, x));
}

Term and1(const Term& t, const std::string& x, const Term& body) {
  return Term::and_elim(1, t, x, abstract(body, x));
}

Term and2(const Term& t, const std::string& x, const Term& body) {
  return Term::and_elim(2, t, x, abstract(body, x));
}

Term case_of(const Term& t, const std::string& x, const Term& u, const std::string& y,
             const Term& v) {
  return Term::case_of(t, x, abstract(u, x), y, abstract(v, y));
}

Term case_nd(const Term& t, const std::string& x, const Term& u, const std::string& y,
             const Term& v) {
  return Term::case_nd(t, x, abstract(u, x), y, abstract(v, y));
}

Term inlr3(const Term& t, const std::string& x, const Term& u, const std::string& y,
           const Term& v) {
  return Term::inlr3(t, x, abstract(u, x), y, abstract(v, y));
}

}  // namespace build

namespace {

bool outside_rec(Calculus c, const Term& t, Path& path) {
  if (!allows(c, t.kind())) return true;
  if (t.annotation() && !allows(c, *t.annotation())) return true;
  for (std::size_t i = 0; i < t.arity(); ++i) {
    path.push_back(static_cast<int>(i));
    if (outside_rec(c, t.kid(i), path)) return true;
    path.pop_back();
  }
  return false;
}

}  // namespace

std::optional<Path> first_outside(Calculus c, const Term& t) {
  Path path;
  if (outside_rec(c, t, path)) return path;
  return std::nullopt;
}

}  // namespace inlr
