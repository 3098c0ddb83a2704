#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "inlr/calculus.hpp"
#include "inlr/prop.hpp"

namespace inlr {

using Scalar = std::complex<double>;

enum class Kind : std::uint8_t {
  Var,
  Sum,         // t (+) u
  Prod,        // a . t (scalar product)
  Star,        // star
  ScalarStar,  // a . star
  TopElim,
  BotElim,
  Lam,
  App,
  Pair,
  AndElim1,
  AndElim2,
  Inl,
  Inr,
  Inlr2,  // inlr(t, u)
  Inlr3,  // inlr(t, x. u, y. v), the binder form of the cc calculus
  Case,
  CaseNd,
  OneElim,
};

std::string_view kind_name(Kind k);

// Child indices from the root.
using Path = std::vector<int>;

// Immutable proof-term. Bound variables are de Bruijn indices, free
// variables are names; binders keep a name hint used only for printing, so
// structural equality is alpha-equivalence.
class Term {
 public:
  Term();  // star
  static Term free(std::string name);
  static Term bound(int index);
  static Term star();
  static Term scalar_star(Scalar a);
  static Term sum(Term t, Term u);
  static Term prod(Scalar a, Term t);
  static Term top_elim(Term t, Term u);
  static Term bot_elim(Prop result, Term t);
  // `body` is already in de Bruijn form: index 0 refers to this binder.
  static Term lam(std::string hint, std::optional<Prop> annotation, Term body);
  static Term app(Term f, Term a);
  static Term pair(Term t, Term u);
  static Term and_elim(int which, Term t, std::string hint, Term body);
  static Term inl(Term t);
  static Term inr(Term t);
  static Term inlr(Term t, Term u);
  static Term inlr3(Term t, std::string x, Term u, std::string y, Term v);
  static Term case_of(Term t, std::string x, Term u, std::string y, Term v);
  static Term case_nd(Term t, std::string x, Term u, std::string y, Term v);
  static Term one_elim(Term t, Term u);

  // Generic rebuild with the same head (scalar, annotation, hints, name)
  // and new children.
  Term with_kids(std::vector<Term> kids) const;

  Kind kind() const;
  std::size_t arity() const;
  const Term& kid(std::size_t i) const;
  const std::vector<Term>& kids() const;
  // Binder name hint of child i (empty if child i is not under a binder).
  const std::string& hint(std::size_t i) const;
  bool is_free_var() const;
  bool is_bound_var() const;
  const std::string& name() const;  // free variable name
  int index() const;                // bound variable index
  Scalar scalar() const;
  const std::optional<Prop>& annotation() const;  // Lam annotation or BotElim result
  std::size_t size() const;
  std::size_t hash() const;  // insensitive to binder hints
  // 1 + largest dangling index (0 when there is none).
  int loose() const;
  bool has_free_names() const;

  bool same_node(const Term& other) const { return node_ == other.node_; }

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node);
  static Term make(Kind k, std::vector<Term> kids, std::vector<std::string> hints = {},
                   Scalar a = {}, std::optional<Prop> annotation = std::nullopt);
  std::shared_ptr<const Node> node_;
};

// Number of binders child i of a `k` node sits under (0 or 1).
int binders_at(Kind k, std::size_t child);

// Structural equality, i.e. alpha-equivalence. With `tolerance` > 0,
// scalars compare within that absolute distance.
bool alpha_eq(const Term& t, const Term& u, double tolerance = 0.0);

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};
struct TermAlphaEq {
  bool operator()(const Term& a, const Term& b) const { return alpha_eq(a, b); }
};

// Shift dangling indices (>= cutoff) by `delta`.
Term shift(const Term& t, int delta, int cutoff = 0);

// `t` lives under `n` binders that are removed and replaced by `m` new ones.
// Index j < n becomes replacements[j] (expressed in the new scope); indices
// >= n are renumbered to j - n + m.
Term substitute_env(const Term& t, int n, const std::vector<Term>& replacements, int m);

// (u/0)body for a body under one binder.
Term instantiate(const Term& body, const Term& u);

// Turn free occurrences of `name` into index 0 of a new enclosing binder.
Term abstract(const Term& t, const std::string& name);

// Capture-avoiding substitution of u for the free variable x.
Term subst(const Term& u, const std::string& x, const Term& t);

// (w/<x,y>)t := (and1(w, z. z)/x, and2(w, z. z)/y) t, simultaneous.
Term pair_subst(const Term& w, const std::string& x, const std::string& y, const Term& t);

// Does dangling index k occur in t?
bool has_index(const Term& t, int k);
std::set<std::string> free_names(const Term& t);
bool is_closed(const Term& t);  // no free names and no dangling indices

const Term& subterm_at(const Term& t, const Path& p);
Term replace_at(const Term& t, const Path& p, const Term& replacement);
// Number of binders crossed when descending along p.
int binder_depth(const Term& t, const Path& p);

// Smart constructors taking named binders; the names are abstracted.
namespace build {
Term var(const std::string& x);
Term lam(const std::string& x, std::optional<Prop> annotation, const Term& body);
Term and1(const Term& t, const std::string& x, const Term& body);
Term and2(const Term& t, const std::string& x, const Term& body);
Term case_of(const Term& t, const std::string& x, const Term& u, const std::string& y,
             const Term& v);
Term case_nd(const Term& t, const std::string& x, const Term& u, const std::string& y,
             const Term& v);
Term inlr3(const Term& t, const std::string& x, const Term& u, const std::string& y,
           const Term& v);
}  // namespace build

// The calculi each constructor belongs to, checked over the whole term.
// Returns the first offending path, if any.
std::optional<Path> first_outside(Calculus c, const Term& t);

}  // namespace inlr
