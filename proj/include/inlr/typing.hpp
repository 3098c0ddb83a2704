#pragma once

#include <optional>
#include <string>
#include <vector>

#include "inlr/calculus.hpp"
#include "inlr/prop.hpp"
#include "inlr/term.hpp"

namespace inlr {

enum class TypeErrorKind {
  UnboundVar,
  Mismatch,
  NotAFunction,
  LinearUnused,
  LinearReused,
  ConstructorOutsideCalculus,
  AnnotationRequired,
};

std::string_view to_string(TypeErrorKind k);

struct TypeError {
  TypeErrorKind kind;
  Path path;
  std::string expected;
  std::string found;
  std::vector<std::string> vars;  // LinearUnused / LinearReused / UnboundVar

  // `path: kind: detail`
  std::string render() const;
  // {"path": [...], "kind": "...", "expected": ..., "found": ...}
  std::string json() const;
};

std::string render_path(const Path& p);

class TypeResult {
 public:
  TypeResult(Prop p) : prop_(std::move(p)) {}
  TypeResult(TypeError e) : error_(std::move(e)) {}

  bool ok() const { return prop_.has_value(); }
  explicit operator bool() const { return ok(); }
  const Prop& prop() const { return *prop_; }
  const TypeError& error() const { return *error_; }

 private:
  std::optional<Prop> prop_;
  std::optional<TypeError> error_;
};

// Propositions left undetermined by the term (say, the right disjunct of
// inl(star)) come back as unification variables ?0, ?1, ... numbered in
// order of first occurrence.
TypeResult infer_iplus(const Context& ctx, const Term& t);
TypeResult infer_linear(const Context& ctx, const Term& t);
TypeResult infer_cc(const Context& ctx, const Term& t);
TypeResult infer(Calculus c, const Context& ctx, const Term& t);

// Succeeds with `expected` (instantiated) when t's proposition unifies with it.
TypeResult check(Calculus c, const Context& ctx, const Term& t, const Prop& expected);

// t checks at `a` with the unification variables of `a` held fixed, so that
// t is at least as general as a.
bool has_type(Calculus c, const Context& ctx, const Term& t, const Prop& a);

// Equality up to a consistent renaming of unification variables.
bool same_up_to_metas(const Prop& a, const Prop& b);

}  // namespace inlr
