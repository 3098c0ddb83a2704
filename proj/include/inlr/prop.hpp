#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace inlr {

enum class PropKind : std::uint8_t {
  Top,
  Bot,
  Impl,
  Conj,
  Disj,
  One,
  Lollipop,
  OPlus,
  Atom,
  // Unification variable; only produced by the type checkers.
  Meta,
};

// Immutable proposition tree with structural equality.
class Prop {
 public:
  Prop();  // Top

  static Prop top();
  static Prop bot();
  static Prop one();
  static Prop atom(std::string name);
  static Prop meta(int id);
  static Prop impl(Prop a, Prop b);
  static Prop conj(Prop a, Prop b);
  static Prop disj(Prop a, Prop b);
  static Prop lollipop(Prop a, Prop b);
  static Prop oplus(Prop a, Prop b);
  static Prop binary(PropKind kind, Prop a, Prop b);

  PropKind kind() const;
  bool is_binary() const;
  Prop left() const;
  Prop right() const;
  const std::string& name() const;
  int meta_id() const;
  std::size_t hash() const;
  // Number of connectives and atoms.
  std::size_t size() const;

  friend bool operator==(const Prop& a, const Prop& b);
  friend bool operator!=(const Prop& a, const Prop& b) { return !(a == b); }

 private:
  struct Node;
  explicit Prop(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

// Surface syntax: `A => B`, `A /\ B`, `A \/ B`, `A -o B`, `A (+) B`.
// Binary operands are parenthesized, except the right operand of an arrow
// that is itself an arrow.
std::string to_string(const Prop& p);

// Vector propositions: built from One and (+) only.
bool is_vector_prop(const Prop& p);

// Named hypotheses in order.
using Context = std::vector<std::pair<std::string, Prop>>;

}  // namespace inlr
