#include "inlr/prop.hpp"

#include <cassert>
#include <functional>

namespace inlr {

struct Prop::Node {
  PropKind kind;
  std::string name;
  int meta = -1;
  std::shared_ptr<const Node> left;
  std::shared_ptr<const Node> right;
  std::size_t hash = 0;
  std::size_t size = 1;
  Node(PropKind k) : kind(k) {}
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

bool binary_kind(PropKind k) {
  switch (k) {
    case PropKind::Impl:
    case PropKind::Conj:
    case PropKind::Disj:
    case PropKind::Lollipop:
    case PropKind::OPlus:
      return true;
    default:
      return false;
  }
}

}  // namespace

Prop::Prop(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Prop::Prop() : Prop(top()) {}

Prop Prop::top() {
  static const Prop p{std::make_shared<const Node>(PropKind::Top)};
  return p;
}

Prop Prop::bot() {
  static const Prop p{[] {
    auto n = std::make_shared<Node>(PropKind::Bot);
    n->hash = 1;
    return std::shared_ptr<const Node>(n);
  }()};
  return p;
}

Prop Prop::one() {
  static const Prop p{[] {
    auto n = std::make_shared<Node>(PropKind::One);
    n->hash = 2;
    return std::shared_ptr<const Node>(n);
  }()};
  return p;
}

Prop Prop::atom(std::string name) {
  auto n = std::make_shared<Node>(PropKind::Atom);
  n->hash = mix(3, std::hash<std::string>{}(name));
  n->name = std::move(name);
  return Prop(n);
}

Prop Prop::meta(int id) {
  auto n = std::make_shared<Node>(PropKind::Meta);
  n->meta = id;
  n->hash = mix(4, static_cast<std::size_t>(id));
  return Prop(n);
}

Prop Prop::binary(PropKind kind, Prop a, Prop b) {
  assert(binary_kind(kind));
  auto n = std::make_shared<Node>(kind);
  n->hash = mix(mix(static_cast<std::size_t>(kind) * 31 + 7, a.hash()), b.hash());
  n->size = 1 + a.size() + b.size();
  n->left = std::move(a.node_);
  n->right = std::move(b.node_);
  return Prop(n);
}

Prop Prop::impl(Prop a, Prop b) { return binary(PropKind::Impl, std::move(a), std::move(b)); }
Prop Prop::conj(Prop a, Prop b) { return binary(PropKind::Conj, std::move(a), std::move(b)); }
Prop Prop::disj(Prop a, Prop b) { return binary(PropKind::Disj, std::move(a), std::move(b)); }
Prop Prop::lollipop(Prop a, Prop b) {
  return binary(PropKind::Lollipop, std::move(a), std::move(b));
}
Prop Prop::oplus(Prop a, Prop b) { return binary(PropKind::OPlus, std::move(a), std::move(b)); }

PropKind Prop::kind() const { return node_->kind; }
bool Prop::is_binary() const { return binary_kind(node_->kind); }
Prop Prop::left() const { return Prop(node_->left); }
Prop Prop::right() const { return Prop(node_->right); }
const std::string& Prop::name() const { return node_->name; }
int Prop::meta_id() const { return node_->meta; }
std::size_t Prop::hash() const { return node_->hash; }
std::size_t Prop::size() const { return node_->size; }

bool operator==(const Prop& a, const Prop& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.hash() != b.hash()) return false;
  switch (a.kind()) {
    case PropKind::Atom:
      return a.name() == b.name();
    case PropKind::Meta:
      return a.meta_id() == b.meta_id();
    case PropKind::Top:
    case PropKind::Bot:
    case PropKind::One:
      return true;
    default:
      return a.left() == b.left() && a.right() == b.right();
  }
}

namespace {

const char* connective(PropKind k) {
  switch (k) {
    case PropKind::Impl:
      return " => ";
    case PropKind::Conj:
      return " /\\ ";
    case PropKind::Disj:
      return " \\/ ";
    case PropKind::Lollipop:
      return " -o ";
    case PropKind::OPlus:
      return " (+) ";
    default:
      return "";
  }
}

bool is_arrow(PropKind k) { return k == PropKind::Impl || k == PropKind::Lollipop; }

void render(const Prop& p, std::string& out) {
  switch (p.kind()) {
    case PropKind::Top:
      out += "Top";
      return;
    case PropKind::Bot:
      out += "Bot";
      return;
    case PropKind::One:
      out += "One";
      return;
    case PropKind::Atom:
      out += p.name();
      return;
    case PropKind::Meta:
      out += "?" + std::to_string(p.meta_id());
      return;
    default:
      break;
  }
  auto operand = [&](const Prop& q, bool allow_bare) {
    if (q.is_binary() && !allow_bare) {
      out += '(';
      render(q, out);
      out += ')';
    } else {
      render(q, out);
    }
  };
  operand(p.left(), false);
  out += connective(p.kind());
  operand(p.right(), is_arrow(p.kind()) && p.right().kind() == p.kind());
}

}  // namespace

std::string to_string(const Prop& p) {
  std::string out;
  render(p, out);
  return out;
}

bool is_vector_prop(const Prop& p) {
  if (p.kind() == PropKind::One) return true;
  if (p.kind() == PropKind::OPlus) return is_vector_prop(p.left()) && is_vector_prop(p.right());
  return false;
}

}  // namespace inlr
