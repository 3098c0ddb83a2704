#include "inlr/calculus.hpp"

#include "inlr/term.hpp"

namespace inlr {

std::string_view to_string(Calculus c) {
  switch (c) {
    case Calculus::IPlus: return "iplus";
    case Calculus::Quantum: return "quantum";
    case Calculus::CC: return "cc";
  }
  return "?";
}

std::optional<Calculus> calculus_from_string(std::string_view s) {
  if (s == "iplus") return Calculus::IPlus;
  if (s == "quantum") return Calculus::Quantum;
  if (s == "cc") return Calculus::CC;
  return std::nullopt;
}

bool allows(Calculus c, Kind k) {
  switch (k) {
    case Kind::Var:
    case Kind::Lam:
    case Kind::App:
    case Kind::Inl:
    case Kind::Inr:
    case Kind::Case:
      return true;
    case Kind::Sum:
      return c != Calculus::CC;
    case Kind::Inlr2:
      return c != Calculus::CC;
    case Kind::Star:
    case Kind::TopElim:
    case Kind::BotElim:
    case Kind::Pair:
    case Kind::AndElim1:
    case Kind::AndElim2:
      return c != Calculus::Quantum;
    case Kind::Prod:
    case Kind::ScalarStar:
    case Kind::OneElim:
    case Kind::CaseNd:
      return c == Calculus::Quantum;
    case Kind::Inlr3:
      return c == Calculus::CC;
  }
  return false;
}

bool allows(Calculus c, PropKind k) {
  switch (k) {
    case PropKind::Atom:
    case PropKind::Meta:
      return true;
    case PropKind::Top:
    case PropKind::Bot:
    case PropKind::Impl:
    case PropKind::Conj:
    case PropKind::Disj:
      return c != Calculus::Quantum;
    case PropKind::One:
    case PropKind::Lollipop:
    case PropKind::OPlus:
      return c == Calculus::Quantum;
  }
  return false;
}

bool allows(Calculus c, const Prop& p) {
  if (!allows(c, p.kind())) return false;
  if (p.is_binary()) return allows(c, p.left()) && allows(c, p.right());
  return true;
}

}  // namespace inlr
