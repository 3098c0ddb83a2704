#include "inlr/print.hpp"

#include <charconv>
#include <cmath>
#include <set>

namespace inlr {

namespace {

std::string real_literal(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  std::string s(buf, res.ptr);
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

class Printer {
 public:
  explicit Printer(const Term& root) : globals_(free_names(root)) {}

  void term(const Term& t, std::string& out) {
    switch (t.kind()) {
      case Kind::Var:
        if (t.is_free_var()) {
          out += t.name();
        } else if (t.index() < static_cast<int>(scope_.size())) {
          out += scope_[scope_.size() - 1 - t.index()];
        } else {
          out += "#" + std::to_string(t.index() - static_cast<int>(scope_.size()));
        }
        return;
      case Kind::Star:
        out += "star";
        return;
      case Kind::ScalarStar:
        out += print_scalar(t.scalar());
        out += " . star";
        return;
      case Kind::Sum:
        call("sum", t, out);
        return;
      case Kind::Prod:
        out += "prod(";
        out += print_scalar(t.scalar());
        out += ", ";
        term(t.kid(0), out);
        out += ')';
        return;
      case Kind::TopElim:
        call("top_elim", t, out);
        return;
      case Kind::OneElim:
        call("one_elim", t, out);
        return;
      case Kind::Pair:
        call("pair", t, out);
        return;
      case Kind::Inl:
        call("inl", t, out);
        return;
      case Kind::Inr:
        call("inr", t, out);
        return;
      case Kind::Inlr2:
        call("inlr", t, out);
        return;
      case Kind::BotElim:
        out += "bot_elim[";
        out += to_string(*t.annotation());
        out += "](";
        term(t.kid(0), out);
        out += ')';
        return;
      case Kind::Lam: {
        out += "lam ";
        std::string x = fresh(t.hint(0));
        out += x;
        if (t.annotation()) {
          out += ':';
          out += to_string(*t.annotation());
        }
        out += ". ";
        under(x, t.kid(0), out);
        return;
      }
      case Kind::App: {
        bool paren_f = t.kid(0).kind() == Kind::Lam;
        const Term& a = t.kid(1);
        bool paren_a = a.kind() == Kind::App || a.kind() == Kind::Lam || a.kind() == Kind::ScalarStar;
        wrap(t.kid(0), paren_f, out);
        out += ' ';
        wrap(a, paren_a, out);
        return;
      }
      case Kind::AndElim1:
      case Kind::AndElim2:
        out += t.kind() == Kind::AndElim1 ? "and1(" : "and2(";
        term(t.kid(0), out);
        out += ", ";
        abstraction(t, 1, out);
        out += ')';
        return;
      case Kind::Case:
      case Kind::CaseNd:
      case Kind::Inlr3:
        out += t.kind() == Kind::Case ? "case(" : t.kind() == Kind::CaseNd ? "case_nd(" : "inlr(";
        term(t.kid(0), out);
        out += ", ";
        abstraction(t, 1, out);
        out += ", ";
        abstraction(t, 2, out);
        out += ')';
        return;
    }
  }

 private:
  void call(const char* head, const Term& t, std::string& out) {
    out += head;
    out += '(';
    for (std::size_t i = 0; i < t.arity(); ++i) {
      if (i) out += ", ";
      term(t.kid(i), out);
    }
    out += ')';
  }

  void wrap(const Term& t, bool paren, std::string& out) {
    if (paren) out += '(';
    term(t, out);
    if (paren) out += ')';
  }

  void abstraction(const Term& t, std::size_t i, std::string& out) {
    std::string x = fresh(t.hint(i));
    out += x;
    out += ". ";
    under(x, t.kid(i), out);
  }

  void under(const std::string& x, const Term& body, std::string& out) {
    scope_.push_back(x);
    term(body, out);
    scope_.pop_back();
  }

  std::string fresh(const std::string& hint) const {
    std::string x = hint.empty() ? "x" : hint;
    while (globals_.count(x) || in_scope(x)) x += '\'';
    return x;
  }

  bool in_scope(const std::string& x) const {
    for (const auto& s : scope_) {
      if (s == x) return true;
    }
    return false;
  }

  std::set<std::string> globals_;
  std::vector<std::string> scope_;
};

}  // namespace

std::string print_scalar(Scalar a) {
  if (a.imag() == 0.0 && !std::signbit(a.imag())) return real_literal(a.real());
  return "(" + real_literal(a.real()) + ", " + real_literal(a.imag()) + ")";
}

std::string print_term(const Term& t) {
  std::string out;
  Printer(t).term(t, out);
  return out;
}

}  // namespace inlr
