#include "inlr/parse.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <set>

namespace inlr {

SyntaxError::SyntaxError(int line, int column, const std::string& what)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

enum class Tok {
  Ident,
  Number,
  LParen,
  RParen,
  LBrack,
  RBrack,
  Comma,
  Dot,
  Colon,
  Arrow,     // =>
  Lolli,     // -o
  And,       // /\.
  Or,        // \/
  OPlus,     // (+)
  End,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

const std::set<std::string, std::less<>> kKeywords = {
    "lam",  "star", "sum",  "prod",    "pair",     "and1",     "and2",     "inl",
    "inr",  "inlr", "case", "case_nd", "top_elim", "bot_elim", "one_elim", "app",
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  auto is_digit = [&](std::size_t k) {
    return k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]));
  };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (s.substr(i, 2) == "--") {
      while (i < s.size() && s[i] != '\n') advance(1);
      continue;
    }
    int l = line;
    int cl = col;
    auto push = [&](Tok k, std::size_t n) {
      out.push_back({k, std::string(s.substr(i, n)), l, cl});
      advance(n);
    };
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_' ||
                              s[j] == '\'')) {
        ++j;
      }
      push(Tok::Ident, j - i);
      continue;
    }
    if (is_digit(i) || (c == '-' && is_digit(i + 1))) {
      std::size_t j = i + 1;
      while (is_digit(j)) ++j;
      if (j < s.size() && s[j] == '.' && is_digit(j + 1)) {
        ++j;
        while (is_digit(j)) ++j;
      }
      if (j < s.size() && (s[j] == 'e' || s[j] == 'E')) {
        std::size_t k = j + 1;
        if (k < s.size() && (s[k] == '+' || s[k] == '-')) ++k;
        if (is_digit(k)) {
          j = k;
          while (is_digit(j)) ++j;
        }
      }
      push(Tok::Number, j - i);
      continue;
    }
    if (s.substr(i, 3) == "(+)") {
      push(Tok::OPlus, 3);
      continue;
    }
    if (s.substr(i, 2) == "=>") {
      push(Tok::Arrow, 2);
      continue;
    }
    if (s.substr(i, 2) == "-o") {
      push(Tok::Lolli, 2);
      continue;
    }
    if (s.substr(i, 2) == "/\\") {
      push(Tok::And, 2);
      continue;
    }
    if (s.substr(i, 2) == "\\/") {
      push(Tok::Or, 2);
      continue;
    }
    switch (c) {
      case '(': push(Tok::LParen, 1); continue;
      case ')': push(Tok::RParen, 1); continue;
      case '[': push(Tok::LBrack, 1); continue;
      case ']': push(Tok::RBrack, 1); continue;
      case ',': push(Tok::Comma, 1); continue;
      case '.': push(Tok::Dot, 1); continue;
      case ':': push(Tok::Colon, 1); continue;
      default: break;
    }
    throw SyntaxError(line, col, std::string("unexpected character '") + c + "'");
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, Calculus c) : toks_(lex(text)), calc_(c) {}

  Term whole_term() {
    Term t = term();
    expect(Tok::End, "end of input");
    return t;
  }

  Prop whole_prop() {
    Prop p = prop();
    expect(Tok::End, "end of input");
    return p;
  }

  Context whole_context() {
    Context ctx;
    std::set<std::string> seen;
    if (peek().kind == Tok::End) return ctx;
    while (true) {
      const Token& x = expect(Tok::Ident, "variable name");
      if (!seen.insert(x.text).second) {
        throw SyntaxError(x.line, x.column, "duplicate hypothesis " + x.text);
      }
      expect(Tok::Colon, "':'");
      ctx.emplace_back(x.text, prop());
      if (peek().kind != Tok::Comma) break;
      next();
    }
    expect(Tok::End, "end of input");
    return ctx;
  }

 private:
  const Token& peek(std::size_t k = 0) const {
    return toks_[std::min(pos_ + k, toks_.size() - 1)];
  }
  const Token& next() {
    const Token& t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }
  [[noreturn]] void fail(const Token& t, const std::string& what) const {
    std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw SyntaxError(t.line, t.column, "expected " + what + ", found " + found);
  }
  const Token& expect(Tok k, const std::string& what) {
    if (peek().kind != k) fail(peek(), what);
    return next();
  }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    next();
    return true;
  }

  void gate(const Token& at, Kind k) const {
    if (!allows(calc_, k)) {
      throw CalculusError(at.line, at.column,
                          std::string(kind_name(k)) + " is not a constructor of the " +
                              std::string(to_string(calc_)) + " calculus");
    }
  }
  void gate(const Token& at, PropKind k, std::string_view what) const {
    if (!allows(calc_, k)) {
      throw CalculusError(at.line, at.column,
                          std::string(what) + " is not a connective of the " +
                              std::string(to_string(calc_)) + " calculus");
    }
  }

  // Propositions: arrows (right-assoc) < \/ and (+) (right-assoc) < /\.
  Prop prop() {
    Prop left = prop_disj();
    const Token& t = peek();
    if (t.kind == Tok::Arrow || t.kind == Tok::Lolli) {
      next();
      PropKind k = t.kind == Tok::Arrow ? PropKind::Impl : PropKind::Lollipop;
      gate(t, k, t.text);
      return Prop::binary(k, left, prop());
    }
    return left;
  }
  Prop prop_disj() {
    Prop left = prop_conj();
    const Token& t = peek();
    if (t.kind == Tok::Or || t.kind == Tok::OPlus) {
      next();
      PropKind k = t.kind == Tok::Or ? PropKind::Disj : PropKind::OPlus;
      gate(t, k, t.text);
      return Prop::binary(k, left, prop_disj());
    }
    return left;
  }
  Prop prop_conj() {
    Prop left = prop_atom();
    const Token& t = peek();
    if (t.kind == Tok::And) {
      next();
      gate(t, PropKind::Conj, t.text);
      return Prop::conj(left, prop_conj());
    }
    return left;
  }
  Prop prop_atom() {
    const Token& t = next();
    if (t.kind == Tok::LParen) {
      Prop p = prop();
      expect(Tok::RParen, "')'");
      return p;
    }
    if (t.kind != Tok::Ident) fail(t, "proposition");
    if (t.text == "Top") {
      gate(t, PropKind::Top, t.text);
      return Prop::top();
    }
    if (t.text == "Bot") {
      gate(t, PropKind::Bot, t.text);
      return Prop::bot();
    }
    if (t.text == "One") {
      gate(t, PropKind::One, t.text);
      return Prop::one();
    }
    return Prop::atom(t.text);
  }

  double number() {
    const Token& t = expect(Tok::Number, "number");
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
      throw SyntaxError(t.line, t.column, "bad number '" + t.text + "'");
    }
    return v;
  }

  bool complex_ahead() const {
    return peek().kind == Tok::LParen && peek(1).kind == Tok::Number && peek(2).kind == Tok::Comma;
  }

  Scalar scalar() {
    if (complex_ahead()) {
      next();
      double re = number();
      expect(Tok::Comma, "','");
      double im = number();
      expect(Tok::RParen, "')'");
      return {re, im};
    }
    return {number(), 0.0};
  }

  std::string binder_name() {
    const Token& t = expect(Tok::Ident, "binder name");
    if (kKeywords.count(t.text)) fail(t, "binder name");
    return t.text;
  }

  // x. u
  std::pair<std::string, Term> abstraction() {
    std::string x = binder_name();
    expect(Tok::Dot, "'.'");
    return {x, term()};
  }

  Term term() {
    if (peek().kind == Tok::Ident && peek().text == "lam") {
      const Token& at = next();
      gate(at, Kind::Lam);
      std::string x = binder_name();
      std::optional<Prop> ann;
      if (accept(Tok::Colon)) ann = prop();
      expect(Tok::Dot, "'.'");
      return build::lam(x, ann, term());
    }
    Term head = atom();
    while (starts_atom()) {
      const Token& at = peek();
      gate(at, Kind::App);
      head = Term::app(head, atom());
    }
    if (peek().kind == Tok::Ident && peek().text == "lam") {
      const Token& at = peek();
      gate(at, Kind::App);
      head = Term::app(head, term());
    }
    return head;
  }

  bool starts_atom() const {
    const Token& t = peek();
    if (t.kind == Tok::LParen || t.kind == Tok::Number) return true;
    return t.kind == Tok::Ident && t.text != "lam";
  }

  Term args1(const Token& at, Kind k) {
    gate(at, k);
    expect(Tok::LParen, "'('");
    Term t = term();
    expect(Tok::RParen, "')'");
    return t;
  }

  std::pair<Term, Term> args2(const Token& at, Kind k) {
    gate(at, k);
    expect(Tok::LParen, "'('");
    Term t = term();
    expect(Tok::Comma, "','");
    Term u = term();
    expect(Tok::RParen, "')'");
    return {t, u};
  }

  Term atom() {
    if (complex_ahead() || peek().kind == Tok::Number) {
      const Token& at = peek();
      Scalar a = scalar();
      expect(Tok::Dot, "'.'");
      const Token& s = expect(Tok::Ident, "'star'");
      if (s.text != "star") fail(s, "'star'");
      gate(at, Kind::ScalarStar);
      return Term::scalar_star(a);
    }
    const Token& t = next();
    if (t.kind == Tok::LParen) {
      Term inner = term();
      expect(Tok::RParen, "')'");
      return inner;
    }
    if (t.kind != Tok::Ident) fail(t, "term");
    const std::string& w = t.text;
    if (w == "star") {
      gate(t, Kind::Star);
      return Term::star();
    }
    if (w == "sum") {
      auto [a, b] = args2(t, Kind::Sum);
      return Term::sum(a, b);
    }
    if (w == "prod") {
      gate(t, Kind::Prod);
      expect(Tok::LParen, "'('");
      Scalar a = scalar();
      expect(Tok::Comma, "','");
      Term u = term();
      expect(Tok::RParen, "')'");
      return Term::prod(a, u);
    }
    if (w == "app") {
      auto [a, b] = args2(t, Kind::App);
      return Term::app(a, b);
    }
    if (w == "pair") {
      auto [a, b] = args2(t, Kind::Pair);
      return Term::pair(a, b);
    }
    if (w == "top_elim") {
      auto [a, b] = args2(t, Kind::TopElim);
      return Term::top_elim(a, b);
    }
    if (w == "one_elim") {
      auto [a, b] = args2(t, Kind::OneElim);
      return Term::one_elim(a, b);
    }
    if (w == "bot_elim") {
      gate(t, Kind::BotElim);
      expect(Tok::LBrack, "'['");
      Prop p = prop();
      expect(Tok::RBrack, "']'");
      expect(Tok::LParen, "'('");
      Term u = term();
      expect(Tok::RParen, "')'");
      return Term::bot_elim(p, u);
    }
    if (w == "inl") return Term::inl(args1(t, Kind::Inl));
    if (w == "inr") return Term::inr(args1(t, Kind::Inr));
    if (w == "and1" || w == "and2") {
      gate(t, w == "and1" ? Kind::AndElim1 : Kind::AndElim2);
      expect(Tok::LParen, "'('");
      Term s = term();
      expect(Tok::Comma, "','");
      auto [x, body] = abstraction();
      expect(Tok::RParen, "')'");
      return w == "and1" ? build::and1(s, x, body) : build::and2(s, x, body);
    }
    if (w == "case" || w == "case_nd") {
      gate(t, w == "case" ? Kind::Case : Kind::CaseNd);
      expect(Tok::LParen, "'('");
      Term s = term();
      expect(Tok::Comma, "','");
      auto [x, u] = abstraction();
      expect(Tok::Comma, "','");
      auto [y, v] = abstraction();
      expect(Tok::RParen, "')'");
      return w == "case" ? build::case_of(s, x, u, y, v) : build::case_nd(s, x, u, y, v);
    }
    if (w == "inlr") {
      expect(Tok::LParen, "'('");
      Term s = term();
      expect(Tok::Comma, "','");
      bool binder_form = peek().kind == Tok::Ident && peek(1).kind == Tok::Dot;
      if (!binder_form) {
        gate(t, Kind::Inlr2);
        Term u = term();
        expect(Tok::RParen, "')'");
        return Term::inlr(s, u);
      }
      gate(t, Kind::Inlr3);
      auto [x, u] = abstraction();
      expect(Tok::Comma, "','");
      auto [y, v] = abstraction();
      expect(Tok::RParen, "')'");
      return build::inlr3(s, x, u, y, v);
    }
    if (kKeywords.count(w)) fail(t, "term");
    return Term::free(w);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Calculus calc_;
};

}  // namespace

Term parse_term(std::string_view text, Calculus c) { return Parser(text, c).whole_term(); }

Prop parse_prop(std::string_view text, Calculus c) { return Parser(text, c).whole_prop(); }

Context parse_context(std::string_view text, Calculus c) {
  return Parser(text, c).whole_context();
}

}  // namespace inlr
