#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "inlr/calculus.hpp"
#include "inlr/prop.hpp"
#include "inlr/term.hpp"

namespace inlr {

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(int line, int column, const std::string& what);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// A well-formed construct that the selected calculus does not have.
class CalculusError : public SyntaxError {
 public:
  using SyntaxError::SyntaxError;
};

Term parse_term(std::string_view text, Calculus c);
Prop parse_prop(std::string_view text, Calculus c);

// "x:A, y:B"; empty text gives the empty context.
Context parse_context(std::string_view text, Calculus c);

}  // namespace inlr
