#pragma once

#include <string>

#include "inlr/term.hpp"

namespace inlr {

// Surface syntax accepted by parse_term. Bound names come from the binder
// hints, primed where needed to avoid capture.
std::string print_term(const Term& t);

// Scalar literal: `R` when the imaginary part is zero, `(R, I)` otherwise.
std::string print_scalar(Scalar a);

}  // namespace inlr
