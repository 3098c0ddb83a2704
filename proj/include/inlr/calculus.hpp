#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "inlr/prop.hpp"

namespace inlr {

enum class Kind : std::uint8_t;

// The three calculi: intuitionistic with sum (iplus), linear with scalars
// and measurement (quantum), and commuting-cut without interstitial rules (cc).
enum class Calculus : std::uint8_t { IPlus, Quantum, CC };

std::string_view to_string(Calculus c);
std::optional<Calculus> calculus_from_string(std::string_view s);

bool allows(Calculus c, Kind k);
bool allows(Calculus c, PropKind k);
// True iff every connective of `p` belongs to the calculus.
bool allows(Calculus c, const Prop& p);

}  // namespace inlr
