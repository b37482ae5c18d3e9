// Helpers shared by the unit tests and the acceptance binary.
#pragma once

#include "mgl/numeric.hpp"

#include <algorithm>
#include <string>
#include <string_view>

namespace mgl::testing {

// Number of digits after the decimal point in a decimal literal.
inline int decimals(std::string_view text) {
  const auto dot = text.find('.');
  return dot == std::string_view::npos ? 0 : static_cast<int>(text.size() - dot - 1);
}

// True when x agrees with a published decimal value to all of its printed
// digits, accepting either rounding or truncation of the last one.
inline bool matches_published(const Real& x, std::string_view text) {
  PrecisionScope scope(std::max<unsigned>(40, static_cast<unsigned>(text.size()) + 20));
  const Real ref(std::string{text});
  return abs(to_current(x) - ref) <= pow10(-decimals(text));
}

}  // namespace mgl::testing
