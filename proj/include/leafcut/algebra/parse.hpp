#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "leafcut/algebra/poly.hpp"

namespace leafcut {

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Parses infix polynomial text ("x^2 - 3/2*y", "(x+1)*(y-2)") and the
/// canonical serialization produced by Poly::to_string. Division is allowed
/// only by nonzero constants. Unknown identifiers raise RingMismatch.
Poly parse_poly(const std::string& text, const RingPtr& ring);

std::vector<Poly> parse_polys(const std::vector<std::string>& texts, const RingPtr& ring);

}  // namespace leafcut
