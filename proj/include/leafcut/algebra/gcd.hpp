#pragma once

#include <optional>

#include "leafcut/algebra/poly.hpp"

namespace leafcut {

/// a / b when b divides a exactly, nullopt otherwise.
std::optional<Poly> exact_divide(const Poly& a, const Poly& b);

/// Greatest common divisor over Q, normalized to leading coefficient 1 in
/// grevlex (gcd(0, 0) = 0). Recursive primitive polynomial remainder sequence.
Poly poly_gcd(const Poly& a, const Poly& b);
Poly poly_lcm(const Poly& a, const Poly& b);

}  // namespace leafcut
