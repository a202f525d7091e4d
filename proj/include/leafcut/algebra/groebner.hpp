#pragma once

#include "leafcut/algebra/ideal.hpp"

namespace leafcut {

/// Reduced Gröbner basis by Buchberger's algorithm: sugar pair selection and
/// the Gebauer–Möller installation of both Buchberger criteria. Lex and block
/// orders start from the grevlex basis and convert it (FGLM when
/// zero-dimensional, homogenized Buchberger otherwise). Output is monic,
/// sorted ascending by leading monomial, and equal to [1] for the unit ideal,
/// so it is canonical for the pair (ideal, order).
Ideal groebner_basis(const Ideal& ideal, const MonomialOrder& ord = MonomialOrder::grevlex());

/// Remainder of multivariate division of `p` by the basis `basis` (expected to
/// be a Gröbner basis w.r.t. `ord`). Throws RingMismatch on ring mismatch.
Poly normal_form(const Poly& p, const Ideal& basis,
                 const MonomialOrder& ord = MonomialOrder::grevlex());

bool is_unit_ideal(const Ideal& ideal);
/// Ideal membership.
bool ideal_contains(const Ideal& ideal, const Poly& p);
/// b ⊆ a.
bool ideal_contains(const Ideal& a, const Ideal& b);
bool ideals_equal(const Ideal& a, const Ideal& b);

}  // namespace leafcut
