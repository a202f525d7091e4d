#pragma once

#include <optional>
#include <string>
#include <vector>

#include "leafcut/algebra/groebner.hpp"
#include "leafcut/algebra/matrix.hpp"

namespace leafcut {

/// Ring over the given variables, ordered as they appear in `ring`.
RingPtr subring(const RingPtr& ring, const std::vector<std::string>& keep);

/// I ∩ Q[keep], via a block order eliminating the complement. The result lives
/// in subring(I.ring(), keep) and is a reduced grevlex Gröbner basis.
Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& keep);

/// I : g^∞ through the Rabinowitsch variable t and elimination of t.
Ideal saturate(const Ideal& ideal, const Poly& g);
/// Saturation by each factor in turn.
Ideal saturate(const Ideal& ideal, const std::vector<Poly>& gs);

/// Krull dimension of V(I); nullopt when 1 ∈ I.
std::optional<int> ideal_dimension(const Ideal& ideal);

/// Dimension of a monomial ideal from its leading monomials: size of the
/// largest variable subset avoided by every generator support.
int monomial_ideal_dimension(const std::vector<Monomial>& gens, std::size_t nvars);

/// Ideal of the Zariski closure of φ(V(I)), with φ given by `map` and target
/// coordinates named `target_vars`.
Ideal closure_of_image(const Ideal& ideal, const std::vector<Poly>& map,
                       const std::vector<std::string>& target_vars);

/// g ∈ rad(I).
bool in_radical(const Ideal& ideal, const Poly& g);
/// V(a) ⊆ V(b).
bool variety_contained(const Ideal& a, const Ideal& b);
bool varieties_equal(const Ideal& a, const Ideal& b);

/// Generator of all (r+1)-minors; V = {rank M ≤ r}. Throws GuardExceeded when
/// the number of minors exceeds `minor_limit`.
Ideal rank_locus(const Matrix<Poly>& m, std::size_t r, std::size_t minor_limit = 100000);

/// Determinant by cofactor expansion with memoized column subsets.
Poly determinant(const Matrix<Poly>& m);

/// A variable name not present in `ring`, derived from `stem`.
std::string fresh_name(const RingPtr& ring, const std::string& stem);

}  // namespace leafcut
