#pragma once

#include <optional>
#include <span>
#include <vector>

#include "json.hpp"
#include "leafcut/algebra/ideal.hpp"

namespace leafcut {

/// Locally closed set V(closed) \ V(open_complement). Both ideals are kept as
/// reduced grevlex bases and open_complement ⊇ closed, so V(open) ⊆ V(closed).
struct Piece {
  Ideal closed;
  Ideal open_complement;

  Piece(const Ideal& closed, const Ideal& open_complement);

  bool is_member(std::span<const Rational> point) const;
  /// Exact emptiness test: every generator of open_complement lies in rad(closed).
  bool is_empty() const;
};

/// Finite union of locally closed pieces. Pieces are not minimal; equality is
/// semantic. The empty set has no pieces.
class ConstructibleSet {
 public:
  explicit ConstructibleSet(RingPtr ring, std::vector<Piece> pieces = {});

  static ConstructibleSet empty(RingPtr ring) { return ConstructibleSet(std::move(ring)); }
  static ConstructibleSet whole(RingPtr ring);
  static ConstructibleSet closed(const Ideal& ideal);
  static ConstructibleSet locally_closed(const Ideal& closed, const Ideal& open_complement);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Piece>& pieces() const { return pieces_; }

  /// Drops empty pieces; true when none remain.
  bool is_empty() const;
  /// Copy without empty or duplicate pieces.
  ConstructibleSet pruned() const;

 private:
  RingPtr ring_;
  std::vector<Piece> pieces_;
};

ConstructibleSet cs_union(const ConstructibleSet& a, const ConstructibleSet& b);
ConstructibleSet cs_intersect(const ConstructibleSet& a, const ConstructibleSet& b);
ConstructibleSet cs_complement(const ConstructibleSet& a);
ConstructibleSet cs_difference(const ConstructibleSet& a, const ConstructibleSet& b);
bool cs_is_member(std::span<const Rational> point, const ConstructibleSet& a);

/// A ⊆ B as sets of points.
bool cs_subset(const ConstructibleSet& a, const ConstructibleSet& b);
bool cs_equal(const ConstructibleSet& a, const ConstructibleSet& b);

struct UnionCover {
  bool contained = false;
  /// Irredundant indices into `us` covering C (when contained).
  std::vector<std::size_t> indices;
  /// Nonempty C \ ∪ us (when not contained).
  std::optional<ConstructibleSet> witness;
};

UnionCover contained_in_union(const ConstructibleSet& c, const std::vector<ConstructibleSet>& us);

/// {"ring": [...], "pieces": [{"closed": [...], "open_complement": [...]}]},
/// pieces sorted by serialized closed ideal.
nlohmann::json to_json(const ConstructibleSet& a);
ConstructibleSet constructible_from_json(const nlohmann::json& j);

}  // namespace leafcut
