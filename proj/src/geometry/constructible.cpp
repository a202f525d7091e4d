#include "leafcut/geometry/constructible.hpp"

#include <algorithm>

#include "leafcut/algebra/ideal_ops.hpp"
#include "leafcut/algebra/parse.hpp"
#include "leafcut/errors.hpp"

namespace leafcut {

Piece::Piece(const Ideal& c, const Ideal& o)
    : closed(groebner_basis(c)), open_complement(groebner_basis(c + o)) {
  require_same_ring(c.ring(), o.ring(), "Piece");
}

bool Piece::is_member(std::span<const Rational> point) const {
  for (const auto& g : closed.gens())
    if (g.evaluate(point) != 0) return false;
  for (const auto& g : open_complement.gens())
    if (g.evaluate(point) != 0) return true;
  return false;
}

bool Piece::is_empty() const {
  if (closed.has_unit_generator()) return true;
  for (const auto& g : open_complement.gens())
    if (!in_radical(closed, g)) return false;
  return true;
}

namespace {

using Key = std::pair<std::vector<std::string>, std::vector<std::string>>;

Key piece_key(const Piece& p) { return {p.closed.serialize(), p.open_complement.serialize()}; }

}  // namespace

ConstructibleSet::ConstructibleSet(RingPtr ring, std::vector<Piece> pieces) : ring_(std::move(ring)) {
  std::vector<std::pair<Key, Piece>> keyed;
  for (auto& p : pieces) {
    require_same_ring(ring_, p.closed.ring(), "ConstructibleSet");
    // V(1) pieces are trivially empty and never stored.
    if (p.closed.has_unit_generator()) continue;
    keyed.emplace_back(piece_key(p), std::move(p));
  }
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t k = 0; k < keyed.size(); ++k) {
    if (k > 0 && keyed[k].first == keyed[k - 1].first) continue;
    pieces_.push_back(std::move(keyed[k].second));
  }
}

ConstructibleSet ConstructibleSet::whole(RingPtr ring) {
  Ideal z = Ideal::zero(ring);
  return ConstructibleSet(ring, {Piece(z, Ideal::unit(ring))});
}

ConstructibleSet ConstructibleSet::closed(const Ideal& ideal) {
  return ConstructibleSet(ideal.ring(), {Piece(ideal, Ideal::unit(ideal.ring()))});
}

ConstructibleSet ConstructibleSet::locally_closed(const Ideal& closed, const Ideal& open_complement) {
  return ConstructibleSet(closed.ring(), {Piece(closed, open_complement)});
}

bool ConstructibleSet::is_empty() const {
  return std::all_of(pieces_.begin(), pieces_.end(), [](const Piece& p) { return p.is_empty(); });
}

ConstructibleSet ConstructibleSet::pruned() const {
  std::vector<Piece> keep;
  for (const auto& p : pieces_)
    if (!p.is_empty()) keep.push_back(p);
  return ConstructibleSet(ring_, std::move(keep));
}

ConstructibleSet cs_union(const ConstructibleSet& a, const ConstructibleSet& b) {
  require_same_ring(a.ring(), b.ring(), "cs_union");
  std::vector<Piece> all = a.pieces();
  all.insert(all.end(), b.pieces().begin(), b.pieces().end());
  return ConstructibleSet(a.ring(), std::move(all));
}

ConstructibleSet cs_intersect(const ConstructibleSet& a, const ConstructibleSet& b) {
  require_same_ring(a.ring(), b.ring(), "cs_intersect");
  std::vector<Piece> out;
  for (const auto& p : a.pieces()) {
    for (const auto& q : b.pieces()) {
      Piece r(p.closed + q.closed, ideal_product(p.open_complement, q.open_complement));
      if (!r.is_empty()) out.push_back(std::move(r));
    }
  }
  return ConstructibleSet(a.ring(), std::move(out));
}

ConstructibleSet cs_complement(const ConstructibleSet& a) {
  // complement(V(C) \ V(O)) = (A^n \ V(C)) ∪ V(O), intersected over pieces.
  ConstructibleSet acc = ConstructibleSet::whole(a.ring());
  Ideal zero = Ideal::zero(a.ring());
  Ideal unit = Ideal::unit(a.ring());
  for (const auto& p : a.pieces()) {
    std::vector<Piece> comp;
    if (!p.closed.empty()) comp.emplace_back(zero, p.closed);
    if (!p.open_complement.has_unit_generator()) comp.emplace_back(p.open_complement, unit);
    acc = cs_intersect(acc, ConstructibleSet(a.ring(), std::move(comp)));
    if (acc.pieces().empty()) break;
  }
  return acc;
}

ConstructibleSet cs_difference(const ConstructibleSet& a, const ConstructibleSet& b) {
  return cs_intersect(a, cs_complement(b));
}

bool cs_is_member(std::span<const Rational> point, const ConstructibleSet& a) {
  if (point.size() != a.ring()->size())
    throw std::invalid_argument("cs_is_member: point arity mismatch");
  return std::any_of(a.pieces().begin(), a.pieces().end(),
                     [&](const Piece& p) { return p.is_member(point); });
}

bool cs_subset(const ConstructibleSet& a, const ConstructibleSet& b) {
  return cs_difference(a, b).is_empty();
}

bool cs_equal(const ConstructibleSet& a, const ConstructibleSet& b) {
  return cs_subset(a, b) && cs_subset(b, a);
}

UnionCover contained_in_union(const ConstructibleSet& c, const std::vector<ConstructibleSet>& us) {
  auto union_of = [&](const std::vector<std::size_t>& idx) {
    ConstructibleSet u = ConstructibleSet::empty(c.ring());
    for (std::size_t i : idx) u = cs_union(u, us[i]);
    return u;
  };
  std::vector<std::size_t> idx(us.size());
  for (std::size_t i = 0; i < us.size(); ++i) idx[i] = i;
  UnionCover out;
  ConstructibleSet witness = cs_difference(c, union_of(idx)).pruned();
  if (!witness.pieces().empty()) {
    out.witness = std::move(witness);
    return out;
  }
  out.contained = true;
  // Greedy removal from the back leaves an irredundant cover.
  for (std::size_t k = idx.size(); k-- > 0;) {
    std::vector<std::size_t> trial;
    for (std::size_t i : idx)
      if (i != k) trial.push_back(i);
    if (cs_subset(c, union_of(trial))) idx = std::move(trial);
  }
  out.indices = std::move(idx);
  return out;
}

nlohmann::json to_json(const ConstructibleSet& a) {
  nlohmann::json pieces = nlohmann::json::array();
  for (const auto& p : a.pieces())
    pieces.push_back({{"closed", p.closed.serialize()}, {"open_complement", p.open_complement.serialize()}});
  return {{"ring", a.ring()->vars()}, {"pieces", std::move(pieces)}};
}

namespace {

void require_keys(const nlohmann::json& j, std::initializer_list<const char*> keys, const char* what) {
  if (!j.is_object()) throw SchemaError(std::string(what) + ": expected an object");
  for (const auto& [k, v] : j.items()) {
    bool known = false;
    for (const char* key : keys) known = known || k == key;
    if (!known) throw SchemaError(std::string(what) + ": unknown field '" + k + "'");
  }
  for (const char* key : keys)
    if (!j.contains(key)) throw SchemaError(std::string(what) + ": missing field '" + key + "'");
}

}  // namespace

ConstructibleSet constructible_from_json(const nlohmann::json& j) {
  require_keys(j, {"ring", "pieces"}, "ConstructibleSet");
  RingPtr ring = make_ring(j.at("ring").get<std::vector<std::string>>());
  std::vector<Piece> pieces;
  for (const auto& pj : j.at("pieces")) {
    require_keys(pj, {"closed", "open_complement"}, "piece");
    Ideal c(ring, parse_polys(pj.at("closed").get<std::vector<std::string>>(), ring));
    Ideal o(ring, parse_polys(pj.at("open_complement").get<std::vector<std::string>>(), ring));
    pieces.emplace_back(c, o);
  }
  return ConstructibleSet(ring, std::move(pieces));
}

}  // namespace leafcut
