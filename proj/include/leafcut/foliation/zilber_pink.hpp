#pragma once

#include <optional>
#include <vector>

#include "json.hpp"
#include "leafcut/foliation/locus.hpp"

namespace leafcut {

struct AtypicalityReport {
  int dim_U = 0, dim_V = 0, dim_P = 0, dim_L = 0, dim_H = 0;
  /// codim_P U < codim_P V + codim_P L.
  bool atypical = false;
  /// dim V < dim U + dim H.
  bool atypical_dim_form = false;
};

/// Throws SchemaError on negative or oversized dimensions, or when
/// dim_P − dim_L = dim_H and the two forms disagree.
AtypicalityReport atypicality_check(int dim_U, int dim_V, int dim_P, int dim_L, int dim_H);

/// A graded family f = ⊔ members, plus optional candidate families h_i over
/// the base used to name the covering families.
struct ZPConfig {
  int dim_S = 0;
  int dim_flag = 0;
  std::vector<FamilyOfSubvarieties> members;
  std::vector<FamilyOfSubvarieties> h;
};

struct AtypicalRange {
  int rho = 0;
  bool contains(int j) const { return j < rho; }
};

/// ρ(e) = e + dim_flag − dim_S. Throws SchemaError unless 0 ≤ e ≤ dim_S.
AtypicalRange atypical_range(int e, const ZPConfig& cfg);

struct MemberLoci {
  RingPtr ring;
  ConstructibleSet Y, Kprime, K;
};

struct ZPResult {
  int e = 0;
  int rho = 0;
  std::vector<MemberLoci> members;
  /// Images in base coordinates of the pieces of Y \ K, nonempty, deduplicated.
  std::vector<ConstructibleSet> candidates;
  /// Indices into cfg.h whose loci cover every Y \ K (irredundant per
  /// member), when h is given and a cover exists.
  std::optional<std::vector<std::size_t>> covering_families;
  bool closure_only = false;
};

/// Fibre inclusion 𝒵_a(y_a) ⊆ 𝒵_b(y_b) as an ideal in `pair_ring`, whose
/// variables include `a_names` and `b_names` (the parameters of a and b,
/// renamed by position): I_b(y_b) ⊆ I_a(y_a) after specialization, plus the
/// closures of the nonempty-fibre conditions. Requires leading coefficients in
/// the space variables that do not vanish on nonempty fibres (SchemaError).
Ideal fibre_inclusion(const std::vector<std::string>& space_vars, const FamilyOfSubvarieties& a,
                      const std::vector<std::string>& a_names, const FamilyOfSubvarieties& b,
                      const std::vector<std::string>& b_names, const RingPtr& pair_ring,
                      const Ideal* extra = nullptr);

/// Y(e), K(e)′, K(e) for each member of the graded family, and the base
/// images of Y(e) \ K(e). dim r(𝒵_y) is measured in the frame coordinates.
ZPResult zp_candidate_loci(const TorsorSpace& t, const LeafDistribution& l, const ZPConfig& cfg, int e,
                           const LocusOptions& opts = {});

nlohmann::json to_json(const LocusResult& r);
nlohmann::json to_json(const AtypicalityReport& r);
nlohmann::json to_json(const ZPResult& r);

}  // namespace leafcut
