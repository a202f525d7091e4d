#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace leafcut {

/// {"kind": ..., "payload": {...}, "seed": n}. Payload layouts per kind:
///   flatness      {"connection"}
///   locus         {"torsor", "family", "e", "fast_closure"?}
///   family-locus  {"torsor", "family", "h", "e", "fast_closure"?}
///   zpdrive       {"torsor", "dim_S", "dim_flag", "members", "h"?, "e", "fast_closure"?}
///   gaussmanin    {"family", "verify_periods"?, "samples"?}
///   degree-bound  {"deg", "kappa", "r", "steps"}
///   atypical      {"dim_U", "dim_V", "dim_P", "dim_L", "dim_H"}
/// A torsor is {"connection", "base_point", "tensors"?, "group_dimension"?};
/// a family is {"params", "ideal", "chart"?, "fiber_degree_bound"?} with the
/// ideal over (torsor or base coordinates, params).
struct ProblemSpec {
  std::string kind;
  nlohmann::json payload;
  std::int64_t seed = 0;
};

const std::vector<std::string>& spec_kinds();

/// Strict parse: unknown keys or kinds raise SchemaError; the payload is
/// fully parsed (rings, polynomials) before returning.
ProblemSpec parse_spec(const nlohmann::json& j);
/// Payload polynomials in canonical form, keys sorted.
nlohmann::json to_json(const ProblemSpec& s);
nlohmann::json canonicalize(const nlohmann::json& j);

struct RunOptions {
  std::size_t guard_minors = 100000;
};

struct ResultEnvelope {
  std::string input_hash;  // SHA-256 of the canonical spec
  std::string tool_version;
  nlohmann::json result;
  std::map<std::string, double> timings;  // milliseconds per phase
};

ResultEnvelope run(const ProblemSpec& spec, const RunOptions& opts = {});
nlohmann::json to_json(const ResultEnvelope& r);

/// Schema and semantic diagnostics; never throws.
std::vector<std::string> validate(const nlohmann::json& j);

std::string sha256_hex(const std::string& data);
extern const char* const kToolVersion;

}  // namespace leafcut
