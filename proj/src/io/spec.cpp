#include "leafcut/io/spec.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <optional>

#include "leafcut/algebra/parse.hpp"
#include "leafcut/errors.hpp"
#include "leafcut/foliation/zilber_pink.hpp"
#include "leafcut/gauss_manin/periods.hpp"
#include "leafcut/gauss_manin/superelliptic.hpp"
#include "leafcut/json_schema.hpp"

namespace leafcut {

const char* const kToolVersion = "leafcut 0.1.0";

const std::vector<std::string>& spec_kinds() {
  static const std::vector<std::string> kinds = {"flatness",   "locus",        "family-locus", "zpdrive",
                                                 "gaussmanin", "degree-bound", "atypical"};
  return kinds;
}

namespace {

using json = nlohmann::json;

template <class T>
T get(const json& j, const char* key, const char* what) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw SchemaError(std::string(what) + "." + key + " has the wrong type or is missing");
  }
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw SchemaError("expected an integer or a rational string");
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

struct TorsorInput {
  ConnectionData conn;
  std::vector<InvariantTensor> tensors;
  std::vector<Rational> base_point;
  std::optional<int> group_dimension;

  Torsor build() const { return frame_torsor(conn, tensors, base_point, group_dimension); }

  // During parsing a non-flat tensor is bad input rather than an internal failure.
  Torsor checked_build() const {
    try {
      return build();
    } catch (const InvariantViolation& e) {
      throw SchemaError(std::string("torsor: ") + e.what());
    }
  }

  json to_json() const {
    json t = json::array();
    for (const auto& x : tensors) {
      json v = json::array();
      for (const auto& e : x.value) v.push_back(entry_to_json(e));
      t.push_back({{"a", x.a}, {"b", x.b}, {"value", v}});
    }
    json bp = json::array();
    for (const auto& q : base_point) bp.push_back(rational_to_string(q));
    json out = {{"connection", leafcut::to_json(conn)}, {"base_point", bp}, {"tensors", t}};
    if (group_dimension) out["group_dimension"] = *group_dimension;
    return out;
  }
};

TorsorInput torsor_from_json(const json& j) {
  check_keys(j, {"connection", "base_point"}, {"tensors", "group_dimension"}, "torsor");
  TorsorInput in{connection_from_json(j.at("connection")), {}, {}, std::nullopt};
  if (!j.at("base_point").is_array()) throw SchemaError("torsor.base_point must be an array");
  for (const auto& q : j.at("base_point")) in.base_point.push_back(rational_from_json(q));
  if (in.base_point.size() != in.conn.ring()->size())
    throw SchemaError("torsor.base_point must have one coordinate per base variable");
  if (j.contains("tensors")) {
    for (const auto& t : j.at("tensors")) {
      check_keys(t, {"a", "b", "value"}, {}, "tensor");
      InvariantTensor x;
      x.a = get<std::size_t>(t, "a", "tensor");
      x.b = get<std::size_t>(t, "b", "tensor");
      for (const auto& e : t.at("value")) x.value.push_back(entry_from_json(e, in.conn.ring()));
      std::size_t expect = 1;
      for (std::size_t k = 0; k < x.a + x.b; ++k) expect *= in.conn.rank();
      if (x.value.size() != expect) throw SchemaError("tensor value must have rank^(a+b) entries");
      in.tensors.push_back(std::move(x));
    }
  }
  if (j.contains("group_dimension")) in.group_dimension = get<int>(j, "group_dimension", "torsor");
  return in;
}

FamilyOfSubvarieties family_from_spec(const json& j, const std::vector<std::string>& space_vars) {
  check_keys(j, {"params", "ideal"}, {"chart", "fiber_degree_bound"}, "family");
  auto params = get<std::vector<std::string>>(j, "params", "family");
  auto vars = space_vars;
  vars.insert(vars.end(), params.begin(), params.end());
  RingPtr ring = make_ring(vars);
  RingPtr pring = make_ring(params);
  Ideal total(ring, parse_polys(get<std::vector<std::string>>(j, "ideal", "family"), ring));
  std::vector<std::string> chart;
  if (j.contains("chart")) chart = get<std::vector<std::string>>(j, "chart", "family");
  int bound = std::max(1, total.max_degree());
  if (j.contains("fiber_degree_bound")) bound = get<int>(j, "fiber_degree_bound", "family");
  FamilyOfSubvarieties f{total, AffineChart(params.size(), Ideal(pring, parse_polys(chart, pring))), bound};
  family_ring(space_vars, f);  // name collisions
  return f;
}

json family_to_spec(const FamilyOfSubvarieties& f) {
  return {{"params", f.params()},
          {"ideal", f.total_ideal.serialize()},
          {"chart", f.parameter_chart.ideal.serialize()},
          {"fiber_degree_bound", f.fiber_degree_bound}};
}

LocusOptions locus_options(const json& p, const RunOptions& opts) {
  LocusOptions o;
  o.minor_limit = opts.guard_minors;
  if (p.contains("fast_closure")) o.fast_closure = get<bool>(p, "fast_closure", "payload");
  return o;
}

// Parsed payload for every kind; `canonical` re-emits it.
struct Payload {
  std::string kind;
  std::optional<ConnectionData> connection;
  std::optional<TorsorInput> torsor;
  std::optional<FamilyOfSubvarieties> family;
  std::optional<FamilyOfSubvarieties> h;
  std::optional<SuperellipticFamily> sfam;
  std::optional<ZPConfig> zp;
  json scalars = json::object();

  json canonical() const {
    json out = scalars;
    if (connection) out["connection"] = to_json(*connection);
    if (torsor) out["torsor"] = torsor->to_json();
    if (family) out["family"] = family_to_spec(*family);
    if (h) out["h"] = family_to_spec(*h);
    if (sfam) out["family"] = to_json(*sfam);
    if (zp) {
      out["dim_S"] = zp->dim_S;
      out["dim_flag"] = zp->dim_flag;
      json m = json::array(), hs = json::array();
      for (const auto& f : zp->members) m.push_back(family_to_spec(f));
      for (const auto& f : zp->h) hs.push_back(family_to_spec(f));
      out["members"] = m;
      out["h"] = hs;
    }
    return out;
  }
};

void copy_scalar(const json& p, json& out, const char* key, bool required, const char* type) {
  if (!p.contains(key)) {
    if (required) throw SchemaError(std::string("payload.") + key + " is required");
    return;
  }
  const json& v = p.at(key);
  bool ok = std::string(type) == "int" ? v.is_number_integer() : v.is_boolean();
  if (!ok) throw SchemaError(std::string("payload.") + key + " must be " + (std::string(type) == "int" ? "an integer" : "a boolean"));
  out[key] = v;
}

Payload parse_payload(const std::string& kind, const json& p) {
  if (!p.is_object()) throw SchemaError("payload must be an object");
  Payload out;
  out.kind = kind;
  if (kind == "flatness") {
    check_keys(p, {"connection"}, {}, "payload");
    out.connection = connection_from_json(p.at("connection"));
  } else if (kind == "locus" || kind == "family-locus") {
    if (kind == "locus")
      check_keys(p, {"torsor", "family", "e"}, {"fast_closure"}, "payload");
    else
      check_keys(p, {"torsor", "family", "h", "e"}, {"fast_closure"}, "payload");
    out.torsor = torsor_from_json(p.at("torsor"));
    Torsor t = out.torsor->checked_build();
    out.family = family_from_spec(p.at("family"), t.space.ring->vars());
    if (kind == "family-locus") out.h = family_from_spec(p.at("h"), t.space.base_vars());
    copy_scalar(p, out.scalars, "e", true, "int");
    copy_scalar(p, out.scalars, "fast_closure", false, "bool");
  } else if (kind == "zpdrive") {
    check_keys(p, {"torsor", "dim_S", "dim_flag", "members", "e"}, {"h", "fast_closure"}, "payload");
    out.torsor = torsor_from_json(p.at("torsor"));
    Torsor t = out.torsor->checked_build();
    ZPConfig cfg;
    cfg.dim_S = get<int>(p, "dim_S", "payload");
    cfg.dim_flag = get<int>(p, "dim_flag", "payload");
    if (!p.at("members").is_array() || p.at("members").empty()) throw SchemaError("payload.members must be a nonempty array");
    for (const auto& m : p.at("members")) cfg.members.push_back(family_from_spec(m, t.space.ring->vars()));
    if (p.contains("h"))
      for (const auto& m : p.at("h")) cfg.h.push_back(family_from_spec(m, t.space.base_vars()));
    out.zp = std::move(cfg);
    copy_scalar(p, out.scalars, "e", true, "int");
    copy_scalar(p, out.scalars, "fast_closure", false, "bool");
  } else if (kind == "gaussmanin") {
    check_keys(p, {"family"}, {"verify_periods", "samples"}, "payload");
    out.sfam = family_from_json(p.at("family"));
    copy_scalar(p, out.scalars, "verify_periods", false, "bool");
    copy_scalar(p, out.scalars, "samples", false, "int");
  } else if (kind == "degree-bound") {
    check_keys(p, {"deg", "kappa", "r", "steps"}, {}, "payload");
    for (const char* k : {"deg", "kappa", "r", "steps"}) {
      copy_scalar(p, out.scalars, k, true, "int");
      if (p.at(k).get<long>() < 0) throw SchemaError(std::string("payload.") + k + " must be nonnegative");
    }
  } else if (kind == "atypical") {
    check_keys(p, {"dim_U", "dim_V", "dim_P", "dim_L", "dim_H"}, {}, "payload");
    for (const char* k : {"dim_U", "dim_V", "dim_P", "dim_L", "dim_H"}) copy_scalar(p, out.scalars, k, true, "int");
  } else {
    throw SchemaError("unknown kind '" + kind + "'");
  }
  return out;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

json flatness_result(const ConnectionData& c) {
  Curvature cv = curvature(c);
  json nz = json::array();
  for (const auto& e : cv.nonzero)
    nz.push_back({{"i", e.i}, {"j", e.j}, {"row", e.row}, {"col", e.col}, {"value", entry_to_json(e.value)}});
  return {{"flat", cv.is_flat}, {"nonzero", nz}};
}

json compute(const Payload& p, const ProblemSpec& spec, const RunOptions& opts) {
  const json& s = p.scalars;
  if (p.kind == "flatness") return flatness_result(*p.connection);
  if (p.kind == "locus" || p.kind == "family-locus") {
    Torsor t = p.torsor->build();
    LocusOptions lo = locus_options(s, opts);
    LocusResult r = p.kind == "locus" ? leaf_locus(t.space, t.leaves, *p.family, s["e"].get<int>(), lo)
                                      : family_leaf_locus(t.space, t.leaves, *p.family, s["e"].get<int>(), *p.h, lo);
    return to_json(r);
  }
  if (p.kind == "zpdrive") {
    Torsor t = p.torsor->build();
    return to_json(zp_candidate_loci(t.space, t.leaves, *p.zp, s["e"].get<int>(), locus_options(s, opts)));
  }
  if (p.kind == "gaussmanin") {
    GaussManinResult gm = gauss_manin(*p.sfam);
    json out = to_json(gm);
    if (s.value("verify_periods", false)) {
      int samples = s.value("samples", 10);
      double worst = 0;
      unsigned seed = static_cast<unsigned>(spec.seed);
      for (const auto& e : gm.eigenspaces) worst = std::max(worst, period_residual(*p.sfam, e, samples, seed));
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3e", worst);
      out["period_residual"] = buf;
      out["periods_certified"] = worst < 1e-8;
    }
    return out;
  }
  if (p.kind == "degree-bound") {
    mpz_class b = degree_budget(s["deg"].get<long>(), s["kappa"].get<long>(), s["r"].get<long>(), s["steps"].get<long>());
    return {{"degree_budget", b.get_str()}};
  }
  return to_json(atypicality_check(s["dim_U"].get<int>(), s["dim_V"].get<int>(), s["dim_P"].get<int>(),
                                   s["dim_L"].get<int>(), s["dim_H"].get<int>()));
}

}  // namespace

ProblemSpec parse_spec(const json& j) {
  if (!j.is_object()) throw SchemaError("spec must be a JSON object");
  check_keys(j, {"kind", "payload"}, {"seed"}, "spec");
  ProblemSpec s;
  s.kind = get<std::string>(j, "kind", "spec");
  if (std::find(spec_kinds().begin(), spec_kinds().end(), s.kind) == spec_kinds().end())
    throw SchemaError("unknown kind '" + s.kind + "'");
  if (j.contains("seed")) s.seed = get<std::int64_t>(j, "seed", "spec");
  s.payload = parse_payload(s.kind, j.at("payload")).canonical();
  return s;
}

json to_json(const ProblemSpec& s) { return {{"kind", s.kind}, {"payload", s.payload}, {"seed", s.seed}}; }

json canonicalize(const json& j) { return to_json(parse_spec(j)); }

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

ResultEnvelope run(const ProblemSpec& spec, const RunOptions& opts) {
  ResultEnvelope env;
  env.tool_version = kToolVersion;
  auto t0 = std::chrono::steady_clock::now();
  Payload p = parse_payload(spec.kind, spec.payload);
  env.input_hash = sha256_hex(to_json(spec).dump());
  env.timings["parse"] = ms_since(t0);
  auto t1 = std::chrono::steady_clock::now();
  env.result = compute(p, spec, opts);
  env.timings["compute"] = ms_since(t1);
  return env;
}

json to_json(const ResultEnvelope& r) {
  return {{"input_hash", r.input_hash}, {"tool_version", r.tool_version}, {"result", r.result}, {"timings", r.timings}};
}

std::vector<std::string> validate(const json& j) {
  std::vector<std::string> out;
  if (j.is_object() && j.value("kind", "") == "gaussmanin" && j.contains("payload") && j["payload"].is_object() &&
      j["payload"].contains("family")) {
    out = validate_family(j["payload"]["family"]);
    if (!out.empty()) return out;
  }
  try {
    parse_spec(j);
  } catch (const RingMismatch& e) {
    out.push_back(std::string("ring mismatch: ") + e.what());
  } catch (const ParseError& e) {
    out.push_back(std::string("parse error: ") + e.what());
  } catch (const std::exception& e) {
    out.push_back(e.what());
  }
  return out;
}

}  // namespace leafcut
