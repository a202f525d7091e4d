#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "leafcut/algebra/parse.hpp"
#include "leafcut/errors.hpp"
#include "leafcut/io/spec.hpp"

using namespace leafcut;
using nlohmann::json;

namespace {

struct Flags {
  std::string spec_path, out_path;
  std::optional<int> e;
  bool fast_closure = false, verify_periods = false;
  std::size_t guard_minors = 100000;
};

void emit(const json& j, const std::string& path) {
  std::string text = j.dump(2) + "\n";
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

json read_spec(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw SchemaError("cannot read spec file " + path);
  try {
    return json::parse(f);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("spec is not valid JSON: ") + e.what());
  }
}

int fail(int code, const std::string& kind, const std::string& msg, const json& spec = nullptr) {
  json diag = {{"error", kind}, {"message", msg}, {"exit_code", code}};
  if (code == 4 && !spec.is_null()) diag["spec"] = spec;
  std::cerr << diag.dump(2) << "\n";
  return code;
}

int execute(const std::string& command, const Flags& fl) {
  json raw;
  try {
    raw = read_spec(fl.spec_path);
    if (command == "validate") {
      auto diags = validate(raw);
      emit(json{{"valid", diags.empty()}, {"diagnostics", diags}}, fl.out_path);
      return diags.empty() ? 0 : 2;
    }
    if (!raw.is_object() || raw.value("kind", "") != command)
      throw SchemaError("spec kind does not match command '" + command + "'");
    if (fl.e) raw["payload"]["e"] = *fl.e;
    if (fl.fast_closure) raw["payload"]["fast_closure"] = true;
    if (fl.verify_periods) raw["payload"]["verify_periods"] = true;
    ProblemSpec spec = parse_spec(raw);
    RunOptions opts;
    opts.guard_minors = fl.guard_minors;
    emit(to_json(run(spec, opts)), fl.out_path);
    return 0;
  } catch (const GuardExceeded& e) {
    return fail(3, "guard exceeded", e.what());
  } catch (const InvariantViolation& e) {
    return fail(4, "invariant violation", e.what(), raw);
  } catch (const RingMismatch& e) {
    return fail(2, "ring mismatch", e.what());
  } catch (const ParseError& e) {
    return fail(2, "parse error", e.what());
  } catch (const std::invalid_argument& e) {
    return fail(2, "schema error", e.what());
  } catch (const std::exception& e) {
    return fail(4, "internal error", e.what(), raw);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"leafcut: leaf loci, Zilber-Pink candidates and Gauss-Manin connections"};
  app.require_subcommand(1);
  Flags fl;
  std::vector<std::pair<std::string, std::string>> commands = {
      {"flatness", "curvature of a connection"},
      {"locus", "leaf locus Z(f, e), Y(f, e)"},
      {"family-locus", "leaf locus of a family intersected with h"},
      {"zpdrive", "Zilber-Pink candidate loci"},
      {"gaussmanin", "Gauss-Manin connection of a superelliptic family"},
      {"degree-bound", "a priori degree budget"},
      {"atypical", "atypicality check from dimensions"},
      {"validate", "schema and semantic diagnostics for a spec"}};
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--spec", fl.spec_path, "problem spec (JSON)")->required();
    sub->add_option("--out", fl.out_path, "write the result here instead of stdout");
    sub->add_option("--guard-minors", fl.guard_minors, "cap on minors per rank locus");
    if (name == "locus" || name == "family-locus" || name == "zpdrive") {
      sub->add_option("--e", fl.e, "excess dimension (overrides the spec)");
      sub->add_flag("--fast-closure", fl.fast_closure, "closures only");
    }
    if (name == "gaussmanin") sub->add_flag("--verify-periods", fl.verify_periods, "numeric period check");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  return execute(app.get_subcommands().front()->get_name(), fl);
}
