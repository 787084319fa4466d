#include "hv/serialize.hpp"

#include <fstream>

#include "hv/expr.hpp"
#include "hv/format.hpp"

namespace hv {

json config_json(const AlgebraConfig& config) {
  json gens = json::array();
  for (const auto& g : config.group.generators()) gens.push_back(g.str());
  return {{"generators", gens}, {"variant", to_string(config.variant)}, {"mixed_cocycle", to_string(config.mixed_cocycle)}};
}

ConfigPtr config_from_json(const json& j) {
  AlgebraConfig cfg;
  if (j.contains("generators")) {
    std::vector<Rational> gens;
    for (const auto& g : j.at("generators")) gens.push_back(Rational::parse(g.is_string() ? g.get<std::string>() : g.dump()));
    cfg.group = GroupSpec(gens);
  }
  if (j.contains("variant")) cfg.variant = parse_variant(j.at("variant").get<std::string>());
  if (j.contains("mixed_cocycle")) cfg.mixed_cocycle = parse_mixed_cocycle(j.at("mixed_cocycle").get<std::string>());
  return std::make_shared<const AlgebraConfig>(std::move(cfg));
}

json report_json(const CheckReport& r) {
  json j = {{"check", r.check},
            {"variant", to_string(r.variant)},
            {"window", r.window},
            {"status", r.passed ? "pass" : "fail"},
            {"cases", r.cases}};
  if (!r.passed) {
    j["witness"] = r.witness;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
  }
  return j;
}

json report_json(const BialgebraReport& r) {
  return {{"check", "bialgebra"},
          {"variant", to_string(r.antisymmetry.variant)},
          {"window", r.antisymmetry.window},
          {"status", r.passed() ? "pass" : "fail"},
          {"axioms", json::array({report_json(r.antisymmetry), report_json(r.co_jacobi), report_json(r.compatibility)})}};
}

json report_json(const SolverCertificate& c) {
  json comb = json::array();
  for (const auto& [eq, m] : c.combination) comb.push_back({{"equation", eq}, {"multiplier", m}});
  return {{"equation", c.equation}, {"residual", c.residual}, {"support", c.support}, {"combination", comb}};
}

json table_json(const SymbolTable& t, const std::optional<Rational>& degree, const std::string& kind) {
  json assignments = json::object();
  for (const auto& [s, v] : t.assignments()) assignments[to_string(s)] = format(v);
  json j = {{"kind", kind}, {"window", t.window()}, {"assignments", assignments}};
  if (t.config()) j["config"] = config_json(*t.config());
  j["degree"] = degree ? json(degree->str()) : json(nullptr);
  return j;
}

json report_json(const H1Report& r) {
  json reps = json::array();
  for (const auto& rep : r.representatives)
    reps.push_back({{"label", rep.label}, {"table", table_json(rep.table.map, rep.table.degree, "derivation")}});
  return {{"check", "h1"},
          {"variant", to_string(r.variant)},
          {"degree", r.degree.str()},
          {"radius", r.radius},
          {"value_radius", r.value_radius},
          {"inner_support", r.inner_support},
          {"unknowns", r.unknowns},
          {"constraints", r.constraints},
          {"dim_derivations", r.dim_derivations},
          {"dim_inner", r.dim_inner},
          {"quotient_dim", r.quotient_dim},
          {"representatives", reps}};
}

SymbolTable table_from_json(const json& j, const ConfigPtr& fallback, std::optional<Rational>* degree) {
  const ConfigPtr cfg = j.contains("config") ? config_from_json(j.at("config")) : fallback;
  if (!cfg) throw UsageError("table file has no config block and no config was given");
  const std::size_t window = j.at("window").get<std::size_t>();
  SymbolTable t(cfg, window);
  for (const auto& s : basis_symbols(*cfg, window)) t.assign(s, Tensor2(cfg));
  for (const auto& [key, value] : j.at("assignments").items())
    t.assign(parse_symbol(key, cfg), parse_tensor2(value.get<std::string>(), cfg));
  if (degree) {
    *degree = std::nullopt;
    if (j.contains("degree") && !j.at("degree").is_null()) {
      const auto& d = j.at("degree");
      *degree = Rational::parse(d.is_string() ? d.get<std::string>() : d.dump());
    }
  }
  return t;
}

namespace {

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read table file " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError("table file " + path.string() + " is not valid JSON: " + e.what());
  }
}

}  // namespace

CobracketTable read_cobracket_table(const std::filesystem::path& path, const ConfigPtr& fallback) {
  CobracketTable t;
  t.map = table_from_json(read_json_file(path), fallback);
  t.provenance = Explicit{};
  return t;
}

DerivationTable read_derivation_table(const std::filesystem::path& path, const ConfigPtr& fallback) {
  DerivationTable d;
  d.map = table_from_json(read_json_file(path), fallback, &d.degree);
  return d;
}

void write_json_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path.string());
  out << j.dump(2) << "\n";
}

}  // namespace hv
