#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "hv/bialgebra.hpp"
#include "hv/derivation.hpp"

namespace hv {

using json = nlohmann::json;

json config_json(const AlgebraConfig& config);
/// Reads {"generators": [...], "variant": ..., "mixed_cocycle": ...}; missing
/// keys default as in AlgebraConfig.
ConfigPtr config_from_json(const json& j);

/// {check, variant, window, status, cases, witness?, lhs?, rhs?}
json report_json(const CheckReport& r);
json report_json(const BialgebraReport& r);
json report_json(const SolverCertificate& c);
json report_json(const H1Report& r);

/// Table file layout:
///   {"kind": "cobracket" | "derivation", "config": {...}, "window": N,
///    "degree": "2" | null, "assignments": {"L(1)": "<tensor expr>", ...}}
/// Symbols of window(N) missing from "assignments" are zero.
json table_json(const SymbolTable& t, const std::optional<Rational>& degree, const std::string& kind);
SymbolTable table_from_json(const json& j, const ConfigPtr& fallback, std::optional<Rational>* degree = nullptr);

CobracketTable read_cobracket_table(const std::filesystem::path& path, const ConfigPtr& fallback);
DerivationTable read_derivation_table(const std::filesystem::path& path, const ConfigPtr& fallback);
void write_json_file(const std::filesystem::path& path, const json& j);

}  // namespace hv
