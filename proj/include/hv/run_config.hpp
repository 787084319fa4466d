#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "hv/config.hpp"

namespace hv {

/// Options shared by every CLI invocation. Loaded from a flat key=value file:
///
///   # comment
///   generators = "1/2, 1/3"
///   variant = "full"
///   mixed_cocycle = "paper"
///   radius = 3
///   seed = 42
///   format = "json"
///   jobs = 1
struct RunConfig {
  std::vector<Rational> generators{Rational(1)};
  Variant variant = Variant::full;
  MixedCocycle mixed_cocycle = MixedCocycle::paper;
  std::size_t radius = 3;
  std::uint64_t seed = 42;
  std::string format = "text";
  unsigned jobs = 1;

  /// Throws UsageError on unknown keys or invalid values.
  void set(std::string_view key, std::string_view value);

  static RunConfig parse(std::string_view text);
  static RunConfig load(const std::filesystem::path& path);

  /// Validates and builds the algebra config.
  ConfigPtr algebra() const;
};

std::vector<Rational> parse_generators(std::string_view text);

}  // namespace hv
