#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "hv/group.hpp"

namespace hv {

enum class Variant { full, centerless };

/// Central term of [L_x, I_y] at x + y = 0.
///  - paper:    (x^2 - x) C_L
///  - standard: (x^2 + x) C_LI
///  - cubic:    (x^3 - x) C_L, not a 2-cocycle; exists so the axiom
///              verifier can be shown to catch a broken presentation.
enum class MixedCocycle { paper, standard, cubic };

struct AlgebraConfig {
  GroupSpec group = GroupSpec::integers();
  Variant variant = Variant::full;
  MixedCocycle mixed_cocycle = MixedCocycle::paper;

  friend bool operator==(const AlgebraConfig&, const AlgebraConfig&) = default;
};

using ConfigPtr = std::shared_ptr<const AlgebraConfig>;

inline ConfigPtr make_config(GroupSpec group = GroupSpec::integers(), Variant variant = Variant::full,
                             MixedCocycle cocycle = MixedCocycle::paper) {
  return std::make_shared<const AlgebraConfig>(AlgebraConfig{std::move(group), variant, cocycle});
}

std::string to_string(Variant v);
std::string to_string(MixedCocycle c);
Variant parse_variant(std::string_view s);
MixedCocycle parse_mixed_cocycle(std::string_view s);

/// Same config object or equal contents.
inline bool same_config(const ConfigPtr& a, const ConfigPtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace hv
