#pragma once

#include <cstddef>
#include <vector>

#include "hv/rational.hpp"

namespace hv {

/// A finitely generated subgroup of the rationals. The embedding into the
/// rationals is the nondegenerate pairing, so an index is its own value.
class GroupSpec {
 public:
  /// Throws UsageError if the list is empty or holds a zero generator.
  explicit GroupSpec(std::vector<Rational> generators);

  static GroupSpec integers() { return GroupSpec({Rational(1)}); }

  const std::vector<Rational>& generators() const { return generators_; }

  /// Exact membership: x is an integer combination of the generators.
  bool contains(const Rational& x) const;

  /// All sums of generators with integer coefficients of absolute value at
  /// most `radius`, deduplicated and sorted ascending.
  std::vector<Rational> window(std::size_t radius) const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

 private:
  std::vector<Rational> generators_;
  // Γ·common_denominator_ = step_·ℤ
  mpz_class common_denominator_;
  mpz_class step_;
};

inline bool gamma_member(const Rational& x, const GroupSpec& g) { return g.contains(x); }

}  // namespace hv
