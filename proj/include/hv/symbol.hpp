#pragma once

#include <array>
#include <compare>
#include <cstdint>

#include "hv/rational.hpp"

namespace hv {

enum class Kind : std::uint8_t { L, I, CL, CI, CLI };

/// A basis vector: L(x), I(x) or one of the central symbols.
/// Central symbols carry index 0, which is also their grade.
struct BasisSymbol {
  Kind kind = Kind::L;
  Rational index;

  static BasisSymbol L(Rational x) { return {Kind::L, std::move(x)}; }
  static BasisSymbol I(Rational x) { return {Kind::I, std::move(x)}; }
  static BasisSymbol CL() { return {Kind::CL, Rational(0)}; }
  static BasisSymbol CI() { return {Kind::CI, Rational(0)}; }
  static BasisSymbol CLI() { return {Kind::CLI, Rational(0)}; }

  bool has_index() const { return kind == Kind::L || kind == Kind::I; }
  const Rational& grade() const { return index; }

  /// Member of the center span{I(0), C_L, C_I, C_LI} of the full algebra.
  bool is_central() const { return !has_index() || (kind == Kind::I && index.is_zero()); }

  friend bool operator==(const BasisSymbol&, const BasisSymbol&) = default;
  /// Grade first, then kind L < I < C_L < C_I < C_LI.
  friend std::strong_ordering operator<=>(const BasisSymbol& a, const BasisSymbol& b) {
    if (auto c = a.index <=> b.index; c != 0) return c;
    return a.kind <=> b.kind;
  }
};

template <std::size_t N>
using SymbolTuple = std::array<BasisSymbol, N>;

template <std::size_t N>
Rational grade_of(const SymbolTuple<N>& key) {
  Rational g;
  for (const auto& s : key) g += s.index;
  return g;
}

inline const Rational& grade_of(const BasisSymbol& s) { return s.index; }

template <std::size_t N>
bool all_central(const SymbolTuple<N>& key) {
  for (const auto& s : key)
    if (!s.is_central()) return false;
  return true;
}

inline bool all_central(const BasisSymbol& s) { return s.is_central(); }

}  // namespace hv
