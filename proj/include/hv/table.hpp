#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <variant>

#include "hv/tensor.hpp"

namespace hv {

/// A linear map L → L⊗L given by its values on basis symbols.
///
/// Values are assigned on every basis symbol of window(window()). A table
/// built from a closed form also keeps that formula, so it can be evaluated
/// on symbols outside its window; an explicit table cannot, and asking for an
/// uncovered symbol throws CoverageError naming it.
class SymbolTable {
 public:
  using Generator = std::function<Tensor2(const BasisSymbol&)>;

  SymbolTable() = default;
  SymbolTable(ConfigPtr config, std::size_t window) : config_(std::move(config)), window_(window) {}

  /// Table of `formula`, materialized on window(window).
  static SymbolTable generated(ConfigPtr config, std::size_t window, Generator formula);

  const ConfigPtr& config() const { return config_; }
  std::size_t window() const { return window_; }
  const std::map<BasisSymbol, Tensor2>& assignments() const { return values_; }
  bool has_formula() const { return static_cast<bool>(formula_); }

  void assign(const BasisSymbol& s, Tensor2 value);

  bool covers(const BasisSymbol& s) const { return formula_ || values_.contains(s); }
  Tensor2 at(const BasisSymbol& s) const;
  Tensor2 apply(const Element& x) const;

  /// Pointwise sum; keeps a closed form only if both operands have one.
  SymbolTable& operator+=(const SymbolTable& other);

  /// Drops the closed form, leaving an explicit table.
  void forget_formula() { formula_ = nullptr; }

 private:
  ConfigPtr config_;
  std::size_t window_ = 0;
  std::map<BasisSymbol, Tensor2> values_;
  Generator formula_;
};

struct FromR {
  Tensor2 r;
};
/// σ = λ⊗C − C⊗η: L(α) ↦ λ·I(α)⊗C − η·C⊗I(α) for α ≠ 0, zero elsewhere.
struct FromSigma {
  Rational lambda;
  Element central;
  Rational eta;
};
struct Explicit {};
struct Sum {};

using Provenance = std::variant<FromR, FromSigma, Explicit, Sum>;

/// Desk-scale cobracket Δ: L → L⊗L.
struct CobracketTable {
  SymbolTable map;
  Provenance provenance = Explicit{};

  CobracketTable& operator+=(const CobracketTable& other) {
    map += other.map;
    provenance = Sum{};
    return *this;
  }
  friend CobracketTable operator+(CobracketTable a, const CobracketTable& b) { return a += b; }
};

/// Desk-scale linear map D: L → L⊗L, optionally homogeneous of `degree`.
struct DerivationTable {
  SymbolTable map;
  std::optional<Rational> degree;
};

}  // namespace hv
