#include "hv/table.hpp"

#include "hv/format.hpp"

namespace hv {

SymbolTable SymbolTable::generated(ConfigPtr config, std::size_t window, Generator formula) {
  SymbolTable t(config, window);
  for (const auto& s : basis_symbols(*config, window)) t.assign(s, formula(s));
  t.formula_ = std::move(formula);
  return t;
}

void SymbolTable::assign(const BasisSymbol& s, Tensor2 value) {
  validate_symbol(*config_, s);
  value.bind(config_);
  values_.insert_or_assign(s, std::move(value));
}

Tensor2 SymbolTable::at(const BasisSymbol& s) const {
  if (auto it = values_.find(s); it != values_.end()) return it->second;
  if (formula_) return formula_(s);
  throw CoverageError("table does not cover " + to_string(s) + " (window " + std::to_string(window_) + ")");
}

Tensor2 SymbolTable::apply(const Element& x) const {
  Tensor2 out(config_);
  for (const auto& [s, c] : x) out += c * at(s);
  return out;
}

SymbolTable& SymbolTable::operator+=(const SymbolTable& other) {
  if (!config_) {
    *this = other;
    return *this;
  }
  if (!same_config(config_, other.config_)) throw UsageError("tables belong to different algebra configurations");
  window_ = std::min(window_, other.window_);
  std::map<BasisSymbol, Tensor2> merged;
  for (const auto& s : basis_symbols(*config_, window_)) {
    if (!covers(s) || !other.covers(s)) continue;
    merged.emplace(s, at(s) + other.at(s));
  }
  if (formula_ && other.formula_) {
    formula_ = [a = formula_, b = other.formula_](const BasisSymbol& s) { return a(s) + b(s); };
  } else {
    formula_ = nullptr;
  }
  values_ = std::move(merged);
  return *this;
}

}  // namespace hv
