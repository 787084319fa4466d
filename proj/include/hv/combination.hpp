#pragma once

#include <map>
#include <utility>

#include "hv/config.hpp"
#include "hv/errors.hpp"
#include "hv/rational.hpp"

namespace hv {

/// Finite-support rational linear combination of keys, bound to an algebra
/// config. Zero coefficients are never stored. A default-constructed
/// combination is an unbound zero that adopts the config of whatever it is
/// combined with.
template <class Key>
class Combination {
 public:
  using key_type = Key;
  using Terms = std::map<Key, Rational>;

  Combination() = default;
  explicit Combination(ConfigPtr config) : config_(std::move(config)) {}
  Combination(ConfigPtr config, Key key, const Rational& coeff = Rational(1)) : config_(std::move(config)) {
    add_term(key, coeff);
  }

  const ConfigPtr& config() const { return config_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  Rational coeff(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Key& key, const Rational& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void bind(const ConfigPtr& other) {
    if (!other) return;
    if (!config_) {
      config_ = other;
    } else if (!same_config(config_, other)) {
      throw UsageError("operands belong to different algebra configurations");
    }
  }

  Combination& operator+=(const Combination& o) {
    bind(o.config_);
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  Combination& operator-=(const Combination& o) {
    bind(o.config_);
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  Combination& operator*=(const Rational& s) {
    if (s.is_zero()) {
      terms_.clear();
    } else {
      for (auto& [k, c] : terms_) c *= s;
    }
    return *this;
  }

  friend Combination operator+(Combination a, const Combination& b) { return a += b; }
  friend Combination operator-(Combination a, const Combination& b) { return a -= b; }
  friend Combination operator*(const Rational& s, Combination a) { return a *= s; }
  friend Combination operator*(Combination a, const Rational& s) { return a *= s; }
  Combination operator-() const {
    Combination r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
  }

  /// Equal as vectors; configs are not compared.
  friend bool operator==(const Combination& a, const Combination& b) { return a.terms_ == b.terms_; }

  /// Keeps only terms satisfying `pred`.
  template <class Pred>
  Combination filtered(Pred pred) const {
    Combination r(config_);
    for (const auto& [k, c] : terms_)
      if (pred(k)) r.terms_.emplace(k, c);
    return r;
  }

 private:
  ConfigPtr config_;
  Terms terms_;
};

}  // namespace hv
