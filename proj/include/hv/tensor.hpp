#pragma once

#include "hv/algebra.hpp"

namespace hv {

/// Elements of L⊗L and L⊗L⊗L, keyed by ordered symbol tuples.
using Tensor2 = Combination<SymbolTuple<2>>;
using Tensor3 = Combination<SymbolTuple<3>>;

Tensor2 tensor(const Element& a, const Element& b);
Tensor3 tensor(const Element& a, const Element& b, const Element& c);

/// a⊗b − b⊗a.
Tensor2 wedge(const Element& a, const Element& b);

/// x⊗y ↦ y⊗x.
Tensor2 twist(const Tensor2& t);
/// x⊗y⊗z ↦ y⊗z⊗x.
Tensor3 cyclic(const Tensor3& t);

/// twist(t) == -t, i.e. t ∈ Im(1−τ) over a field of characteristic zero.
bool is_antisymmetric(const Tensor2& t);

/// Diagonal adjoint action x·(a⊗b) = [x,a]⊗b + a⊗[x,b], and slot-wise on triples.
Tensor2 diag_act(const Element& x, const Tensor2& t);
Tensor3 diag_act(const Element& x, const Tensor3& t);

Tensor2 diag_act(const ConfigPtr& config, const BasisSymbol& x, const Tensor2& t);
Tensor3 diag_act(const ConfigPtr& config, const BasisSymbol& x, const Tensor3& t);

inline Tensor2 diag_act2(const Element& x, const Tensor2& t) { return diag_act(x, t); }
inline Tensor3 diag_act3(const Element& x, const Tensor3& t) { return diag_act(x, t); }

/// Drops every term whose slots are all central (the quotient by F(C⊗C) and
/// its triple analogue). Identity in the centerless variant.
template <class Key>
Combination<Key> modulo_central(const Combination<Key>& t) {
  return t.filtered([](const Key& k) { return !all_central(k); });
}

/// Homogeneous parts of a tensor by total grade.
template <class Key>
std::vector<std::pair<Rational, Combination<Key>>> grade_parts(const Combination<Key>& t) {
  std::map<Rational, Combination<Key>> parts;
  for (const auto& [k, c] : t) {
    auto [it, _] = parts.try_emplace(grade_of(k), Combination<Key>(t.config()));
    it->second.add_term(k, c);
  }
  return {parts.begin(), parts.end()};
}

}  // namespace hv
