#include "hv/tensor.hpp"

namespace hv {

Tensor2 tensor(const Element& a, const Element& b) {
  Tensor2 out(a.config());
  out.bind(b.config());
  for (const auto& [sa, ca] : a)
    for (const auto& [sb, cb] : b) out.add_term({sa, sb}, ca * cb);
  return out;
}

Tensor3 tensor(const Element& a, const Element& b, const Element& c) {
  Tensor3 out(a.config());
  out.bind(b.config());
  out.bind(c.config());
  for (const auto& [sa, ca] : a)
    for (const auto& [sb, cb] : b)
      for (const auto& [sc, cc] : c) out.add_term({sa, sb, sc}, ca * cb * cc);
  return out;
}

Tensor2 wedge(const Element& a, const Element& b) { return tensor(a, b) - tensor(b, a); }

Tensor2 twist(const Tensor2& t) {
  Tensor2 out(t.config());
  for (const auto& [k, c] : t) out.add_term({k[1], k[0]}, c);
  return out;
}

Tensor3 cyclic(const Tensor3& t) {
  Tensor3 out(t.config());
  for (const auto& [k, c] : t) out.add_term({k[1], k[2], k[0]}, c);
  return out;
}

bool is_antisymmetric(const Tensor2& t) {
  for (const auto& [k, c] : t)
    if (t.coeff({k[1], k[0]}) != -c) return false;
  return true;
}

namespace {

template <std::size_t N>
void act_into(const AlgebraConfig& cfg, const BasisSymbol& x, const Rational& scale,
              const Combination<SymbolTuple<N>>& t, Combination<SymbolTuple<N>>& out) {
  Element slot;
  for (const auto& [k, c] : t) {
    for (std::size_t i = 0; i < N; ++i) {
      slot = Element();
      bracket_into(cfg, x, k[i], scale * c, slot);
      for (const auto& [s, v] : slot) {
        auto key = k;
        key[i] = s;
        out.add_term(key, v);
      }
    }
  }
}

template <std::size_t N>
Combination<SymbolTuple<N>> act(const Element& x, const Combination<SymbolTuple<N>>& t) {
  Combination<SymbolTuple<N>> out(t.config());
  out.bind(x.config());
  if (!out.config()) return out;
  for (const auto& [s, c] : x) act_into(*out.config(), s, c, t, out);
  return out;
}

}  // namespace

Tensor2 diag_act(const Element& x, const Tensor2& t) { return act(x, t); }
Tensor3 diag_act(const Element& x, const Tensor3& t) { return act(x, t); }

Tensor2 diag_act(const ConfigPtr& config, const BasisSymbol& x, const Tensor2& t) {
  Tensor2 out(config);
  out.bind(t.config());
  act_into(*config, x, Rational(1), t, out);
  return out;
}

Tensor3 diag_act(const ConfigPtr& config, const BasisSymbol& x, const Tensor3& t) {
  Tensor3 out(config);
  out.bind(t.config());
  act_into(*config, x, Rational(1), t, out);
  return out;
}

}  // namespace hv
