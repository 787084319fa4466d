#include "hv/format.hpp"

namespace hv {

std::string to_string(const BasisSymbol& s) {
  switch (s.kind) {
    case Kind::L: return "L(" + s.index.str() + ")";
    case Kind::I: return "I(" + s.index.str() + ")";
    case Kind::CL: return "C_L";
    case Kind::CI: return "C_I";
    case Kind::CLI: return "C_LI";
  }
  return {};
}

std::string to_string(const SymbolTuple<2>& k) { return to_string(k[0]) + "@" + to_string(k[1]); }

std::string to_string(const SymbolTuple<3>& k) {
  return to_string(k[0]) + "@" + to_string(k[1]) + "@" + to_string(k[2]);
}

namespace {

template <class Key>
std::string format_terms(const Combination<Key>& v) {
  if (v.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : v) {
    const Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    if (mag != Rational(1)) out += mag.str() + "*";
    out += to_string(k);
    first = false;
  }
  return out;
}

}  // namespace

std::string format(const Element& e) { return format_terms(e); }
std::string format(const Tensor2& t) { return format_terms(t); }
std::string format(const Tensor3& t) { return format_terms(t); }

}  // namespace hv
