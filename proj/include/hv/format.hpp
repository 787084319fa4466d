#pragma once

#include <string>

#include "hv/tensor.hpp"

namespace hv {

/// Canonical, re-parseable text: "L(-1/2)", "C_LI", "L(0)@I(1) - I(1)@L(0)", "0".
std::string to_string(const BasisSymbol& s);
std::string to_string(const SymbolTuple<2>& k);
std::string to_string(const SymbolTuple<3>& k);

std::string format(const Element& e);
std::string format(const Tensor2& t);
std::string format(const Tensor3& t);

}  // namespace hv
