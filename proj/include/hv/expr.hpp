#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "hv/tensor.hpp"

namespace hv {

/// Result of parsing: an element or a tensor of rank 2 or 3. The literal "0"
/// parses as the zero element.
using ParsedValue = std::variant<Element, Tensor2, Tensor3>;

/// Grammar (whitespace-insensitive):
///   expr    := [sign] term (sign term)*
///   term    := [rational "*"] product | "0"
///   product := factor ("@" factor)*          at most three factors in total
///   factor  := "L(" rational ")" | "I(" rational ")" | "C_L" | "C_I" | "C_LI"
///            | "(" expr ")" | "wedge(" expr "," expr ")"
///   rational:= ["-"] digits ["/" digits]
/// Throws ParseError carrying the byte offset of the problem: syntax errors,
/// indices outside the group, central symbols in the centerless variant, and
/// sums of mismatched rank.
ParsedValue parse_element(std::string_view src, const ConfigPtr& config);

Element parse_algebra_element(std::string_view src, const ConfigPtr& config);
Tensor2 parse_tensor2(std::string_view src, const ConfigPtr& config);
Tensor3 parse_tensor3(std::string_view src, const ConfigPtr& config);
BasisSymbol parse_symbol(std::string_view src, const ConfigPtr& config);

std::string format_value(const ParsedValue& v);

}  // namespace hv
