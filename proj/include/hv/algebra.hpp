#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hv/combination.hpp"
#include "hv/report.hpp"
#include "hv/symbol.hpp"

namespace hv {

/// An element of the generalized Heisenberg–Virasoro algebra (or of its
/// centerless quotient, depending on the bound config).
using Element = Combination<BasisSymbol>;

/// Throws UsageError if `s` does not exist in `config` (index outside the
/// group, or a central symbol in the centerless variant).
void validate_symbol(const AlgebraConfig& config, const BasisSymbol& s);

Element make_element(const ConfigPtr& config, const BasisSymbol& s, const Rational& coeff = Rational(1));
Element L(const ConfigPtr& config, const Rational& x);
Element I(const ConfigPtr& config, const Rational& x);
Element C_L(const ConfigPtr& config);
Element C_I(const ConfigPtr& config);
Element C_LI(const ConfigPtr& config);

/// Structure constants: appends [a, b] into `out`, scaled by `scale`.
void bracket_into(const AlgebraConfig& config, const BasisSymbol& a, const BasisSymbol& b, const Rational& scale,
                  Element& out);

Element bracket(const Element& a, const Element& b);

/// Homogeneous parts by grade; central symbols sit in grade 0.
std::vector<std::pair<Rational, Element>> grade_decompose(const Element& a);

/// Image in the centerless quotient: C_L, C_I, C_LI and I(0) are dropped.
Element quotient_centerless(const Element& a);

/// Config of the centerless quotient paired with a full-variant config.
ConfigPtr centerless_of(const ConfigPtr& config);

bool is_central(const Element& a);

/// Basis symbols with index in window(radius): L(x), I(x) per index, then the
/// centrals (full variant), in canonical symbol order.
std::vector<BasisSymbol> basis_symbols(const AlgebraConfig& config, std::size_t radius);

/// Exhaustive skew-symmetry and Jacobi check over all basis pairs/triples in
/// window(radius). `jobs` > 1 partitions the triple scan across threads;
/// the reported witness is always the first in scan order.
CheckReport verify_algebra_axioms(const ConfigPtr& config, std::size_t radius, unsigned jobs = 1);

}  // namespace hv
