#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hv/report.hpp"
#include "hv/table.hpp"

namespace hv {

/// Δ_r(x) = x·r.
Tensor2 delta_r(const Tensor2& r, const Element& x);

/// Coboundary cobracket table of r on window(window); evaluable anywhere.
CobracketTable from_r(const Tensor2& r, std::size_t window);

/// The classical Yang–Baxter defect c(r) = [r12,r13] + [r12,r23] + [r13,r23],
/// evaluated inside L⊗L⊗L through
///   [r12,r13] = Σ [a_i,a_j]⊗b_i⊗b_j,
///   [r12,r23] = Σ a_i⊗[b_i,a_j]⊗b_j,
///   [r13,r23] = Σ a_i⊗a_j⊗[b_i,b_j].
struct YBDefect {
  Tensor3 value;
  bool vanishes() const { return value.is_zero(); }
};

YBDefect cybe_defect(const Tensor2& r);

/// x·c(r) = 0 for every basis probe x in window(probe_radius). Probes run in
/// order of increasing |grade| and the witness is the first with nonzero
/// action. Throws PreconditionError if r is not antisymmetric.
CheckReport mybe_check(const Tensor2& r, std::size_t probe_radius);

/// (1 + ξ + ξ²)(1⊗Δ)Δ(x).
Tensor3 co_jacobi(const SymbolTable& delta, const Element& x);

struct BialgebraReport {
  CheckReport antisymmetry;
  CheckReport co_jacobi;
  CheckReport compatibility;
  bool passed() const { return antisymmetry.passed && co_jacobi.passed && compatibility.passed; }
};

/// Anti-commutativity, co-Jacobi and the 1-cocycle compatibility
/// Δ[x,y] = x·Δy − y·Δx on all basis symbols of window(radius).
///
/// Compatibility is compared modulo F(C⊗C) in the full variant; the other two
/// are exact. Explicit tables need window ≥ radius + 1 (else CoverageError);
/// pairs whose bracket leaves an explicit table are skipped, and co-Jacobi
/// evaluations that reach an uncovered symbol throw CoverageError.
BialgebraReport bialgebra_axiom_check(const CobracketTable& table, std::size_t radius);

struct DrinfeldResult {
  bool equal = false;
  Tensor3 lhs;  // (1 + ξ + ξ²)(1⊗Δ_r)Δ_r(x)
  Tensor3 rhs;  // x·c(r)
};

/// Both sides of (1 + ξ + ξ²)(1⊗Δ_r)Δ_r(x) = x·c(r), exactly.
DrinfeldResult drinfeld_identity_check(const Tensor2& r, const Element& x);

/// r = a∧b for a pair with [a, b] = b; then c(r) = 0. Throws
/// PreconditionError showing the actual bracket otherwise.
Tensor2 triangular_pair(const Element& a, const Element& b);

/// σ = λ⊗C − C⊗η. C must be central and the variant full.
CobracketTable sigma_family(const Rational& lambda, const Element& central, const Rational& eta, std::size_t window);

/// The antisymmetric member σ = λ⊗C − C⊗λ.
CobracketTable sigma_cobracket(const Rational& lambda, const Element& central, std::size_t window);

/// Coefficients of λ⊗C and C⊗η recovered for one central basis symbol.
struct SigmaTerm {
  BasisSymbol central;
  Rational lambda;
  Rational eta;
};

struct DecomposeResult {
  bool feasible = false;
  Tensor2 r;                     // antisymmetric, central∧central part zeroed
  std::vector<SigmaTerm> sigma;  // nonzero families only
  std::optional<SolverCertificate> certificate;
  std::size_t unknowns = 0;
  std::size_t equations = 0;
};

/// Solves Δ(x) = x·r + σ(x) modulo F(C⊗C) on every tabled symbol x, for an
/// antisymmetric r supported on basis symbols of window(support_radius) and
/// σ in the span of the λ⊗C and C⊗η families. Table values must be
/// antisymmetric (PreconditionError otherwise); a table that is not of this
/// form yields an infeasibility certificate.
DecomposeResult cobracket_decompose(const CobracketTable& table, std::size_t support_radius);

/// Center basis I(0), C_L, C_I, C_LI of the full algebra.
std::vector<BasisSymbol> center_basis();

}  // namespace hv
