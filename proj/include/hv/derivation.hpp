#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hv/report.hpp"
#include "hv/table.hpp"

namespace hv {

/// u_inn: x ↦ x·u on window(window); homogeneous of grade(u) when u is.
DerivationTable inner_derivation(const Tensor2& u, std::size_t window);

/// λ⊗C: w1·L(α) + w2·I(α) + δ_{α,0}Z ↦ λ(1 − δ_{α,0})·w1·I(α)⊗C.
DerivationTable lambda_outer(const Rational& lambda, const Element& central, std::size_t window);
/// C⊗η: the mirrored family, L(α) ↦ η·C⊗I(α) for α ≠ 0.
DerivationTable mirrored_outer(const Element& central, const Rational& eta, std::size_t window);

/// D([x,y]) = x·D(y) − y·D(x) modulo F(C⊗C) for all basis pairs of
/// window(radius). Explicit tables need window ≥ radius + 1 (CoverageError
/// otherwise); pairs whose bracket leaves an explicit table are skipped.
CheckReport derivation_check(const DerivationTable& d, std::size_t radius);

/// Splits D into homogeneous parts by degree = grade(value) − grade(symbol).
/// Every part is explicit on the tabled symbols of D and the parts re-sum to D.
std::map<Rational, DerivationTable> homogeneous_split(const DerivationTable& d);

/// u = α⁻¹·D(L(0)) for D homogeneous of degree α ≠ 0, after confirming
/// D(ω) = ω·u (modulo F(C⊗C)) on every tabled ω. Throws PreconditionError for
/// α = 0, a declared degree other than α, or a violating ω.
Tensor2 claim2_representative(const DerivationTable& d, const Rational& alpha);

/// (α+β)·D(ω_β) − ω_β·D(L(0)) = β·D(ω_β), exactly, on every tabled basis ω_β.
CheckReport grading_identity_check(const DerivationTable& d, const Rational& alpha);

struct InnerSolveResult {
  bool feasible = false;
  Tensor2 u;
  std::optional<SolverCertificate> certificate;
  std::size_t unknowns = 0;
  std::size_t equations = 0;
};

/// Exact solve of x·u = D(x) modulo F(C⊗C) for all basis probes x of
/// window(probe_radius), with u supported on pairs of basis symbols from
/// window(support_radius) (central⊗central coefficients fixed to zero).
/// The probe radius defaults to the table window. Infeasibility means "not
/// inner within this support", nothing more. Throws PreconditionError if D
/// fails derivation_check on the probes.
InnerSolveResult solve_inner(const DerivationTable& d, std::size_t support_radius,
                             std::optional<std::size_t> probe_radius = std::nullopt);

template <class Tensor>
struct KernelCertificate {
  std::size_t probe_radius = 0;
  std::size_t span_rank = 0;  // dimension of the span actually searched
  std::vector<Tensor> basis;  // basis of the common kernel inside the span
};

/// Basis of {c ∈ span : x·c = 0 for every basis probe x in window(probe_radius)}.
KernelCertificate<Tensor2> common_kernel(const ConfigPtr& config, std::size_t probe_radius,
                                         const std::vector<Tensor2>& span);
KernelCertificate<Tensor3> common_kernel(const ConfigPtr& config, std::size_t probe_radius,
                                         const std::vector<Tensor3>& span);

struct LabeledTable {
  std::string label;
  DerivationTable table;
};

/// Window statistics for H¹(L, L⊗L) in one degree.
///
/// Unknowns are the coefficients of D(s) for every basis symbol s of
/// window(radius), with values supported on pairs from window(2·radius) of
/// total grade degree + grade(s), central⊗central excluded. Constraints are the
/// derivation identity on all basis pairs of window(radius) whose bracket stays
/// among the tabled symbols. Inner tables come from u supported on
/// window(radius). The coset representatives list the λ⊗C and C⊗η tables
/// first whenever they are new modulo the inner space.
struct H1Report {
  Variant variant = Variant::full;
  Rational degree;
  std::size_t radius = 0;
  std::size_t value_radius = 0;
  std::size_t inner_support = 0;
  std::size_t unknowns = 0;
  std::size_t constraints = 0;
  std::size_t dim_derivations = 0;
  std::size_t dim_inner = 0;
  std::size_t quotient_dim = 0;
  std::vector<LabeledTable> representatives;
};

/// Throws UsageError for radius < 2.
H1Report h1_probe(const ConfigPtr& config, std::size_t radius, const Rational& degree);

}  // namespace hv
