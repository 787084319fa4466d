#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hv/config.hpp"

namespace hv {

/// Outcome of an exhaustive identity check. On failure `witness` names the
/// first violating input and `lhs`/`rhs` hold both sides as re-parseable text.
struct CheckReport {
  std::string check;
  Variant variant = Variant::full;
  std::size_t window = 0;
  bool passed = true;
  std::string witness;
  std::string lhs;
  std::string rhs;
  std::size_t cases = 0;
};

}  // namespace hv

namespace hv {

/// Human-readable infeasibility certificate from an exact solve: the
/// equation that became contradictory, the multipliers of the original
/// equations that combine to 0 = residual, and the residual itself.
struct SolverCertificate {
  std::string equation;
  std::string residual;
  std::vector<std::pair<std::string, std::string>> combination;
  std::string support;  // "support radius s, probes radius p"
};

}  // namespace hv
