#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "hv/rational.hpp"

namespace hv {

/// Sparse row: strictly increasing column indices with nonzero values.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

/// Proof that a system has no solution: a combination of the original
/// equations (by insertion id) whose left side vanishes and whose right side
/// is `residual` ≠ 0.
struct InfeasibilityCertificate {
  std::size_t equation = 0;  // equation that exposed the contradiction
  SparseRow combination;     // (equation id, multiplier)
  Rational residual;
};

/// Incremental exact Gaussian elimination over the rationals.
///
/// Equations are reduced against existing pivots as they arrive; the pivot
/// of a new row is its first (lowest-index) surviving column. Back
/// substitution sets free columns to zero, so solutions are reproducible for a
/// fixed column and equation order.
class LinearSystem {
 public:
  enum class Added { independent, redundant, inconsistent };

  explicit LinearSystem(std::size_t columns, bool track_combinations = false)
      : columns_(columns), track_(track_combinations) {}

  std::size_t columns() const { return columns_; }
  std::size_t equations() const { return equations_; }
  std::size_t rank() const { return pivots_.size(); }
  bool consistent() const { return !certificate_; }
  const std::optional<InfeasibilityCertificate>& certificate() const { return certificate_; }

  /// Adds row·x = rhs. Rows may be given unsorted and with zeros.
  Added add(const SparseRow& row, const Rational& rhs = Rational(0));

  /// Reduces `row` against the current pivots and reports whether it is a
  /// combination of the rows already added (ignores right-hand sides).
  bool in_row_space(const SparseRow& row) const;

  /// Particular solution with free columns zero. Requires consistent().
  std::vector<Rational> solution() const;

  /// Basis of the null space of the coefficient matrix, one vector per free
  /// column in increasing column order.
  std::vector<std::vector<Rational>> nullspace() const;

  std::vector<std::size_t> free_columns() const;

 private:
  struct PivotRow {
    std::map<std::size_t, Rational> entries;  // leading entry is 1 at the pivot column
    Rational rhs;
    std::map<std::size_t, Rational> combination;
  };

  void reduce(std::map<std::size_t, Rational>& row, Rational& rhs, std::map<std::size_t, Rational>* comb) const;

  std::size_t columns_;
  bool track_;
  std::size_t equations_ = 0;
  std::map<std::size_t, PivotRow> pivots_;
  std::optional<InfeasibilityCertificate> certificate_;
};

}  // namespace hv
