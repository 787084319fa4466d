#include "hv/linear_system.hpp"

#include "hv/errors.hpp"

namespace hv {

namespace {

void axpy(std::map<std::size_t, Rational>& target, const Rational& factor, const std::map<std::size_t, Rational>& src) {
  for (const auto& [col, v] : src) {
    auto [it, inserted] = target.try_emplace(col, Rational(0));
    it->second -= factor * v;
    if (it->second.is_zero()) target.erase(it);
  }
}

}  // namespace

void LinearSystem::reduce(std::map<std::size_t, Rational>& row, Rational& rhs,
                          std::map<std::size_t, Rational>* comb) const {
  auto it = row.begin();
  while (it != row.end()) {
    auto p = pivots_.find(it->first);
    if (p == pivots_.end()) {
      ++it;
      continue;
    }
    const std::size_t col = it->first;
    const Rational factor = it->second;
    const PivotRow& pr = p->second;
    axpy(row, factor, pr.entries);
    rhs -= factor * pr.rhs;
    if (comb) axpy(*comb, factor, pr.combination);
    // Pivot rows only hold columns at or after their pivot.
    it = row.upper_bound(col);
  }
}

LinearSystem::Added LinearSystem::add(const SparseRow& row, const Rational& rhs) {
  const std::size_t id = equations_++;
  std::map<std::size_t, Rational> work;
  for (const auto& [col, v] : row) {
    if (col >= columns_) throw UsageError("column out of range in linear system");
    if (v.is_zero()) continue;
    auto [it, inserted] = work.try_emplace(col, v);
    if (!inserted) {
      it->second += v;
      if (it->second.is_zero()) work.erase(it);
    }
  }
  Rational b = rhs;
  std::map<std::size_t, Rational> comb;
  if (track_) comb.emplace(id, Rational(1));
  reduce(work, b, track_ ? &comb : nullptr);

  if (work.empty()) {
    if (b.is_zero()) return Added::redundant;
    if (!certificate_) {
      InfeasibilityCertificate cert;
      cert.equation = id;
      cert.residual = b;
      cert.combination.assign(comb.begin(), comb.end());
      certificate_ = std::move(cert);
    }
    return Added::inconsistent;
  }

  const std::size_t lead = work.begin()->first;
  const Rational inv = work.begin()->second.inverse();
  for (auto& [col, v] : work) v *= inv;
  b *= inv;
  if (track_)
    for (auto& [k, v] : comb) v *= inv;
  pivots_.emplace(lead, PivotRow{std::move(work), std::move(b), std::move(comb)});
  return Added::independent;
}

bool LinearSystem::in_row_space(const SparseRow& row) const {
  std::map<std::size_t, Rational> work;
  for (const auto& [col, v] : row)
    if (!v.is_zero()) work[col] += v;
  std::erase_if(work, [](const auto& e) { return e.second.is_zero(); });
  Rational b;
  reduce(work, b, nullptr);
  return work.empty();
}

std::vector<Rational> LinearSystem::solution() const {
  if (certificate_) throw PreconditionError("linear system is inconsistent");
  std::vector<Rational> x(columns_);
  for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
    Rational v = it->second.rhs;
    for (const auto& [col, a] : it->second.entries)
      if (col != it->first && !x[col].is_zero()) v -= a * x[col];
    x[it->first] = v;
  }
  return x;
}

std::vector<std::size_t> LinearSystem::free_columns() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < columns_; ++c)
    if (!pivots_.contains(c)) out.push_back(c);
  return out;
}

std::vector<std::vector<Rational>> LinearSystem::nullspace() const {
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f : free_columns()) {
    std::vector<Rational> x(columns_);
    x[f] = Rational(1);
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
      if (it->first > f) continue;  // entries at columns > f are all zero
      Rational v;
      for (const auto& [col, a] : it->second.entries)
        if (col != it->first && !x[col].is_zero()) v -= a * x[col];
      x[it->first] = v;
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace hv
