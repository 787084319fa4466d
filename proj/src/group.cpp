#include "hv/group.hpp"

#include <algorithm>

#include "hv/errors.hpp"

namespace hv {

GroupSpec::GroupSpec(std::vector<Rational> generators) : generators_(std::move(generators)) {
  if (generators_.empty()) throw UsageError("group needs at least one generator");
  common_denominator_ = 1;
  for (const auto& g : generators_) {
    if (g.is_zero()) throw UsageError("group generators must be nonzero");
    mpz_class den = g.raw().get_den();
    mpz_lcm(common_denominator_.get_mpz_t(), common_denominator_.get_mpz_t(), den.get_mpz_t());
  }
  step_ = 0;
  for (const auto& g : generators_) {
    mpz_class scaled = g.raw().get_num() * (common_denominator_ / g.raw().get_den());
    mpz_gcd(step_.get_mpz_t(), step_.get_mpz_t(), scaled.get_mpz_t());
  }
}

bool GroupSpec::contains(const Rational& x) const {
  mpq_class scaled = x.raw() * common_denominator_;
  scaled.canonicalize();
  if (scaled.get_den() != 1) return false;
  return mpz_divisible_p(scaled.get_num().get_mpz_t(), step_.get_mpz_t()) != 0;
}

std::vector<Rational> GroupSpec::window(std::size_t radius) const {
  std::vector<Rational> values{Rational(0)};
  const long r = static_cast<long>(radius);
  for (const auto& g : generators_) {
    std::vector<Rational> next;
    next.reserve(values.size() * (2 * radius + 1));
    for (const auto& v : values)
      for (long c = -r; c <= r; ++c) next.push_back(v + g * Rational(c));
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    values = std::move(next);
  }
  return values;
}

}  // namespace hv
