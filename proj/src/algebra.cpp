#include "hv/algebra.hpp"

#include <algorithm>
#include <thread>

#include "hv/format.hpp"

namespace hv {

std::string to_string(Variant v) { return v == Variant::full ? "full" : "centerless"; }

std::string to_string(MixedCocycle c) {
  switch (c) {
    case MixedCocycle::paper: return "paper";
    case MixedCocycle::standard: return "standard";
    case MixedCocycle::cubic: return "cubic";
  }
  return "paper";
}

Variant parse_variant(std::string_view s) {
  if (s == "full") return Variant::full;
  if (s == "centerless") return Variant::centerless;
  throw UsageError("unknown variant '" + std::string(s) + "' (expected full|centerless)");
}

MixedCocycle parse_mixed_cocycle(std::string_view s) {
  if (s == "paper") return MixedCocycle::paper;
  if (s == "standard") return MixedCocycle::standard;
  if (s == "cubic") return MixedCocycle::cubic;
  throw UsageError("unknown mixed_cocycle '" + std::string(s) + "' (expected paper|standard|cubic)");
}

void validate_symbol(const AlgebraConfig& config, const BasisSymbol& s) {
  if (s.has_index()) {
    if (!config.group.contains(s.index))
      throw UsageError("index " + s.index.str() + " is not in the index group");
  } else if (!s.index.is_zero()) {
    throw UsageError("central symbols carry no index");
  }
  if (config.variant == Variant::centerless && s.is_central())
    throw UsageError(to_string(s) + " does not exist in the centerless algebra");
}

Element make_element(const ConfigPtr& config, const BasisSymbol& s, const Rational& coeff) {
  validate_symbol(*config, s);
  return Element(config, s, coeff);
}

Element L(const ConfigPtr& config, const Rational& x) { return make_element(config, BasisSymbol::L(x)); }
Element I(const ConfigPtr& config, const Rational& x) { return make_element(config, BasisSymbol::I(x)); }
Element C_L(const ConfigPtr& config) { return make_element(config, BasisSymbol::CL()); }
Element C_I(const ConfigPtr& config) { return make_element(config, BasisSymbol::CI()); }
Element C_LI(const ConfigPtr& config) { return make_element(config, BasisSymbol::CLI()); }

namespace {

// [L_x, I_y] without the sign flip for [I_y, L_x].
void mixed_into(const AlgebraConfig& config, const Rational& x, const Rational& y, const Rational& scale,
                Element& out) {
  const bool full = config.variant == Variant::full;
  const Rational s = x + y;
  if (!s.is_zero() || full) out.add_term(BasisSymbol::I(s), scale * y);
  if (!s.is_zero() || !full) return;
  switch (config.mixed_cocycle) {
    case MixedCocycle::paper: out.add_term(BasisSymbol::CL(), scale * (x * x - x)); break;
    case MixedCocycle::standard: out.add_term(BasisSymbol::CLI(), scale * (x * x + x)); break;
    case MixedCocycle::cubic: out.add_term(BasisSymbol::CL(), scale * (x * x * x - x)); break;
  }
}

}  // namespace

void bracket_into(const AlgebraConfig& config, const BasisSymbol& a, const BasisSymbol& b, const Rational& scale,
                  Element& out) {
  if (!a.has_index() || !b.has_index()) return;
  const bool full = config.variant == Variant::full;
  const Rational& x = a.index;
  const Rational& y = b.index;
  if (a.kind == Kind::L && b.kind == Kind::L) {
    const Rational s = x + y;
    out.add_term(BasisSymbol::L(s), scale * (y - x));
    if (s.is_zero() && full) out.add_term(BasisSymbol::CL(), scale * (x * x * x - x) / Rational(12));
  } else if (a.kind == Kind::I && b.kind == Kind::I) {
    if ((x + y).is_zero() && full) out.add_term(BasisSymbol::CI(), scale * y);
  } else if (a.kind == Kind::L) {
    mixed_into(config, x, y, scale, out);
  } else {
    mixed_into(config, y, x, -scale, out);
  }
}

Element bracket(const Element& a, const Element& b) {
  Element out(a.config());
  out.bind(b.config());
  if (!out.config()) return out;
  const AlgebraConfig& cfg = *out.config();
  for (const auto& [sa, ca] : a)
    for (const auto& [sb, cb] : b) bracket_into(cfg, sa, sb, ca * cb, out);
  return out;
}

std::vector<std::pair<Rational, Element>> grade_decompose(const Element& a) {
  std::vector<std::pair<Rational, Element>> parts;
  for (const auto& [s, c] : a) {
    if (parts.empty() || parts.back().first != s.grade()) parts.emplace_back(s.grade(), Element(a.config()));
    parts.back().second.add_term(s, c);
  }
  return parts;
}

ConfigPtr centerless_of(const ConfigPtr& config) {
  if (config->variant == Variant::centerless) return config;
  return make_config(config->group, Variant::centerless, config->mixed_cocycle);
}

Element quotient_centerless(const Element& a) {
  if (!a.config()) return a;
  Element out(centerless_of(a.config()));
  for (const auto& [s, c] : a)
    if (!s.is_central()) out.add_term(s, c);
  return out;
}

bool is_central(const Element& a) {
  return std::all_of(a.begin(), a.end(), [](const auto& t) { return t.first.is_central(); });
}

std::vector<BasisSymbol> basis_symbols(const AlgebraConfig& config, std::size_t radius) {
  std::vector<BasisSymbol> out;
  const bool full = config.variant == Variant::full;
  for (const auto& x : config.group.window(radius)) {
    out.push_back(BasisSymbol::L(x));
    if (!x.is_zero() || full) out.push_back(BasisSymbol::I(x));
    if (x.is_zero() && full) {
      out.push_back(BasisSymbol::CL());
      out.push_back(BasisSymbol::CI());
      out.push_back(BasisSymbol::CLI());
    }
  }
  return out;
}

namespace {

Element basis_bracket(const ConfigPtr& cfg, const BasisSymbol& a, const BasisSymbol& b) {
  Element out(cfg);
  bracket_into(*cfg, a, b, Rational(1), out);
  return out;
}

Element bracket_with(const ConfigPtr& cfg, const BasisSymbol& a, const Element& e) {
  Element out(cfg);
  for (const auto& [s, c] : e) bracket_into(*cfg, a, s, c, out);
  return out;
}

struct JacobiFailure {
  std::size_t order = 0;
  std::string witness, lhs, rhs;
};

}  // namespace

CheckReport verify_algebra_axioms(const ConfigPtr& config, std::size_t radius, unsigned jobs) {
  CheckReport report;
  report.check = "algebra-axioms";
  report.variant = config->variant;
  report.window = radius;
  const auto basis = basis_symbols(*config, radius);
  const std::size_t n = basis.size();

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      ++report.cases;
      const Element xy = basis_bracket(config, basis[i], basis[j]);
      const Element yx = -basis_bracket(config, basis[j], basis[i]);
      if (xy != yx) {
        report.check = "skew-symmetry";
        report.passed = false;
        report.witness = "(" + to_string(basis[i]) + ", " + to_string(basis[j]) + ")";
        report.lhs = format(xy);
        report.rhs = format(yx);
        return report;
      }
    }
  }

  // Brackets of basis pairs are reused n times each.
  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = basis_bracket(config, basis[i], basis[j]);

  auto scan = [&](std::size_t begin, std::size_t stride, JacobiFailure& failure) {
    for (std::size_t i = begin; i < n; i += stride) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          const std::size_t order = (i * n + j) * n + k;
          if (order >= failure.order) return;
          Element lhs = bracket_with(config, basis[i], table[j * n + k]);
          lhs += bracket_with(config, basis[j], table[k * n + i]);
          Element rhs = -bracket_with(config, basis[k], table[i * n + j]);
          if (lhs != rhs) {
            failure.order = order;
            failure.witness =
                "(" + to_string(basis[i]) + ", " + to_string(basis[j]) + ", " + to_string(basis[k]) + ")";
            failure.lhs = format(lhs);
            failure.rhs = format(rhs);
            return;
          }
        }
      }
    }
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(n)));
  std::vector<JacobiFailure> failures(workers);
  for (auto& f : failures) f.order = n * n * n;
  if (workers == 1) {
    scan(0, 1, failures[0]);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(scan, w, workers, std::ref(failures[w]));
    for (auto& t : threads) t.join();
  }
  report.cases += n * n * n;
  auto first = std::min_element(failures.begin(), failures.end(),
                                [](const auto& a, const auto& b) { return a.order < b.order; });
  if (first->order < n * n * n) {
    report.check = "jacobi";
    report.passed = false;
    report.witness = first->witness;
    report.lhs = first->lhs;
    report.rhs = first->rhs;
  }
  return report;
}

}  // namespace hv
