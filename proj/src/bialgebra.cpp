#include "hv/bialgebra.hpp"

#include <algorithm>
#include <set>

#include "hv/format.hpp"
#include "hv/linear_system.hpp"

namespace hv {

std::vector<BasisSymbol> center_basis() {
  return {BasisSymbol::I(Rational(0)), BasisSymbol::CL(), BasisSymbol::CI(), BasisSymbol::CLI()};
}

Tensor2 delta_r(const Tensor2& r, const Element& x) { return diag_act(x, r); }

CobracketTable from_r(const Tensor2& r, std::size_t window) {
  if (!r.config()) throw UsageError("r must be bound to an algebra configuration");
  const ConfigPtr cfg = r.config();
  CobracketTable t;
  t.map = SymbolTable::generated(cfg, window, [cfg, r](const BasisSymbol& s) { return diag_act(cfg, s, r); });
  t.provenance = FromR{r};
  return t;
}

YBDefect cybe_defect(const Tensor2& r) {
  YBDefect out{Tensor3(r.config())};
  if (!r.config()) return out;
  const AlgebraConfig& cfg = *r.config();
  Element br;
  for (const auto& [ki, ci] : r) {
    const auto& ai = ki[0];
    const auto& bi = ki[1];
    for (const auto& [kj, cj] : r) {
      const auto& aj = kj[0];
      const auto& bj = kj[1];
      const Rational c = ci * cj;
      br = Element();
      bracket_into(cfg, ai, aj, c, br);
      for (const auto& [s, v] : br) out.value.add_term({s, bi, bj}, v);
      br = Element();
      bracket_into(cfg, bi, aj, c, br);
      for (const auto& [s, v] : br) out.value.add_term({ai, s, bj}, v);
      br = Element();
      bracket_into(cfg, bi, bj, c, br);
      for (const auto& [s, v] : br) out.value.add_term({ai, aj, s}, v);
    }
  }
  return out;
}

CheckReport mybe_check(const Tensor2& r, std::size_t probe_radius) {
  if (!is_antisymmetric(r)) throw PreconditionError("MYBE needs antisymmetric r, got " + format(r));
  CheckReport report;
  report.check = "mybe";
  report.window = probe_radius;
  if (!r.config()) return report;
  report.variant = r.config()->variant;
  const YBDefect c = cybe_defect(r);
  // Probe outward from grade 0: L(0) sees any homogeneous defect of nonzero
  // grade, so a failure is usually reported at the simplest probe.
  auto probes = basis_symbols(*r.config(), probe_radius);
  std::stable_sort(probes.begin(), probes.end(), [](const BasisSymbol& a, const BasisSymbol& b) {
    return a.index.abs() < b.index.abs();
  });
  for (const auto& x : probes) {
    ++report.cases;
    const Tensor3 action = diag_act(r.config(), x, c.value);
    if (!action.is_zero()) {
      report.passed = false;
      report.witness = to_string(x);
      report.lhs = format(action);
      report.rhs = "0";
      break;
    }
  }
  return report;
}

Tensor3 co_jacobi(const SymbolTable& delta, const Element& x) {
  const Tensor2 dx = delta.apply(x);
  Tensor3 inner(delta.config());
  for (const auto& [k, c] : dx) {
    const Tensor2 db = delta.at(k[1]);
    for (const auto& [kb, cb] : db) inner.add_term({k[0], kb[0], kb[1]}, c * cb);
  }
  const Tensor3 once = cyclic(inner);
  return inner + once + cyclic(once);
}

namespace {

bool bracket_covered(const SymbolTable& t, const Element& e) {
  return std::all_of(e.begin(), e.end(), [&](const auto& term) { return t.covers(term.first); });
}

}  // namespace

BialgebraReport bialgebra_axiom_check(const CobracketTable& table, std::size_t radius) {
  const SymbolTable& delta = table.map;
  const ConfigPtr& cfg = delta.config();
  if (!cfg) throw UsageError("cobracket table has no configuration");
  if (!delta.has_formula() && delta.window() < radius + 1)
    throw CoverageError("table window " + std::to_string(delta.window()) + " is too small for radius " +
                        std::to_string(radius) + " (needs " + std::to_string(radius + 1) + ")");

  BialgebraReport rep;
  for (CheckReport* r : {&rep.antisymmetry, &rep.co_jacobi, &rep.compatibility}) {
    r->variant = cfg->variant;
    r->window = radius;
  }
  rep.antisymmetry.check = "anti-commutativity";
  rep.co_jacobi.check = "co-jacobi";
  rep.compatibility.check = "compatibility";

  const auto basis = basis_symbols(*cfg, radius);
  for (const auto& x : basis) {
    const Tensor2 dx = delta.at(x);
    ++rep.antisymmetry.cases;
    if (rep.antisymmetry.passed && !is_antisymmetric(dx)) {
      rep.antisymmetry.passed = false;
      rep.antisymmetry.witness = to_string(x);
      rep.antisymmetry.lhs = format(twist(dx));
      rep.antisymmetry.rhs = format(-dx);
    }
  }
  for (const auto& x : basis) {
    ++rep.co_jacobi.cases;
    const Tensor3 cj = co_jacobi(delta, Element(cfg, x));
    if (!cj.is_zero()) {
      rep.co_jacobi.passed = false;
      rep.co_jacobi.witness = to_string(x);
      rep.co_jacobi.lhs = format(cj);
      rep.co_jacobi.rhs = "0";
      break;
    }
  }
  for (std::size_t i = 0; i < basis.size() && rep.compatibility.passed; ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const Element xy = bracket(Element(cfg, basis[i]), Element(cfg, basis[j]));
      if (!delta.has_formula() && !bracket_covered(delta, xy)) continue;
      ++rep.compatibility.cases;
      const Tensor2 lhs = modulo_central(delta.apply(xy));
      const Tensor2 rhs = modulo_central(diag_act(cfg, basis[i], delta.at(basis[j])) -
                                         diag_act(cfg, basis[j], delta.at(basis[i])));
      if (lhs != rhs) {
        rep.compatibility.passed = false;
        rep.compatibility.witness = "(" + to_string(basis[i]) + ", " + to_string(basis[j]) + ")";
        rep.compatibility.lhs = format(lhs);
        rep.compatibility.rhs = format(rhs);
        break;
      }
    }
  }
  return rep;
}

DrinfeldResult drinfeld_identity_check(const Tensor2& r, const Element& x) {
  if (!is_antisymmetric(r)) throw PreconditionError("Drinfeld identity needs antisymmetric r, got " + format(r));
  DrinfeldResult out;
  ConfigPtr cfg = r.config() ? r.config() : x.config();
  if (!cfg) {
    out.equal = true;
    return out;
  }
  const SymbolTable delta = from_r(r.config() ? r : Tensor2(cfg), 0).map;
  out.lhs = co_jacobi(delta, x);
  out.rhs = diag_act(x, cybe_defect(r).value);
  out.equal = out.lhs == out.rhs;
  return out;
}

Tensor2 triangular_pair(const Element& a, const Element& b) {
  const Element ab = bracket(a, b);
  if (ab != b)
    throw PreconditionError("[a,b] = " + format(ab) + " is not b = " + format(b));
  Tensor2 r = wedge(a, b);
  if (!cybe_defect(r).vanishes())
    throw std::logic_error("c(a∧b) nonzero although [a,b] = b");
  return r;
}

CobracketTable sigma_family(const Rational& lambda, const Element& central, const Rational& eta, std::size_t window) {
  const ConfigPtr cfg = central.config();
  if (!cfg) throw UsageError("central element must be bound to an algebra configuration");
  if (cfg->variant == Variant::centerless) throw UsageError("σ families need central elements (full variant only)");
  if (!is_central(central)) throw PreconditionError(format(central) + " is not central");
  CobracketTable t;
  t.map = SymbolTable::generated(cfg, window, [cfg, lambda, central, eta](const BasisSymbol& s) {
    Tensor2 v(cfg);
    if (s.kind != Kind::L || s.index.is_zero()) return v;
    const Element i_alpha(cfg, BasisSymbol::I(s.index));
    v += lambda * tensor(i_alpha, central);
    v -= eta * tensor(central, i_alpha);
    return v;
  });
  t.provenance = FromSigma{lambda, central, eta};
  return t;
}

CobracketTable sigma_cobracket(const Rational& lambda, const Element& central, std::size_t window) {
  return sigma_family(lambda, central, lambda, window);
}

DecomposeResult cobracket_decompose(const CobracketTable& table, std::size_t support_radius) {
  const SymbolTable& delta = table.map;
  const ConfigPtr& cfg = delta.config();
  if (!cfg) throw UsageError("cobracket table has no configuration");

  const auto probes = basis_symbols(*cfg, delta.window());
  for (const auto& x : probes)
    if (!is_antisymmetric(delta.at(x)))
      throw PreconditionError("Δ(" + to_string(x) + ") = " + format(delta.at(x)) + " is not antisymmetric");

  // Unknowns: wedge coefficients of r, then (λ_C, η_C) per central C.
  const auto support = basis_symbols(*cfg, support_radius);
  std::vector<SymbolTuple<2>> wedges;
  for (std::size_t i = 0; i < support.size(); ++i)
    for (std::size_t j = i + 1; j < support.size(); ++j)
      if (!(support[i].is_central() && support[j].is_central())) wedges.push_back({support[i], support[j]});
  const bool full = cfg->variant == Variant::full;
  const std::vector<BasisSymbol> centers = full ? center_basis() : std::vector<BasisSymbol>{};
  const std::size_t n_r = wedges.size();
  const std::size_t n = n_r + 2 * centers.size();

  LinearSystem sys(n, /*track_combinations=*/true);
  std::vector<std::string> labels;

  for (const auto& x : probes) {
    std::map<SymbolTuple<2>, SparseRow> rows;
    for (std::size_t j = 0; j < n_r; ++j) {
      const Tensor2 w = wedge(Element(cfg, wedges[j][0]), Element(cfg, wedges[j][1]));
      for (const auto& [k, c] : modulo_central(diag_act(cfg, x, w))) rows[k].emplace_back(j, c);
    }
    if (x.kind == Kind::L && !x.index.is_zero()) {
      const BasisSymbol ia = BasisSymbol::I(x.index);
      for (std::size_t c = 0; c < centers.size(); ++c) {
        rows[{ia, centers[c]}].emplace_back(n_r + 2 * c, Rational(1));
        rows[{centers[c], ia}].emplace_back(n_r + 2 * c + 1, Rational(-1));
      }
    }
    const Tensor2 target = modulo_central(delta.at(x));
    for (const auto& [k, c] : target) rows.try_emplace(k);
    for (const auto& [k, row] : rows) {
      labels.push_back("Δ(" + to_string(x) + ")[" + to_string(k) + "]");
      sys.add(row, target.coeff(k));
    }
  }

  DecomposeResult out;
  out.unknowns = n;
  out.equations = sys.equations();
  out.r = Tensor2(cfg);
  if (!sys.consistent()) {
    const auto& cert = *sys.certificate();
    SolverCertificate sc;
    sc.equation = labels[cert.equation];
    sc.residual = cert.residual.str();
    for (const auto& [id, m] : cert.combination) sc.combination.emplace_back(labels[id], m.str());
    sc.support = "support radius " + std::to_string(support_radius) + ", probes radius " +
                 std::to_string(delta.window());
    out.certificate = std::move(sc);
    return out;
  }
  out.feasible = true;
  const auto x = sys.solution();
  for (std::size_t j = 0; j < n_r; ++j)
    if (!x[j].is_zero()) out.r += x[j] * wedge(Element(cfg, wedges[j][0]), Element(cfg, wedges[j][1]));
  for (std::size_t c = 0; c < centers.size(); ++c) {
    const Rational& lam = x[n_r + 2 * c];
    const Rational& eta = x[n_r + 2 * c + 1];
    if (!lam.is_zero() || !eta.is_zero()) out.sigma.push_back({centers[c], lam, eta});
  }
  return out;
}

}  // namespace hv
