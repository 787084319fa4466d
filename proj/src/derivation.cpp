#include "hv/derivation.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <tuple>

#include "hv/bialgebra.hpp"
#include "hv/format.hpp"
#include "hv/linear_system.hpp"

namespace hv {

namespace {

std::optional<Rational> homogeneous_grade(const Tensor2& u) {
  if (u.is_zero()) return std::nullopt;
  const Rational g = grade_of(u.begin()->first);
  for (const auto& [k, c] : u)
    if (grade_of(k) != g) return std::nullopt;
  return g;
}

DerivationTable outer_table(const Rational& coeff, const Element& central, std::size_t window, bool mirrored) {
  const ConfigPtr cfg = central.config();
  if (!cfg) throw UsageError("central element must be bound to an algebra configuration");
  if (cfg->variant == Variant::centerless) throw UsageError("outer families need central elements (full variant only)");
  if (!is_central(central)) throw PreconditionError(format(central) + " is not central");
  DerivationTable d;
  d.degree = Rational(0);
  d.map = SymbolTable::generated(cfg, window, [cfg, coeff, central, mirrored](const BasisSymbol& s) {
    if (s.kind != Kind::L || s.index.is_zero()) return Tensor2(cfg);
    const Element ia(cfg, BasisSymbol::I(s.index));
    return coeff * (mirrored ? tensor(central, ia) : tensor(ia, central));
  });
  return d;
}

bool covered(const SymbolTable& t, const Element& e) {
  return std::all_of(e.begin(), e.end(), [&](const auto& term) { return t.covers(term.first); });
}

}  // namespace

DerivationTable inner_derivation(const Tensor2& u, std::size_t window) {
  if (!u.config()) throw UsageError("u must be bound to an algebra configuration");
  const ConfigPtr cfg = u.config();
  DerivationTable d;
  d.degree = homogeneous_grade(u);
  d.map = SymbolTable::generated(cfg, window, [cfg, u](const BasisSymbol& s) { return diag_act(cfg, s, u); });
  return d;
}

DerivationTable lambda_outer(const Rational& lambda, const Element& central, std::size_t window) {
  return outer_table(lambda, central, window, false);
}

DerivationTable mirrored_outer(const Element& central, const Rational& eta, std::size_t window) {
  return outer_table(eta, central, window, true);
}

CheckReport derivation_check(const DerivationTable& d, std::size_t radius) {
  const SymbolTable& t = d.map;
  const ConfigPtr& cfg = t.config();
  if (!cfg) throw UsageError("derivation table has no configuration");
  if (!t.has_formula() && t.window() < radius + 1)
    throw CoverageError("table window " + std::to_string(t.window()) + " is too small for radius " +
                        std::to_string(radius) + " (needs " + std::to_string(radius + 1) + ")");
  CheckReport rep;
  rep.check = "derivation";
  rep.variant = cfg->variant;
  rep.window = radius;
  const auto basis = basis_symbols(*cfg, radius);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const Element xy = bracket(Element(cfg, basis[i]), Element(cfg, basis[j]));
      if (!t.has_formula() && !covered(t, xy)) continue;
      ++rep.cases;
      const Tensor2 lhs = modulo_central(t.apply(xy));
      const Tensor2 rhs =
          modulo_central(diag_act(cfg, basis[i], t.at(basis[j])) - diag_act(cfg, basis[j], t.at(basis[i])));
      if (lhs != rhs) {
        rep.passed = false;
        rep.witness = "(" + to_string(basis[i]) + ", " + to_string(basis[j]) + ")";
        rep.lhs = format(lhs);
        rep.rhs = format(rhs);
        return rep;
      }
    }
  }
  return rep;
}

std::map<Rational, DerivationTable> homogeneous_split(const DerivationTable& d) {
  const ConfigPtr& cfg = d.map.config();
  std::map<Rational, DerivationTable> parts;
  for (const auto& [s, v] : d.map.assignments()) {
    for (const auto& [g, part] : grade_parts(v)) {
      const Rational degree = g - s.grade();
      auto [it, inserted] = parts.try_emplace(degree);
      if (inserted) {
        it->second.map = SymbolTable(cfg, d.map.window());
        it->second.degree = degree;
      }
      it->second.map.assign(s, part);
    }
  }
  for (auto& [degree, part] : parts)
    for (const auto& [s, v] : d.map.assignments())
      if (!part.map.covers(s)) part.map.assign(s, Tensor2(cfg));
  return parts;
}

Tensor2 claim2_representative(const DerivationTable& d, const Rational& alpha) {
  if (alpha.is_zero()) throw PreconditionError("claim-2 representative needs a nonzero degree");
  if (d.degree && *d.degree != alpha)
    throw PreconditionError("table has degree " + d.degree->str() + ", not " + alpha.str());
  const ConfigPtr& cfg = d.map.config();
  const Tensor2 u = alpha.inverse() * d.map.at(BasisSymbol::L(Rational(0)));
  for (const auto& [s, v] : d.map.assignments()) {
    if (modulo_central(v) != modulo_central(diag_act(cfg, s, u)))
      throw PreconditionError("D(" + to_string(s) + ") = " + format(v) + " differs from " + to_string(s) +
                              "·u; not a derivation of degree " + alpha.str());
  }
  return u;
}

CheckReport grading_identity_check(const DerivationTable& d, const Rational& alpha) {
  const ConfigPtr& cfg = d.map.config();
  CheckReport rep;
  rep.check = "grading-identity";
  rep.variant = cfg->variant;
  rep.window = d.map.window();
  const Tensor2 d_l0 = d.map.at(BasisSymbol::L(Rational(0)));
  for (const auto& [s, v] : d.map.assignments()) {
    ++rep.cases;
    const Rational& beta = s.grade();
    const Tensor2 lhs = (alpha + beta) * v - diag_act(cfg, s, d_l0);
    const Tensor2 rhs = beta * v;
    if (lhs != rhs) {
      rep.passed = false;
      rep.witness = to_string(s);
      rep.lhs = format(lhs);
      rep.rhs = format(rhs);
      break;
    }
  }
  return rep;
}

InnerSolveResult solve_inner(const DerivationTable& d, std::size_t support_radius,
                             std::optional<std::size_t> probe_radius) {
  const SymbolTable& t = d.map;
  const ConfigPtr& cfg = t.config();
  if (!cfg) throw UsageError("derivation table has no configuration");
  const std::size_t probes_r = probe_radius.value_or(t.window());
  if (!t.has_formula() && probes_r > t.window())
    throw CoverageError("probe radius " + std::to_string(probes_r) + " exceeds the table window " +
                        std::to_string(t.window()));

  const std::size_t check_r = t.has_formula() ? probes_r : std::min(probes_r, t.window() > 0 ? t.window() - 1 : 0);
  if (t.has_formula() || t.window() > 0) {
    const CheckReport pre = derivation_check(d, check_r);
    if (!pre.passed)
      throw PreconditionError("table is not a derivation: witness " + pre.witness + ", " + pre.lhs + " != " + pre.rhs);
  }

  const auto support = basis_symbols(*cfg, support_radius);
  std::vector<SymbolTuple<2>> cols;
  for (const auto& a : support)
    for (const auto& b : support)
      if (!(a.is_central() && b.is_central())) cols.push_back({a, b});

  LinearSystem sys(cols.size(), /*track_combinations=*/true);
  std::vector<std::string> labels;
  for (const auto& x : basis_symbols(*cfg, probes_r)) {
    std::map<SymbolTuple<2>, SparseRow> rows;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const Tensor2 act = modulo_central(diag_act(cfg, x, Tensor2(cfg, cols[j])));
      for (const auto& [k, c] : act) rows[k].emplace_back(j, c);
    }
    const Tensor2 target = modulo_central(t.at(x));
    for (const auto& [k, c] : target) rows.try_emplace(k);
    for (const auto& [k, row] : rows) {
      labels.push_back("D(" + to_string(x) + ")[" + to_string(k) + "]");
      sys.add(row, target.coeff(k));
    }
  }

  InnerSolveResult out;
  out.unknowns = cols.size();
  out.equations = sys.equations();
  out.u = Tensor2(cfg);
  if (!sys.consistent()) {
    const auto& cert = *sys.certificate();
    SolverCertificate sc;
    sc.equation = labels[cert.equation];
    sc.residual = cert.residual.str();
    for (const auto& [id, m] : cert.combination) sc.combination.emplace_back(labels[id], m.str());
    sc.support = "support radius " + std::to_string(support_radius) + ", probes radius " + std::to_string(probes_r);
    out.certificate = std::move(sc);
    return out;
  }
  out.feasible = true;
  const auto x = sys.solution();
  for (std::size_t j = 0; j < cols.size(); ++j)
    if (!x[j].is_zero()) out.u.add_term(cols[j], x[j]);
  return out;
}

namespace {

template <class Tensor>
KernelCertificate<Tensor> kernel_impl(const ConfigPtr& config, std::size_t probe_radius,
                                      const std::vector<Tensor>& span) {
  using Key = typename Tensor::key_type;
  KernelCertificate<Tensor> cert;
  cert.probe_radius = probe_radius;

  // Independent subset of the span.
  std::map<Key, std::size_t> key_index;
  for (const auto& t : span)
    for (const auto& [k, c] : t) key_index.try_emplace(k, key_index.size());
  LinearSystem span_sys(key_index.size());
  std::vector<const Tensor*> independent;
  for (const auto& t : span) {
    SparseRow row;
    for (const auto& [k, c] : t) row.emplace_back(key_index.at(k), c);
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    if (!row.empty() && span_sys.add(row) == LinearSystem::Added::independent) independent.push_back(&t);
  }
  cert.span_rank = independent.size();
  if (independent.empty()) return cert;

  LinearSystem sys(independent.size());
  for (const auto& x : basis_symbols(*config, probe_radius)) {
    std::map<Key, SparseRow> rows;
    for (std::size_t j = 0; j < independent.size(); ++j)
      for (const auto& [k, c] : diag_act(config, x, *independent[j])) rows[k].emplace_back(j, c);
    for (const auto& [k, row] : rows) sys.add(row);
  }
  for (const auto& v : sys.nullspace()) {
    Tensor c(config);
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!v[j].is_zero()) c += v[j] * *independent[j];
    cert.basis.push_back(std::move(c));
  }
  return cert;
}

}  // namespace

KernelCertificate<Tensor2> common_kernel(const ConfigPtr& config, std::size_t probe_radius,
                                         const std::vector<Tensor2>& span) {
  return kernel_impl(config, probe_radius, span);
}

KernelCertificate<Tensor3> common_kernel(const ConfigPtr& config, std::size_t probe_radius,
                                         const std::vector<Tensor3>& span) {
  return kernel_impl(config, probe_radius, span);
}

namespace {

struct Column {
  BasisSymbol source;
  SymbolTuple<2> value;
  friend auto operator<=>(const Column&, const Column&) = default;
};

SparseRow sorted_row(const std::map<std::size_t, Rational>& m) { return SparseRow(m.begin(), m.end()); }

Rational dot(const SparseRow& row, const std::map<std::size_t, Rational>& v) {
  Rational s;
  for (const auto& [col, a] : row)
    if (auto it = v.find(col); it != v.end()) s += a * it->second;
  return s;
}

}  // namespace

H1Report h1_probe(const ConfigPtr& config, std::size_t radius, const Rational& degree) {
  if (radius < 2) throw UsageError("h1 probe needs radius >= 2");
  if (!config->group.contains(degree)) throw UsageError("degree " + degree.str() + " is not in the index group");
  H1Report rep;
  rep.variant = config->variant;
  rep.degree = degree;
  rep.radius = radius;
  rep.value_radius = 2 * radius;
  rep.inner_support = radius;

  const auto sources = basis_symbols(*config, radius);
  const std::set<BasisSymbol> source_set(sources.begin(), sources.end());
  std::map<Rational, std::vector<BasisSymbol>> by_grade;
  for (const auto& s : basis_symbols(*config, rep.value_radius)) by_grade[s.grade()].push_back(s);

  std::vector<Column> columns;
  std::map<Column, std::size_t> column_index;
  std::map<BasisSymbol, std::pair<std::size_t, std::size_t>> ranges;
  for (const auto& s : sources) {
    const Rational target = degree + s.grade();
    const std::size_t begin = columns.size();
    for (const auto& [ga, as] : by_grade) {
      auto it = by_grade.find(target - ga);
      if (it == by_grade.end()) continue;
      for (const auto& a : as)
        for (const auto& b : it->second)
          if (!(a.is_central() && b.is_central())) columns.push_back({s, {a, b}});
    }
    ranges[s] = {begin, columns.size()};
  }
  for (std::size_t i = 0; i < columns.size(); ++i) column_index.emplace(columns[i], i);
  rep.unknowns = columns.size();

  // Derivation identity on pairs whose bracket stays tabled.
  LinearSystem sys(columns.size());
  std::vector<SparseRow> constraint_rows;
  for (std::size_t i = 0; i < sources.size(); ++i) {
    for (std::size_t j = i + 1; j < sources.size(); ++j) {
      const BasisSymbol& x = sources[i];
      const BasisSymbol& y = sources[j];
      Element xy(config);
      bracket_into(*config, x, y, Rational(1), xy);
      if (!std::all_of(xy.begin(), xy.end(), [&](const auto& t) { return source_set.contains(t.first); })) continue;
      std::map<SymbolTuple<2>, std::map<std::size_t, Rational>> rows;
      auto accumulate = [&](std::size_t col, const SymbolTuple<2>& key, const Rational& v) {
        if (all_central(key)) return;
        auto& r = rows[key];
        auto [it, inserted] = r.try_emplace(col, v);
        if (!inserted) {
          it->second += v;
          if (it->second.is_zero()) r.erase(it);
        }
      };
      for (const auto& [s, c] : xy) {
        const auto [b, e] = ranges.at(s);
        for (std::size_t col = b; col < e; ++col) accumulate(col, columns[col].value, c);
      }
      for (const auto& [src, other, sign] :
           {std::tuple{y, x, Rational(-1)}, std::tuple{x, y, Rational(1)}}) {
        // -x·D(y) + y·D(x)
        const auto [b, e] = ranges.at(src);
        for (std::size_t col = b; col < e; ++col) {
          const Tensor2 act = diag_act(config, other, Tensor2(config, columns[col].value));
          for (const auto& [k, v] : act) accumulate(col, k, sign * v);
        }
      }
      for (const auto& [k, r] : rows) {
        if (r.empty()) continue;
        SparseRow row = sorted_row(r);
        sys.add(row);
        constraint_rows.push_back(std::move(row));
      }
    }
  }
  rep.constraints = constraint_rows.size();
  rep.dim_derivations = columns.size() - sys.rank();

  auto to_vector = [&](const std::function<Tensor2(const BasisSymbol&)>& value) {
    std::map<std::size_t, Rational> v;
    for (const auto& s : sources) {
      for (const auto& [k, c] : modulo_central(value(s))) {
        auto it = column_index.find(Column{s, k});
        if (it == column_index.end())
          throw std::logic_error("table value " + to_string(k) + " at " + to_string(s) + " leaves the value window");
        v.emplace(it->second, c);
      }
    }
    return v;
  };
  auto satisfies_constraints = [&](const std::map<std::size_t, Rational>& v) {
    return std::all_of(constraint_rows.begin(), constraint_rows.end(),
                       [&](const SparseRow& r) { return dot(r, v).is_zero(); });
  };
  auto to_table = [&](const std::map<std::size_t, Rational>& v) {
    DerivationTable d;
    d.degree = degree;
    d.map = SymbolTable(config, radius);
    for (const auto& s : sources) d.map.assign(s, Tensor2(config));
    std::map<BasisSymbol, Tensor2> vals;
    for (const auto& [col, c] : v) vals[columns[col].source].add_term(columns[col].value, c);
    for (auto& [s, t] : vals) d.map.assign(s, std::move(t));
    return d;
  };

  // Inner tables from u supported on window(radius).
  LinearSystem span(columns.size());
  for (const auto& a : sources) {
    for (const auto& b : sources) {
      if (a.is_central() && b.is_central()) continue;
      if (a.grade() + b.grade() != degree) continue;
      const Tensor2 u(config, {a, b});
      const auto v = to_vector([&](const BasisSymbol& s) { return diag_act(config, s, u); });
      if (!satisfies_constraints(v)) throw std::logic_error("inner table violates the derivation constraints");
      if (span.add(sorted_row(v)) == LinearSystem::Added::independent) ++rep.dim_inner;
    }
  }
  rep.quotient_dim = rep.dim_derivations - rep.dim_inner;

  if (rep.quotient_dim == 0) return rep;
  if (config->variant == Variant::full && degree.is_zero()) {
    for (const auto& c : center_basis()) {
      const Element central(config, c);
      for (bool mirrored : {false, true}) {
        const DerivationTable fam = mirrored ? mirrored_outer(central, Rational(1), radius)
                                             : lambda_outer(Rational(1), central, radius);
        const auto v = to_vector([&](const BasisSymbol& s) { return fam.map.at(s); });
        if (!satisfies_constraints(v)) continue;
        if (span.add(sorted_row(v)) != LinearSystem::Added::independent) continue;
        const std::string name = to_string(c);
        rep.representatives.push_back({mirrored ? name + "⊗η" : "λ⊗" + name, to_table(v)});
      }
    }
  }
  if (rep.representatives.size() < rep.quotient_dim) {
    std::size_t unlabeled = 0;
    for (const auto& dense : sys.nullspace()) {
      std::map<std::size_t, Rational> v;
      for (std::size_t i = 0; i < dense.size(); ++i)
        if (!dense[i].is_zero()) v.emplace(i, dense[i]);
      if (span.add(sorted_row(v)) != LinearSystem::Added::independent) continue;
      rep.representatives.push_back({"unlabeled-" + std::to_string(++unlabeled), to_table(v)});
      if (rep.representatives.size() == rep.quotient_dim) break;
    }
  }
  return rep;
}

}  // namespace hv
