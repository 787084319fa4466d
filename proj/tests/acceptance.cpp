// Acceptance run: one line per criterion, exact arithmetic throughout.
// Exit status is the number of failed criteria (capped at 1 for ctest).

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "hv/bialgebra.hpp"
#include "hv/derivation.hpp"
#include "hv/format.hpp"
#include "oracle.hpp"

using namespace hv;

namespace {

constexpr std::uint64_t kSeed = 20240613;

struct Outcome {
  bool passed = true;
  std::string detail;
};

// Records the first failure only; later checks still run so the detail
// stays tied to the earliest problem.
struct Tally {
  Outcome out;
  std::size_t checks = 0;
  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && out.passed) {
      out.passed = false;
      out.detail = what;
    }
  }
};

const ConfigPtr full = make_config();
const ConfigPtr bare = make_config(GroupSpec::integers(), Variant::centerless);

Outcome algebra_axioms() {
  Tally t;
  const auto start = std::chrono::steady_clock::now();
  const auto report = verify_algebra_axioms(full, 6);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  t.expect(report.passed, "radius 6 violation at " + report.witness);
  t.expect(seconds < 10.0, "radius 6 took " + std::to_string(seconds) + " s");
  const auto broken = verify_algebra_axioms(make_config(GroupSpec::integers(), Variant::full, MixedCocycle::cubic), 2);
  t.expect(!broken.passed && !broken.witness.empty(), "cubic mixed cocycle was not caught");
  if (t.out.passed) {
    std::ostringstream s;
    s << report.cases << " cases in " << seconds << " s; cubic cocycle fails at " << broken.witness;
    t.out.detail = s.str();
  }
  return t.out;
}

Outcome drinfeld() {
  Tally t;
  std::mt19937_64 rng(kSeed);
  const auto probes = basis_symbols(*full, 2);
  for (int i = 0; i < 100; ++i) {
    const Tensor2 r = oracle::random_r(full, rng, 3, 1 + i % 4);
    t.expect(cybe_defect(r).value == oracle::cybe(r), "c(r) disagrees with the enveloping-algebra oracle for " + format(r));
    for (const auto& x : probes) {
      const auto d = drinfeld_identity_check(r, make_element(full, x));
      t.expect(d.equal, "sides differ for r = " + format(r) + ", x = " + to_string(x));
    }
  }
  if (t.out.passed) t.out.detail = "100 samples x " + std::to_string(probes.size()) + " probes, all equal";
  return t.out;
}

Outcome triangular() {
  Tally t;
  std::size_t n = 0;
  for (const auto& cfg : {full, bare})
    for (int a : {1, -1, 2, -2, 3})
      for (bool use_i : {false, true}) {
        const Element left = L(cfg, 0) * Rational(1, a);
        const Element right = use_i ? I(cfg, a) : L(cfg, a);
        const Tensor2 r = triangular_pair(left, right);
        const std::string name = "(" + format(left) + ", " + format(right) + ") in " + to_string(cfg->variant);
        t.expect(cybe_defect(r).vanishes(), "c(r) != 0 for " + name);
        t.expect(bialgebra_axiom_check(from_r(r, 6), 5).passed(), "bialgebra axioms fail for " + name);
        ++n;
      }
  if (t.out.passed) t.out.detail = std::to_string(n) + " pairs, c(r) = 0 and all three axioms on radius 5";
  return t.out;
}

Tensor2 triangular_sample(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 4), scale(1, 5);
  const int alpha[] = {1, -1, 2, -2, 3};
  const int a = alpha[pick(rng)];
  const Element right = pick(rng) % 2 ? I(bare, a) : L(bare, a);
  return triangular_pair(L(bare, 0) * Rational(1, a), right) * Rational(scale(rng));
}

Outcome mybe_vs_cybe() {
  Tally t;
  std::mt19937_64 rng(kSeed + 4);
  std::size_t passes = 0, spans = 0;
  for (int i = 0; i < 50; ++i) {
    const Tensor2 r = i % 2 ? triangular_sample(rng) : oracle::random_r(bare, rng, 2, 1 + i % 3);
    const Tensor3 c = cybe_defect(r).value;
    Rational reach(0);
    std::vector<Tensor3> span;
    for (const auto& [g, part] : grade_parts(c)) {
      reach = std::max(reach, g.abs());
      span.push_back(part);
    }
    const auto probe_radius = static_cast<std::size_t>(reach.to_long()) + 2;
    const auto m = mybe_check(r, probe_radius);
    t.expect(m.passed == c.is_zero(), "MYBE and CYBE disagree for " + format(r));
    passes += m.passed ? 1 : 0;
    // The certificate behind "MYBE forces CYBE": nothing in the span of the
    // homogeneous parts of c(r) is killed by every probe.
    const auto k = common_kernel(bare, probe_radius, span);
    t.expect(k.basis.empty(), "nonzero common kernel on the span of c(r) for " + format(r));
    spans += k.span_rank;
  }
  t.expect(passes > 0 && passes < 50, "sample does not exercise both outcomes");
  if (t.out.passed) t.out.detail = "50 samples, " + std::to_string(passes) + " satisfy both; common kernel 0 on all " +
                                 std::to_string(spans) + " span dimensions";
  return t.out;
}

Tensor2 homogeneous_u(std::mt19937_64& rng, int grade) {
  const auto basis = basis_symbols(*full, 3);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> kind(0, 1);
  Tensor2 u(full);
  while (u.is_zero())
    for (int term = 0; term < 3; ++term) {
      const BasisSymbol a = basis[pick(rng)];
      const Rational rest = Rational(grade) - a.grade();
      const Element b = kind(rng) ? L(full, rest) : I(full, rest);
      u += tensor(make_element(full, a), b) * Rational(coeff(rng));
    }
  return u;
}

Outcome inner_representative() {
  Tally t;
  std::mt19937_64 rng(kSeed + 5);
  const int grades[] = {1, -1, 2, -2, 3, -3};
  for (int i = 0; i < 100; ++i) {
    const int alpha = grades[i % 6];
    const Tensor2 u = homogeneous_u(rng, alpha);
    const auto d = inner_derivation(u, 3);
    t.expect(claim2_representative(d, Rational(alpha)) == u, "representative differs for u = " + format(u));
    const auto g = grading_identity_check(d, Rational(alpha));
    t.expect(g.passed, "grading identity fails at " + g.witness + " for u = " + format(u));
  }
  if (t.out.passed) t.out.detail = "100 samples recovered exactly, grading identity on every table entry";
  return t.out;
}

Outcome outer_family() {
  Tally t;
  std::size_t certificates = 0;
  for (const auto& c : {C_L(full), C_I(full), C_LI(full), I(full, 0)}) {
    const auto d = lambda_outer(Rational(1), c, 4);
    t.expect(derivation_check(d, 4).passed, "not a derivation for C = " + format(c));
    for (std::size_t support = 0; support <= 4; ++support) {
      const auto s = solve_inner(d, support, 2);
      t.expect(!s.feasible && s.certificate && !s.certificate->equation.empty(),
               "inner within support " + std::to_string(support) + " for C = " + format(c));
      certificates += s.certificate ? 1 : 0;
    }
  }
  if (t.out.passed) t.out.detail = "4 centrals, supports 0..4, " + std::to_string(certificates) + " infeasibility certificates";
  return t.out;
}

Outcome sigma() {
  Tally t;
  for (const auto& c : {C_L(full), C_I(full), C_LI(full), I(full, 0)}) {
    const auto table = sigma_cobracket(Rational(1), c, 5);
    for (const auto& w : basis_symbols(*full, 5))
      t.expect(co_jacobi(table.map, make_element(full, w)).is_zero(), "co-Jacobi fails at " + to_string(w) + " for C = " + format(c));
    t.expect(bialgebra_axiom_check(table, 4).passed(), "axioms fail on radius 4 for C = " + format(c));
  }
  if (t.out.passed) t.out.detail = "all four centrals, co-Jacobi on window 5, axioms on radius 4";
  return t.out;
}

bool matches_outer(const DerivationTable& rep, const DerivationTable& expected, std::size_t radius) {
  for (const auto& s : basis_symbols(*full, radius))
    if (rep.map.at(s) != expected.map.at(s)) return false;
  return true;
}

Outcome h1() {
  Tally t;
  std::ostringstream s;
  const auto bare0 = h1_probe(bare, 3, Rational(0));
  t.expect(bare0.quotient_dim == 0, "centerless degree 0 has quotient dimension " + std::to_string(bare0.quotient_dim));

  const auto full0 = h1_probe(full, 3, Rational(0));
  t.expect(full0.quotient_dim >= 2, "full degree 0 has quotient dimension " + std::to_string(full0.quotient_dim));
  bool families = full0.representatives.size() >= 8;
  for (std::size_t i = 0; families && i < 8; ++i) {
    const Element c = make_element(full, center_basis()[i / 2]);
    families = matches_outer(full0.representatives[i].table,
                             i % 2 == 0 ? lambda_outer(Rational(1), c, 3) : mirrored_outer(c, Rational(1), 3), 3);
  }
  t.expect(families, "leading representatives are not the outer family tables");

  for (const auto& cfg : {full, bare})
    for (int q : {-2, -1, 1, 2}) {
      const auto h = h1_probe(cfg, 3, Rational(q));
      t.expect(h.quotient_dim == 0, to_string(cfg->variant) + " degree " + std::to_string(q) + " has quotient dimension " +
                                        std::to_string(h.quotient_dim));
    }
  s << "centerless q=0: " << bare0.quotient_dim << "; full q=0: " << full0.quotient_dim << " ("
    << full0.dim_derivations << " derivations, " << full0.dim_inner << " inner)";
  if (!t.out.passed) s << "; first failure: " << t.out.detail;
  t.out.detail = s.str();
  return t.out;
}

Outcome decompose() {
  Tally t;
  std::mt19937_64 rng(kSeed + 9);
  std::uniform_int_distribution<int> lam(-5, 5);
  for (int i = 0; i < 25; ++i) {
    const Tensor2 r = oracle::random_r(full, rng, 2, 1 + i % 3);
    const Rational lambda(lam(rng));
    const auto d = cobracket_decompose(from_r(r, 3) + sigma_cobracket(lambda, C_I(full), 3), 2);
    const std::string name = "r = " + format(r) + ", lambda = " + lambda.str();
    t.expect(d.feasible, "infeasible for " + name);
    if (!d.feasible) continue;
    t.expect(modulo_central(d.r) == modulo_central(r), "wrong r for " + name);
    const bool sigma_ok = lambda.is_zero() ? d.sigma.empty()
                                           : d.sigma.size() == 1 && d.sigma[0].central == BasisSymbol::CI() &&
                                                 d.sigma[0].lambda == lambda && d.sigma[0].eta == lambda;
    t.expect(sigma_ok, "wrong sigma part for " + name);
  }
  if (t.out.passed) t.out.detail = "25 round trips recovered (r mod central pairs, lambda)";
  return t.out;
}

// The published classification proof writes "[L_{-2},L_2]=L_0+1/2 C_L",
// while the defining relations give 4 L_0 - 1/2 C_L. The library follows
// the relations and this check pins that choice.
Outcome discrepancy() {
  Tally t;
  const Element got = bracket(L(full, -2), L(full, 2));
  t.expect(got == L(full, 0) * Rational(4) - C_L(full) * Rational(1, 2), "got " + format(got));
  t.expect(got != L(full, 0) + C_L(full) * Rational(1, 2), "matches the proof text instead of the relations");
  if (t.out.passed) t.out.detail = "[L(-2), L(2)] = " + format(got) + " (proof text writes L_0 + 1/2 C_L; relations win)";
  return t.out;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"algebra axioms", algebra_axioms},
      {"Drinfeld identity", drinfeld},
      {"triangular witnesses", triangular},
      {"MYBE iff CYBE", mybe_vs_cybe},
      {"inner representative round trip", inner_representative},
      {"outer family", outer_family},
      {"sigma bialgebra", sigma},
      {"H1 window probe", h1},
      {"decomposition round trip", decompose},
      {"bracket normalization", discrepancy},
  };
  int failed = 0;
  int n = 0;
  for (const auto& [name, run] : criteria) {
    ++n;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.passed ? 0 : 1;
    std::cout << (o.passed ? "PASS" : "FAIL") << "  criterion " << n << " (" << name << "): " << o.detail << std::endl;
  }
  std::cout << (10 - failed) << "/10 criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
