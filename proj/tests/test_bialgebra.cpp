#include <doctest.h>

#include <random>

#include "hv/bialgebra.hpp"
#include "hv/derivation.hpp"
#include "hv/errors.hpp"
#include "hv/expr.hpp"
#include "hv/format.hpp"
#include "oracle.hpp"

using namespace hv;

namespace {

const ConfigPtr full = make_config();
const ConfigPtr bare = make_config(GroupSpec::integers(), Variant::centerless);

Tensor2 r_of(const char* text, const ConfigPtr& c = full) { return parse_tensor2(text, c); }

}  // namespace

TEST_CASE("coboundary values") {
  const Tensor2 r = wedge(L(full, 0), L(full, 1));
  CHECK(delta_r(r, L(full, 0)) == r);
  CHECK(delta_r(r, C_L(full)).is_zero());
  CHECK(delta_r(r, L(full, -1)) == wedge(L(full, -1), L(full, 1)));
}

TEST_CASE("Yang-Baxter defect against the enveloping algebra oracle") {
  CHECK(cybe_defect(Tensor2(full)).vanishes());
  CHECK(cybe_defect(wedge(L(full, 0), L(full, 1))).vanishes());

  const Tensor3 expected = oracle::cybe(r_of("wedge(L(1), L(2))"));
  CHECK(cybe_defect(r_of("wedge(L(1), L(2))")).value == expected);
  CHECK(format(expected) ==
        "L(1)@L(2)@L(3) - L(1)@L(3)@L(2) - L(2)@L(1)@L(3) + L(2)@L(3)@L(1) + L(3)@L(1)@L(2) - L(3)@L(2)@L(1)");

  std::mt19937_64 rng(2024);
  for (const auto& c : {full, bare}) {
    for (int i = 0; i < 25; ++i) {
      const Tensor2 r = oracle::random_r(c, rng, 2, 1 + i % 4);
      CHECK_MESSAGE(cybe_defect(r).value == oracle::cybe(r), format(r));
    }
  }
}

TEST_CASE("MYBE check") {
  CHECK(mybe_check(wedge(L(full, 0), L(full, 1)), 3).passed);
  CHECK(mybe_check(Tensor2(full), 2).passed);
  const auto fail = mybe_check(r_of("wedge(L(1), L(2))"), 1);
  CHECK_FALSE(fail.passed);
  CHECK(fail.witness == "L(0)");
  CHECK_THROWS_AS(mybe_check(tensor(L(full, 1), L(full, 1)), 1), PreconditionError);
}

TEST_CASE("Drinfeld identity") {
  const auto a = drinfeld_identity_check(wedge(L(full, 0), L(full, 1)), L(full, -1));
  CHECK(a.equal);
  CHECK(a.lhs.is_zero());
  const Tensor2 r = r_of("wedge(L(1), L(2))");
  const auto b = drinfeld_identity_check(r, L(full, 0));
  CHECK(b.equal);
  CHECK(b.rhs == cybe_defect(r).value * Rational(6));
  CHECK(drinfeld_identity_check(Tensor2(full), I(full, 3)).rhs.is_zero());

  std::mt19937_64 rng(99);
  for (int i = 0; i < 15; ++i) {
    const Tensor2 s = oracle::random_r(full, rng, 2);
    for (const auto& x : basis_symbols(*full, 1)) {
      const auto d = drinfeld_identity_check(s, make_element(full, x));
      CHECK(d.equal);
      CHECK(d.rhs == oracle::act(make_element(full, x), oracle::cybe(s)));
    }
  }
  CHECK_THROWS_AS(drinfeld_identity_check(tensor(L(full, 1), L(full, 2)), L(full, 0)), PreconditionError);
}

TEST_CASE("triangular pairs") {
  CHECK(triangular_pair(L(full, 0), L(full, 1)) == wedge(L(full, 0), L(full, 1)));
  const Tensor2 r = triangular_pair(L(full, 0) * Rational(1, 2), I(full, 2));
  CHECK(r == wedge(L(full, 0) * Rational(1, 2), I(full, 2)));
  CHECK(cybe_defect(r).vanishes());
  CHECK_THROWS_AS(triangular_pair(L(full, 0), L(full, 2)), PreconditionError);
}

TEST_CASE("bialgebra axioms") {
  const auto good = bialgebra_axiom_check(from_r(wedge(L(full, 0), I(full, 1)), 5), 4);
  CHECK(good.passed());

  const auto bad = bialgebra_axiom_check(from_r(r_of("wedge(L(1), L(2))"), 3), 2);
  CHECK(bad.antisymmetry.passed);
  CHECK(bad.compatibility.passed);
  CHECK_FALSE(bad.co_jacobi.passed);

  CHECK(bialgebra_axiom_check(sigma_cobracket(Rational(1), C_I(full), 4), 3).passed());

  // The one-sided member λ⊗C alone (η = 0) is not anti-commutative, so it is
  // not a cobracket; only the balanced combination λ⊗C − C⊗λ is.
  const auto one_sided = bialgebra_axiom_check(sigma_family(Rational(1), C_I(full), Rational(0), 4), 3);
  CHECK_FALSE(one_sided.antisymmetry.passed);
}

TEST_CASE("explicit tables need room around the radius") {
  SymbolTable t(full, 2);
  for (const auto& s : basis_symbols(*full, 2)) t.assign(s, delta_r(wedge(L(full, 0), L(full, 1)), make_element(full, s)));
  CobracketTable table{t, Explicit{}};
  CHECK_THROWS_AS(bialgebra_axiom_check(table, 2), CoverageError);
  CHECK(bialgebra_axiom_check(table, 1).passed());
}

TEST_CASE("sigma values") {
  const auto sigma = sigma_cobracket(Rational(3), C_L(full), 2);
  CHECK(sigma.map.at(BasisSymbol::L(Rational(2))) == (tensor(I(full, 2), C_L(full)) - tensor(C_L(full), I(full, 2))) * Rational(3));
  CHECK(sigma.map.at(BasisSymbol::L(Rational(0))).is_zero());
  CHECK(sigma.map.at(BasisSymbol::I(Rational(1))).is_zero());
  // closed form reaches outside the materialized window
  CHECK(sigma.map.at(BasisSymbol::L(Rational(9))) == (tensor(I(full, 9), C_L(full)) - tensor(C_L(full), I(full, 9))) * Rational(3));
  CHECK_THROWS_AS(sigma_cobracket(Rational(1), L(full, 1), 2), PreconditionError);
  CHECK_THROWS_AS(sigma_cobracket(Rational(1), Element(bare), 2), UsageError);
}

TEST_CASE("decomposition") {
  const Tensor2 r = wedge(L(full, 1), L(full, -1));
  const auto a = cobracket_decompose(from_r(r, 3), 2);
  REQUIRE(a.feasible);
  CHECK(a.r == r);
  CHECK(a.sigma.empty());

  const auto b = cobracket_decompose(sigma_cobracket(Rational(2), C_I(full), 3), 2);
  REQUIRE(b.feasible);
  CHECK(b.r.is_zero());
  REQUIRE(b.sigma.size() == 1);
  CHECK(b.sigma[0].central == BasisSymbol::CI());
  CHECK(b.sigma[0].lambda == Rational(2));
  CHECK(b.sigma[0].eta == Rational(2));

  // centerless: a coboundary round trip with no sigma part available
  const Tensor2 rb = wedge(L(bare, 2), I(bare, -1)) + wedge(L(bare, 0), L(bare, 1)) * Rational(3);
  const auto c = cobracket_decompose(from_r(rb, 3), 2);
  REQUIRE(c.feasible);
  CHECK(c.r == rb);

  CobracketTable perturbed = from_r(r, 5);
  perturbed.map.forget_formula();
  perturbed.map.assign(BasisSymbol::L(Rational(5)), perturbed.map.at(BasisSymbol::L(Rational(5))) + wedge(L(full, 2), L(full, 3)));
  const auto d = cobracket_decompose(perturbed, 2);
  CHECK_FALSE(d.feasible);
  REQUIRE(d.certificate);
  CHECK_FALSE(d.certificate->residual.empty());
  CHECK_FALSE(d.certificate->combination.empty());

  CobracketTable symmetric{SymbolTable(full, 1), Explicit{}};
  for (const auto& s : basis_symbols(*full, 1)) symmetric.map.assign(s, tensor(make_element(full, s), L(full, 0)));
  CHECK_THROWS_AS(cobracket_decompose(symmetric, 1), PreconditionError);
}

TEST_CASE("common kernel of triples") {
  const Tensor3 c = cybe_defect(r_of("wedge(L(1), L(2))")).value;
  const auto k = common_kernel(full, 2, std::vector<Tensor3>{c});
  CHECK(k.span_rank == 1);
  CHECK(k.basis.empty());
  const auto central = common_kernel(full, 2, std::vector<Tensor3>{tensor(C_L(full), C_I(full), I(full, 0))});
  CHECK(central.basis.size() == 1);
}
