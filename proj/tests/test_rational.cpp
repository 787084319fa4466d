#include <doctest.h>

#include <random>

#include "hv/errors.hpp"
#include "hv/group.hpp"
#include "hv/run_config.hpp"

using hv::GroupSpec;
using hv::Rational;

TEST_CASE("rational arithmetic is exact and canonical") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(Rational(6, 3).is_integer());
  CHECK_THROWS_AS(Rational(1) / Rational(0), hv::ArithmeticError);
  CHECK_THROWS_AS(Rational(1, 0), hv::ArithmeticError);
  CHECK_THROWS_AS(Rational(0).inverse(), hv::ArithmeticError);
}

TEST_CASE("rational literals parse and print round trip") {
  for (const char* s : {"0", "7", "-3/2", "12/5", "-1"}) CHECK(Rational::parse(s).str() == s);
  CHECK(Rational::parse("4/6") == Rational(2, 3));
  CHECK_THROWS(Rational::parse(""));
  CHECK_THROWS(Rational::parse("1/"));
  CHECK_THROWS(Rational::parse("1/-2"));
  CHECK_THROWS(Rational::parse("abc"));
  CHECK_THROWS(Rational::parse("1/0"));
}

TEST_CASE("field laws hold on random rationals") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-40, 40), den(1, 17);
  auto draw = [&] { return Rational(num(rng), den(rng)); };
  for (int i = 0; i < 200; ++i) {
    const Rational a = draw(), b = draw(), c = draw();
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Rational(0));
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("group membership") {
  CHECK(GroupSpec::integers().contains(Rational(3)));
  CHECK_FALSE(GroupSpec::integers().contains(Rational(1, 2)));
  const GroupSpec g({Rational(1, 2), Rational(1, 3)});
  CHECK(g.contains(Rational(5, 6)));
  // 1/6 = 1/2 - 1/3, so the group is (1/6)Z.
  CHECK(g.contains(Rational(1, 6)));
  CHECK(g.contains(Rational(-7, 6)));
  CHECK_FALSE(g.contains(Rational(1, 12)));
  CHECK_THROWS_AS(GroupSpec({}), hv::UsageError);
  CHECK_THROWS_AS(GroupSpec({Rational(0)}), hv::UsageError);
}

TEST_CASE("windows") {
  auto ints = [](std::initializer_list<Rational> l) { return std::vector<Rational>(l); };
  CHECK(GroupSpec::integers().window(2) == ints({-2, -1, 0, 1, 2}));
  CHECK(GroupSpec::integers().window(0) == ints({0}));
  CHECK(GroupSpec({Rational(1, 2)}).window(2) == ints({-1, Rational(-1, 2), 0, Rational(1, 2), 1}));

  const GroupSpec g({Rational(1, 2), Rational(1, 3)});
  const auto w = g.window(1);
  // all of a/2 + b/3 with a, b in {-1, 0, 1}: nine distinct values
  CHECK(w.size() == 9);
  CHECK(std::is_sorted(w.begin(), w.end()));
  for (const auto& x : w) CHECK(g.contains(x));
}

TEST_CASE("run config files") {
  const auto rc = hv::RunConfig::parse(R"(# sample
generators = "1/2, 1/3"
variant = "centerless"
mixed_cocycle = standard
radius = 4
seed = 9
format = json
)");
  CHECK(rc.generators == std::vector<Rational>{Rational(1, 2), Rational(1, 3)});
  CHECK(rc.variant == hv::Variant::centerless);
  CHECK(rc.mixed_cocycle == hv::MixedCocycle::standard);
  CHECK(rc.radius == 4);
  CHECK(rc.seed == 9);
  CHECK(rc.format == "json");
  CHECK(rc.algebra()->group.contains(Rational(1, 6)));

  CHECK_THROWS_AS(hv::RunConfig::parse("colour = red"), hv::UsageError);
  CHECK_THROWS_AS(hv::RunConfig::parse("variant = huge"), hv::UsageError);
  CHECK_THROWS_AS(hv::RunConfig::parse("generators = 0").algebra(), hv::UsageError);
  CHECK_THROWS_AS(hv::RunConfig::parse("radius = -1"), hv::UsageError);
  CHECK_THROWS_AS(hv::RunConfig::parse("just words"), hv::UsageError);
}
