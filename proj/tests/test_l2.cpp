#include <doctest.h>

#include "fpg/l2.hpp"

using namespace fpg;

TEST_CASE("beta1_one_relator") {
  CHECK(beta1_one_relator(4, 1) == Rational(3));
  CHECK(beta1_one_relator(2, 2) == Rational(1, 2));
  CHECK(beta1_one_relator(2, 1) == Rational(1));
  CHECK_THROWS_AS(beta1_one_relator(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(beta1_one_relator(2, 0), std::invalid_argument);
}

TEST_CASE("beta1_orbifold") {
  CHECK(beta1_orbifold(OrbifoldSignature::make(1, {2})) == Rational(1, 2));
  CHECK(beta1_orbifold(OrbifoldSignature::make(2, {})) == Rational(2));
  CHECK(beta1_orbifold(OrbifoldSignature::make(1, {2, 3, 7})) == Rational(41, 42));
}

TEST_CASE("the two beta1 formulas agree on one-relator orbifold groups") {
  for (std::int64_t g = 1; g <= 10; ++g)
    for (std::int64_t m = 1; m <= 12; ++m) {
      const Rational expected = Rational(2 * g - 1) - Rational(1, m);
      CHECK(beta1_one_relator(2 * g, m) == expected);
      if (m >= 2)
        CHECK(beta1_orbifold(OrbifoldSignature::make(g, {m})) == expected);
      else
        CHECK(beta1_orbifold(OrbifoldSignature::make(g, {})) == expected);
    }
}

TEST_CASE("beta1_orbifold is minus the orbifold Euler characteristic") {
  for (std::int64_t g = 1; g <= 6; ++g)
    for (const auto& mults : std::vector<std::vector<std::int64_t>>{
             {}, {2}, {3, 4}, {2, 2, 2}, {5, 7, 11, 13}}) {
      const OrbifoldSignature sig = OrbifoldSignature::make(g, mults);
      CHECK(beta1_orbifold(sig) + orbifold_euler_characteristic(sig) == 0);
    }
}

TEST_CASE("beta1_scaled") {
  CHECK(beta1_scaled(Rational(2), 1) == Rational(2));
  CHECK(beta1_scaled(Rational(2), 4) == Rational(1, 2));
  CHECK(beta1_scaled(Rational(41, 42), 7) == Rational(41, 294));
  CHECK_THROWS_AS(beta1_scaled(Rational(1), 0), std::invalid_argument);
}

TEST_CASE("kernel_order_bound") {
  SUBCASE("pinned values") {
    const KernelOrderBound a = kernel_order_bound(2, 3, 3);
    CHECK(a.ratio == Rational(1));
    CHECK(a.chain_bound == Rational(9, 8));
    CHECK(a.forces_trivial_kernel);

    const KernelOrderBound b = kernel_order_bound(2, 2, 2);
    CHECK(b.ratio == Rational(1));
    CHECK(b.chain_bound == Rational(6, 5));

    const KernelOrderBound c = kernel_order_bound(1, 5, 2);
    CHECK(c.ratio == Rational(8, 5));
    CHECK(c.forces_trivial_kernel);
  }
  SUBCASE("the excluded torsion-free case") {
    CHECK_THROWS_AS(kernel_order_bound(1, 2, 1), std::invalid_argument);
  }
  SUBCASE("endpoints of the chain over a sweep") {
    for (std::int64_t g = 1; g <= 6; ++g)
      for (std::int64_t n = 1; n <= 12; ++n) {
        if (g == 1 && n == 1) continue;
        for (std::int64_t m : {1, 2, 3, 7, 12, 1000, 1000000}) {
          const KernelOrderBound bound = kernel_order_bound(g, m, n);
          CHECK(bound.ratio < 2);
          CHECK(bound.chain_bound <= 2);
          CHECK(bound.forces_trivial_kernel);
          CHECK((bound.chain_bound == 2) == (g == 1 && n == 2));
          CHECK(bound.ratio < bound.chain_bound);
        }
      }
  }
}

TEST_CASE("hillman_check") {
  CHECK(hillman_check(Rational(3), 4) == HillmanResult{true, true});
  CHECK(hillman_check(Rational(2), 3) == HillmanResult{true, true});
  CHECK(hillman_check(Rational(0), 2) == HillmanResult{false, false});
  CHECK(hillman_check(Rational(5, 2), 3) == HillmanResult{true, false});
}

TEST_CASE("hillman inequality holds for every orbifold signature") {
  for (std::int64_t g = 1; g <= 8; ++g)
    for (const auto& mults : std::vector<std::vector<std::int64_t>>{
             {}, {2}, {2, 2}, {3, 5}, {2, 2, 2, 2}}) {
      const OrbifoldSignature sig = OrbifoldSignature::make(g, mults);
      const HillmanResult result = hillman_check(beta1_orbifold(sig), 2 * g - 1);
      CHECK(result.holds);
      CHECK(result.equality == mults.empty());
    }
}

TEST_CASE("lueck_gaboriau_vanishing fires only on fully asserted facts") {
  CHECK(lueck_gaboriau_vanishing(TriState::yes, TriState::yes, TriState::yes) ==
        Rational(0));
  CHECK(!lueck_gaboriau_vanishing(TriState::yes, TriState::unknown, TriState::yes));
  CHECK(!lueck_gaboriau_vanishing(TriState::no, TriState::yes, TriState::yes));
  CHECK(!lueck_gaboriau_vanishing(TriState::unknown, TriState::unknown,
                                  TriState::unknown));
}

TEST_CASE("rational serialization") {
  CHECK(to_string_fraction(Rational(3)) == "3");
  CHECK(to_string_fraction(Rational(1, 2)) == "1/2");
  CHECK(to_string_fraction(Rational(-41, 42)) == "-41/42");
  CHECK(to_string_fraction(Rational(0)) == "0");
}

TEST_CASE("ExtensionData carries the scaling hypothesis") {
  const ExtensionData finite{Integer(4), Rational(2)};
  REQUIRE(finite.kernel_order.has_value());
  CHECK(beta1_scaled(finite.quotient_beta1, *finite.kernel_order) ==
        Rational(1, 2));
  const ExtensionData infinite{std::nullopt, Rational(2)};
  CHECK(!infinite.kernel_order.has_value());
}
