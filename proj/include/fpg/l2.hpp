// Exact rational first L2-Betti numbers from the closed formulas available
// for one-relator groups (Dicks-Linnell), orbifold surface groups, and
// finite extensions, together with the derived inequalities: the kernel
// order estimate and the Hillman inequality. L2-Betti numbers are not
// computable from an arbitrary presentation, so nothing here estimates; the
// hypotheses are part of each signature. No floating point anywhere.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>

#include "fpg/homology.hpp"
#include "fpg/presentation.hpp"
#include "fpg/tristate.hpp"

namespace fpg {

using Rational = boost::multiprecision::cpp_rational;

// "p/q", with "/q" omitted for integers.
std::string to_string_fraction(const Rational& r);

// A finite (or flagged-infinite) kernel together with the quotient's first
// L2-Betti number, as carried by a short exact sequence.
struct ExtensionData {
  std::optional<Integer> kernel_order;  // nullopt = infinite; >= 1 otherwise
  Rational quotient_beta1;
};

// Dicks-Linnell: an infinite group on a >= 2 generators with one relation
// r = s^n (s not a proper power) has beta_1 = -chi = a - 1 - 1/n.
Rational beta1_one_relator(std::int64_t generator_count, std::int64_t power);

// beta_1 = -chi^orb = 2g - 2 + k - sum 1/m_i.
Rational beta1_orbifold(const OrbifoldSignature& sig);

Rational orbifold_euler_characteristic(const OrbifoldSignature& sig);

// Finite kernel scaling: beta_1(Gamma) = beta_1(Q) / |K|.
Rational beta1_scaled(const Rational& quotient_beta1, const Integer& kernel_order);

// The kernel order estimate for a one-relator group on 2g generators with
// relator power n mapping onto the genus-g orbifold group with one point of
// multiplicity m:
//   |K| = (2g-1-1/m) / (2g-1-1/n) < (2g-1) / (2g-1-1/n) = 1 + 1/((2g-1)n-1).
// Valid for g >= 2, or g = 1 with n > 1; the g = n = 1 case needs the
// separate torsion-free argument and is rejected.
struct KernelOrderBound {
  Rational ratio;        // (2g-1-1/m) / (2g-1-1/n)
  Rational chain_bound;  // 1 + 1/((2g-1)n - 1)
  bool forces_trivial_kernel = false;  // ratio < 2
};
KernelOrderBound kernel_order_bound(std::int64_t g, std::int64_t m,
                                    std::int64_t n);

// beta_1 >= DEF - 1; in the equality case the deficiency-realizing
// presentation complex is aspherical.
struct HillmanResult {
  bool holds = false;
  bool equality = false;

  friend bool operator==(const HillmanResult&, const HillmanResult&) = default;
};
HillmanResult hillman_check(const Rational& beta1, std::int64_t deficiency);

// Luck-Gaboriau vanishing, as an inference rule over user-asserted facts:
// a finitely generated infinite normal subgroup with infinite quotient
// forces beta_1 = 0. Emits the value only when all three facts are asserted.
std::optional<Rational> lueck_gaboriau_vanishing(TriState kernel_infinite,
                                                 TriState kernel_finitely_generated,
                                                 TriState quotient_infinite);

}  // namespace fpg
