#include "fpg/l2.hpp"

#include <stdexcept>

namespace fpg {

std::string to_string_fraction(const Rational& r) {
  std::string out = numerator(r).str();
  if (denominator(r) != 1) out += "/" + denominator(r).str();
  return out;
}

Rational beta1_one_relator(std::int64_t generator_count, std::int64_t power) {
  if (generator_count < 2)
    throw std::invalid_argument("beta1_one_relator requires >= 2 generators");
  if (power < 1)
    throw std::invalid_argument("beta1_one_relator requires power >= 1");
  return Rational(generator_count - 1) - Rational(1, power);
}

Rational beta1_orbifold(const OrbifoldSignature& sig) {
  const auto validated = OrbifoldSignature::make(sig.genus, sig.multiplicities);
  Rational out(2 * validated.genus - 2 +
               static_cast<std::int64_t>(validated.multiplicities.size()));
  for (std::int64_t m : validated.multiplicities) out -= Rational(1, m);
  return out;
}

Rational orbifold_euler_characteristic(const OrbifoldSignature& sig) {
  return -beta1_orbifold(sig);
}

Rational beta1_scaled(const Rational& quotient_beta1,
                      const Integer& kernel_order) {
  if (kernel_order < 1)
    throw std::invalid_argument("kernel order must be a positive integer");
  return quotient_beta1 / Rational(kernel_order);
}

KernelOrderBound kernel_order_bound(std::int64_t g, std::int64_t m,
                                    std::int64_t n) {
  if (g < 1 || m < 1 || n < 1)
    throw std::invalid_argument("kernel_order_bound requires g, m, n >= 1");
  if (g == 1 && n == 1)
    throw std::invalid_argument(
        "kernel_order_bound excludes g = n = 1 (torsion-free case handled "
        "separately)");
  const Rational numerator = Rational(2 * g - 1) - Rational(1, m);
  const Rational denominator = Rational(2 * g - 1) - Rational(1, n);
  KernelOrderBound out;
  out.ratio = numerator / denominator;
  out.chain_bound = Rational(1) + Rational(1, (2 * g - 1) * n - 1);
  out.forces_trivial_kernel = out.ratio < 2;
  return out;
}

HillmanResult hillman_check(const Rational& beta1, std::int64_t deficiency) {
  HillmanResult out;
  const Rational floor = Rational(deficiency - 1);
  out.holds = beta1 >= floor;
  out.equality = beta1 == floor;
  return out;
}

std::optional<Rational> lueck_gaboriau_vanishing(
    TriState kernel_infinite, TriState kernel_finitely_generated,
    TriState quotient_infinite) {
  if (kernel_infinite == TriState::yes &&
      kernel_finitely_generated == TriState::yes &&
      quotient_infinite == TriState::yes)
    return Rational(0);
  return std::nullopt;
}

}  // namespace fpg
