// Integral abelianization via Smith normal form, mod-p Betti numbers of
// presentation 2-complexes, and the Kunneth engine producing Morse upper
// bounds for the product families. Upper bounds come only from closed-form
// group profiles: a presentation 2-complex has b1 - b2 = g - r identically,
// so it can never certify anything beyond the witness lower bound. The two
// profile types keep that distinction explicit.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fpg/presentation.hpp"

namespace fpg {

using Integer = boost::multiprecision::cpp_int;

class IntegerMatrix {
 public:
  IntegerMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntegerMatrix from_rows(
      const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Integer> data_;
};

// Positive invariant factors d1 | d2 | ... | ds; rank = s.
struct SmithForm {
  std::vector<Integer> invariant_factors;

  std::size_t rank() const { return invariant_factors.size(); }
  friend bool operator==(const SmithForm&, const SmithForm&) = default;
};

// Group-level Betti numbers over a chosen field; input to the Morse bound.
struct BettiProfile {
  std::int64_t characteristic = 0;  // 0 or a prime
  std::int64_t b0 = 1;
  std::int64_t b1 = 0;
  std::int64_t b2 = 0;

  friend bool operator==(const BettiProfile&, const BettiProfile&) = default;
};

// Betti numbers of a presentation 2-complex over F_p. Deliberately a
// different type from BettiProfile: complex profiles never feed the Morse
// bound.
struct ComplexBettiProfile {
  std::int64_t characteristic = 2;
  std::int64_t b0 = 1;
  std::int64_t b1 = 0;
  std::int64_t b2 = 0;

  friend bool operator==(const ComplexBettiProfile&,
                         const ComplexBettiProfile&) = default;
};

struct PoincarePolynomial {
  std::vector<std::int64_t> coefficients;  // index = degree

  std::int64_t coefficient(std::size_t degree) const {
    return degree < coefficients.size() ? coefficients[degree] : 0;
  }
  PoincarePolynomial truncated_product(const PoincarePolynomial& rhs,
                                       std::size_t max_degree) const;
};

struct AbelianizationResult {
  std::int64_t b1 = 0;
  std::vector<Integer> torsion;  // invariant factors > 1

  friend bool operator==(const AbelianizationResult&,
                         const AbelianizationResult&) = default;
};

// Exponent vectors of the relators stacked row-wise (r x g).
IntegerMatrix relation_matrix(const Presentation& p);

// Pivot rule: smallest absolute value, ties broken row-major.
SmithForm smith_normal_form(IntegerMatrix m);

AbelianizationResult abelianization(const Presentation& p);

std::int64_t rank_mod_p(const IntegerMatrix& m, std::int64_t p);

ComplexBettiProfile betti_mod_p_complex(const Presentation& p,
                                        std::int64_t characteristic);

bool is_prime(std::int64_t n);

// Closed-form factor descriptor for the Kunneth engine and the product
// constructions.
class FamilyFactor {
 public:
  enum class Kind { surface, orbifold, free_abelian, cyclic, free_group };

  static FamilyFactor surface(std::int64_t genus);
  static FamilyFactor orbifold(OrbifoldSignature sig);
  static FamilyFactor free_abelian(std::int64_t rank);
  static FamilyFactor cyclic(std::int64_t order);
  static FamilyFactor free_group(std::int64_t rank);

  Kind kind() const { return kind_; }
  std::int64_t parameter() const { return parameter_; }
  const OrbifoldSignature& signature() const { return signature_; }

  // Degree-2 truncation of the group's Poincare polynomial over the field
  // of the given characteristic; throws std::invalid_argument for
  // unsupported (factor, characteristic) pairs, notably orbifold signatures
  // at prime characteristic and cyclic factors away from their own prime.
  PoincarePolynomial poincare_degree2(std::int64_t characteristic) const;

  Presentation build_presentation() const;
  std::string label() const;

  friend bool operator==(const FamilyFactor&, const FamilyFactor&) = default;

 private:
  FamilyFactor(Kind kind, std::int64_t parameter, OrbifoldSignature sig)
      : kind_(kind), parameter_(parameter), signature_(std::move(sig)) {}

  Kind kind_;
  std::int64_t parameter_;
  OrbifoldSignature signature_;
};

// b1, b2 of the direct product over the chosen field, via the Kunneth
// formula on degree-2 truncated Poincare polynomials.
BettiProfile kunneth_betti(std::span<const FamilyFactor> factors,
                           std::int64_t characteristic);

// DEF <= b1 - b2 over any coefficient field (Morse inequality).
std::int64_t morse_upper_bound(const BettiProfile& profile);

}  // namespace fpg
