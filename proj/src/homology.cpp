#include "fpg/homology.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace fpg {

IntegerMatrix IntegerMatrix::from_rows(
    const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  IntegerMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c)
      throw std::invalid_argument("ragged matrix initializer");
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntegerMatrix relation_matrix(const Presentation& p) {
  IntegerMatrix m(p.relator_count(), p.generator_count());
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    const auto vec = exponent_vector(p.relators[i], p.generators);
    for (std::size_t j = 0; j < vec.size(); ++j) m.at(i, j) = vec[j];
  }
  return m;
}

namespace {

void swap_rows(IntegerMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntegerMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

// Smallest absolute nonzero entry of the trailing submatrix, row-major ties.
bool find_pivot(const IntegerMatrix& m, std::size_t t, std::size_t& pi,
                std::size_t& pj) {
  bool found = false;
  Integer best;
  for (std::size_t i = t; i < m.rows(); ++i) {
    for (std::size_t j = t; j < m.cols(); ++j) {
      if (m.at(i, j) == 0) continue;
      Integer mag = abs(m.at(i, j));
      if (!found || mag < best) {
        found = true;
        best = std::move(mag);
        pi = i;
        pj = j;
      }
    }
  }
  return found;
}

}  // namespace

SmithForm smith_normal_form(IntegerMatrix m) {
  SmithForm out;
  const std::size_t bound = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < bound; ++t) {
    std::size_t pi = t;
    std::size_t pj = t;
    if (!find_pivot(m, t, pi, pj)) break;
    swap_rows(m, t, pi);
    swap_cols(m, t, pj);

    for (;;) {
      bool remainder = false;
      for (std::size_t i = t + 1; i < m.rows(); ++i) {
        if (m.at(i, t) == 0) continue;
        const Integer q = m.at(i, t) / m.at(t, t);
        if (q != 0)
          for (std::size_t j = t; j < m.cols(); ++j)
            m.at(i, j) -= q * m.at(t, j);
        if (m.at(i, t) != 0) remainder = true;
      }
      for (std::size_t j = t + 1; j < m.cols(); ++j) {
        if (m.at(t, j) == 0) continue;
        const Integer q = m.at(t, j) / m.at(t, t);
        if (q != 0)
          for (std::size_t i = t; i < m.rows(); ++i)
            m.at(i, j) -= q * m.at(i, t);
        if (m.at(t, j) != 0) remainder = true;
      }
      if (remainder) {
        // A nonzero remainder is strictly smaller than the pivot; reselect.
        std::size_t qi = t;
        std::size_t qj = t;
        find_pivot(m, t, qi, qj);
        swap_rows(m, t, qi);
        swap_cols(m, t, qj);
        continue;
      }

      // Row and column are clear; enforce divisibility into the rest.
      bool fixed_up = false;
      for (std::size_t i = t + 1; i < m.rows() && !fixed_up; ++i) {
        for (std::size_t j = t + 1; j < m.cols() && !fixed_up; ++j) {
          if (m.at(i, j) % m.at(t, t) != 0) {
            for (std::size_t col = t; col < m.cols(); ++col)
              m.at(t, col) += m.at(i, col);
            fixed_up = true;
          }
        }
      }
      if (!fixed_up) break;
    }

    Integer d = m.at(t, t);
    if (d < 0) d = -d;
    out.invariant_factors.push_back(std::move(d));
  }
  return out;
}

AbelianizationResult abelianization(const Presentation& p) {
  const SmithForm snf = smith_normal_form(relation_matrix(p));
  AbelianizationResult out;
  out.b1 = static_cast<std::int64_t>(p.generator_count()) -
           static_cast<std::int64_t>(snf.rank());
  for (const Integer& d : snf.invariant_factors)
    if (d > 1) out.torsion.push_back(d);
  return out;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::int64_t rank_mod_p(const IntegerMatrix& m, std::int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
  std::vector<std::vector<std::int64_t>> a(m.rows(),
                                           std::vector<std::int64_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Integer r = m.at(i, j) % p;
      if (r < 0) r += p;
      a[i][j] = static_cast<std::int64_t>(r);
    }

  std::int64_t rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && a[pivot][col] == 0) ++pivot;
    if (pivot == m.rows()) continue;
    std::swap(a[row], a[pivot]);
    // Normalize pivot to 1 via the inverse mod p.
    std::int64_t inv = 1;
    for (std::int64_t x = 1; x < p; ++x)
      if (a[row][col] * x % p == 1) {
        inv = x;
        break;
      }
    for (std::size_t j = col; j < m.cols(); ++j)
      a[row][j] = a[row][j] * inv % p;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || a[i][col] == 0) continue;
      const std::int64_t factor = a[i][col];
      for (std::size_t j = col; j < m.cols(); ++j)
        a[i][j] = ((a[i][j] - factor * a[row][j]) % p + p) % p;
    }
    ++row;
    ++rank;
  }
  return rank;
}

ComplexBettiProfile betti_mod_p_complex(const Presentation& p,
                                        std::int64_t characteristic) {
  const std::int64_t rank = rank_mod_p(relation_matrix(p), characteristic);
  ComplexBettiProfile out;
  out.characteristic = characteristic;
  out.b0 = 1;
  out.b1 = static_cast<std::int64_t>(p.generator_count()) - rank;
  out.b2 = static_cast<std::int64_t>(p.relator_count()) - rank;
  return out;
}

PoincarePolynomial PoincarePolynomial::truncated_product(
    const PoincarePolynomial& rhs, std::size_t max_degree) const {
  PoincarePolynomial out;
  out.coefficients.assign(max_degree + 1, 0);
  for (std::size_t i = 0; i <= max_degree && i < coefficients.size(); ++i)
    for (std::size_t j = 0; i + j <= max_degree && j < rhs.coefficients.size();
         ++j)
      out.coefficients[i + j] += coefficients[i] * rhs.coefficients[j];
  return out;
}

FamilyFactor FamilyFactor::surface(std::int64_t genus) {
  if (genus < 1) throw std::invalid_argument("surface factor requires genus >= 1");
  return FamilyFactor(Kind::surface, genus, OrbifoldSignature{});
}

FamilyFactor FamilyFactor::orbifold(OrbifoldSignature sig) {
  auto validated = OrbifoldSignature::make(sig.genus, sig.multiplicities);
  return FamilyFactor(Kind::orbifold, validated.genus, std::move(validated));
}

FamilyFactor FamilyFactor::free_abelian(std::int64_t rank) {
  if (rank < 1)
    throw std::invalid_argument("free abelian factor requires rank >= 1");
  return FamilyFactor(Kind::free_abelian, rank, OrbifoldSignature{});
}

FamilyFactor FamilyFactor::cyclic(std::int64_t order) {
  if (order < 2) throw std::invalid_argument("cyclic factor requires order >= 2");
  return FamilyFactor(Kind::cyclic, order, OrbifoldSignature{});
}

FamilyFactor FamilyFactor::free_group(std::int64_t rank) {
  if (rank < 0) throw std::invalid_argument("free factor requires rank >= 0");
  return FamilyFactor(Kind::free_group, rank, OrbifoldSignature{});
}

PoincarePolynomial FamilyFactor::poincare_degree2(
    std::int64_t characteristic) const {
  switch (kind_) {
    case Kind::surface:
      return {{1, 2 * parameter_, 1}};
    case Kind::orbifold:
      if (characteristic != 0)
        throw std::invalid_argument(
            "orbifold factors are supported in characteristic 0 only");
      return {{1, 2 * parameter_, 1}};
    case Kind::free_abelian:
      return {{1, parameter_, parameter_ * (parameter_ - 1) / 2}};
    case Kind::cyclic:
      if (characteristic != parameter_)
        throw std::invalid_argument(
            "cyclic factors are supported only at their own prime "
            "characteristic");
      return {{1, 1, 1}};
    case Kind::free_group:
      return {{1, parameter_, 0}};
  }
  throw std::logic_error("unreachable");
}

Presentation FamilyFactor::build_presentation() const {
  switch (kind_) {
    case Kind::surface:
      return surface_presentation(parameter_);
    case Kind::orbifold:
      return orbifold_presentation(signature_);
    case Kind::free_abelian:
      return free_abelian_presentation(parameter_);
    case Kind::cyclic:
      return cyclic_presentation(parameter_);
    case Kind::free_group:
      return free_presentation(parameter_);
  }
  throw std::logic_error("unreachable");
}

std::string FamilyFactor::label() const {
  switch (kind_) {
    case Kind::surface:
      return "surface(" + std::to_string(parameter_) + ")";
    case Kind::orbifold: {
      std::string out = "orbifold(" + std::to_string(signature_.genus);
      if (!signature_.multiplicities.empty()) {
        out += ";";
        for (std::size_t i = 0; i < signature_.multiplicities.size(); ++i)
          out += (i > 0 ? "," : "") + std::to_string(signature_.multiplicities[i]);
      }
      return out + ")";
    }
    case Kind::free_abelian:
      return "Z^" + std::to_string(parameter_);
    case Kind::cyclic:
      return "Z/" + std::to_string(parameter_);
    case Kind::free_group:
      return "free(" + std::to_string(parameter_) + ")";
  }
  throw std::logic_error("unreachable");
}

BettiProfile kunneth_betti(std::span<const FamilyFactor> factors,
                           std::int64_t characteristic) {
  if (characteristic != 0 && !is_prime(characteristic))
    throw std::invalid_argument("characteristic must be 0 or prime");
  PoincarePolynomial product{{1, 0, 0}};
  for (const FamilyFactor& f : factors)
    product = product.truncated_product(f.poincare_degree2(characteristic), 2);
  BettiProfile out;
  out.characteristic = characteristic;
  out.b0 = product.coefficient(0);
  out.b1 = product.coefficient(1);
  out.b2 = product.coefficient(2);
  return out;
}

std::int64_t morse_upper_bound(const BettiProfile& profile) {
  return profile.b1 - profile.b2;
}

}  // namespace fpg
