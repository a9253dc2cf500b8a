#include "quarticib/globalize.hpp"

#include "quarticib/arith.hpp"
#include "quarticib/polyring.hpp"

namespace qib {

std::array<Integer, 3> elementary_divisors(const std::map<Prime, TriangularPBasis>& bases) {
  std::array<Integer, 3> d{1, 1, 1};
  for (const auto& [p, basis] : bases)
    for (std::size_t i = 0; i < 3; ++i) d[i] *= ipow(p, basis.exponents[i]);
  return d;
}

GlobalTriangularBasis combine(const std::map<Prime, TriangularPBasis>& bases, const IntPoly& ambient,
                              const Integer& disc) {
  for (const auto& [p, basis] : bases)
    if (basis.ambient != ambient)
      throw std::invalid_argument("combine: basis at p=" + std::to_string(p) + " belongs to a different polynomial");

  GlobalTriangularBasis out;
  out.ambient = ambient;
  out.disc = disc;
  out.divisors = elementary_divisors(bases);
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t deg = i + 1;
    std::vector<Integer> coeffs(deg + 1, 0);
    coeffs[deg] = 1;
    for (std::size_t j = 0; j < deg; ++j) {
      std::vector<std::pair<Integer, Integer>> system;
      for (const auto& [p, basis] : bases) {
        if (basis.exponents[i] == 0) continue;
        const Integer q = ipow(p, basis.exponents[i]);
        system.emplace_back(mod_nonneg(basis.numerators[i].coeff(j), q), q);
      }
      if (!system.empty()) coeffs[j] = crt(system);
    }
    out.numerators[i] = IntPoly(std::move(coeffs));
  }
  out.index = out.divisors[0] * out.divisors[1] * out.divisors[2];
  const Integer ind2 = out.index * out.index;
  if (!mpz_divisible_p(disc.get_mpz_t(), ind2.get_mpz_t()))
    throw TableMismatchError("combine: ind^2 = " + ind2.get_str() + " does not divide disc = " + disc.get_str());
  out.dK = disc / ind2;
  return out;
}

GlobalTriangularBasis integral_basis(const TrinomialField& field, unsigned long trial_bound) {
  const PBasisMap local = p_basis_all(field, trial_bound);
  GlobalTriangularBasis out = combine(local.bases, field.polynomial(), field.disc());
  if (!local.complete()) {
    out.conditional = true;
    out.unfactored = local.disc_factorization.cofactor;
    for (const auto& q : local.unsupported_primes) out.unfactored *= q;
  }
  return out;
}

oracle::OrderBasis as_order(const GlobalTriangularBasis& basis) {
  std::vector<oracle::Coords> gens;
  gens.push_back({Rational(1), Rational(0), Rational(0), Rational(0)});
  for (std::size_t i = 0; i < 3; ++i) {
    oracle::Coords c;
    for (std::size_t j = 0; j < 4; ++j) {
      c[j] = Rational(basis.numerators[i].coeff(j), basis.divisors[i]);
      c[j].canonicalize();
    }
    gens.push_back(c);
  }
  return oracle::hermite_basis(gens, basis.ambient);
}

Rational change_of_basis_determinant(const GlobalTriangularBasis& basis) {
  std::vector<std::vector<Integer>> m(4, std::vector<Integer>(4, 0));
  // Row i holds the coordinates of L_i(alpha) (row 0 is 1); scaling by the
  // divisors afterwards keeps the determinant exact over Z.
  m[0][0] = 1;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 4; ++j) m[i + 1][j] = basis.numerators[i].coeff(j);
  Rational det(determinant(m));
  det /= Rational(basis.index);
  det.canonicalize();
  return det;
}

}  // namespace qib
