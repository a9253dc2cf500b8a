#pragma once

#include <array>
#include <map>

#include "quarticib/oracle.hpp"
#include "quarticib/pbasis.hpp"
#include "quarticib/trinomial.hpp"

namespace qib {

// (1, L1(alpha)/d1, L2(alpha)/d2, L3(alpha)/d3), d1 | d2 | d3.
struct GlobalTriangularBasis {
  IntPoly ambient;
  std::array<IntPoly, 3> numerators;
  std::array<Integer, 3> divisors{1, 1, 1};
  Integer index = 1;
  Integer disc;
  Integer dK;
  // Set when the discriminant was only partly factored: the basis is then
  // maximal only if the unfactored cofactor is squarefree.
  bool conditional = false;
  Integer unfactored = 1;
};

// d_i = prod_p p^(r_i,p).
std::array<Integer, 3> elementary_divisors(const std::map<Prime, TriangularPBasis>& bases);

// Coefficientwise CRT of the local numerators, least nonnegative residues mod d_i.
// d_K = disc / ind^2; TableMismatchError if that division is not exact.
GlobalTriangularBasis combine(const std::map<Prime, TriangularPBasis>& bases, const IntPoly& ambient,
                              const Integer& disc);

// disc, its factorization, p_basis at each p with p^2 | disc, combine.
GlobalTriangularBasis integral_basis(const TrinomialField& field, unsigned long trial_bound = 1000000);

// The basis as an oracle order, and the determinant of its change of basis
// from (1, alpha, alpha^2, alpha^3).
oracle::OrderBasis as_order(const GlobalTriangularBasis& basis);
Rational change_of_basis_determinant(const GlobalTriangularBasis& basis);

}  // namespace qib
