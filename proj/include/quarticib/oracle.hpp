#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "quarticib/integrality.hpp"
#include "quarticib/intpoly.hpp"

namespace qib::oracle {

// Coordinates on the power basis (1, alpha, alpha^2, alpha^3).
using Coords = std::array<Rational, 4>;

Coords multiply(const Coords& u, const Coords& v, const IntPoly& ambient);

// Z-module of rank 4 in Q(alpha) given by a lower-triangular Hermite basis:
// row k has nonzero coordinates only at positions 0..k and a positive diagonal.
class OrderBasis {
 public:
  OrderBasis(std::array<Coords, 4> rows, IntPoly ambient);

  const std::array<Coords, 4>& rows() const { return rows_; }
  const IntPoly& ambient() const { return ambient_; }

  // Coordinates of an element on this basis.
  Coords coordinates(const Coords& element) const;
  // Membership in the localization at p: coordinates have p-free denominators.
  bool contains_local(const Coords& element, Prime p) const;
  // [this : Z[alpha]] as a rational number (an integer when it contains Z[alpha]).
  Rational index() const;
  long vp_index(Prime p) const;
  // Every product of basis elements has integral coordinates.
  bool is_multiplicatively_closed() const;

  friend bool operator==(const OrderBasis& l, const OrderBasis& r) { return l.rows_ == r.rows_; }

 private:
  std::array<Coords, 4> rows_;
  IntPoly ambient_;
};

// Hermite basis of the Z-span of full-rank rational generators.
OrderBasis hermite_basis(const std::vector<Coords>& generators, const IntPoly& ambient);

OrderBasis power_basis_order(const IntPoly& ambient);

// Z-span of (1, L_1(alpha)/p^r1, L_2(alpha)/p^r2, L_3(alpha)/p^r3).
OrderBasis order_from_triangular(const std::array<IntPoly, 3>& numerators,
                                 const std::array<unsigned long, 3>& exponents, Prime p, const IntPoly& ambient);

// Left kernel of a matrix over F_p: all c with sum_i c_i row_i = 0.
std::vector<std::vector<std::uint64_t>> left_kernel_mod_p(std::vector<std::vector<std::uint64_t>> rows, Prime p);

struct MaximalOrder {
  OrderBasis order;
  long vp_index;
  int rounds;
};

// Enlarges `start` to its p-maximal overorder: p-radical as the kernel of the
// p^k-power Frobenius on O/pO (p^k >= 4), then its ring of multipliers, until
// stable.
MaximalOrder p_maximalize(const OrderBasis& start, Prime p);

// p-maximal order containing Z[alpha] for a monic irreducible quartic.
MaximalOrder p_maximal_order(const IntPoly& ambient, Prime p);

bool contains(const OrderBasis& order, const QuarticElement& w);

}  // namespace qib::oracle
