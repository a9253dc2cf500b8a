#pragma once

#include <vector>

#include "quarticib/intpoly.hpp"
#include "quarticib/modpoly.hpp"
#include "quarticib/types.hpp"

namespace qib {

// phi-adic development P = a_0 phi^t + a_1 phi^(t-1) + ... + a_t, deg a_i < deg phi.
// terms() follows that descending-power order (a_0 first), which is the
// abscissa order of the Newton polygon; digit(i) is the coefficient of phi^i.
class PhiExpansion {
 public:
  PhiExpansion(IntPoly phi, std::vector<IntPoly> terms) : phi_(std::move(phi)), terms_(std::move(terms)) {}

  const IntPoly& phi() const { return phi_; }
  const std::vector<IntPoly>& terms() const { return terms_; }
  // Largest power t of phi present in the development.
  std::size_t top_power() const { return terms_.size() - 1; }
  const IntPoly& term(std::size_t abscissa) const { return terms_.at(abscissa); }
  IntPoly digit(std::size_t power) const;

  IntPoly reconstruct() const;

 private:
  IntPoly phi_;
  std::vector<IntPoly> terms_;
};

PhiExpansion phi_expand(const IntPoly& p, const IntPoly& phi);

struct PAdicSplit {
  Valuation valuation;
  Integer unit;  // x / p^v; zero when x = 0
};

Valuation vp_int(const Integer& x, Prime p);
PAdicSplit vp_split(const Integer& x, Prime p);
Valuation vp_poly(const IntPoly& f, Prime p);

Integer ipow(Prime p, unsigned long e);

// Determinant of a square integer matrix by fraction-free elimination.
Integer determinant(std::vector<std::vector<Integer>> m);

// Sylvester resultant Res(f, g).
Integer resultant(const IntPoly& f, const IntPoly& g);

// disc(P) = (-1)^(n(n-1)/2) Res(P, P') / lc(P).  For X^4 + aX + b this is
// 256 b^3 - 27 a^4.
Integer discriminant(const IntPoly& p);

// Whether p divides [Z_K : Z[alpha]] for the monic P, by the Dedekind criterion.
bool dedekind_test(const IntPoly& p, Prime prime);

}  // namespace qib
