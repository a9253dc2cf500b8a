#pragma once

#include "quarticib/pbasis.hpp"

namespace qib {

// Q(alpha) for an irreducible monic X^4 + mX^3 + nX^2 + aX + b.
class QuarticField {
 public:
  // Throws ReducibleError when P factors over Q, invalid_argument when P is
  // not a monic quartic.
  explicit QuarticField(IntPoly polynomial);

  const IntPoly& polynomial() const { return poly_; }
  const Integer& disc() const { return disc_; }

  // v_p(m) = 0 or v_p(n) <= 1 or v_p(a) <= 2 or v_p(b) <= 3.
  bool satisfies_hypothesis(Prime p) const;

 private:
  IntPoly poly_;
  Integer disc_;
};

// A triangular p-integral basis for a p-regular P, by the factorization shape
// of P mod p.  Labels are "T1".."T4", "T5a", "T5b", "T6".  In case 2 the
// first element is (alpha - x0)/p^h1 when h1 > 0, alpha otherwise.  Throws
// NotRegularError, HypothesisError, or TableMismatchError (an element fails
// the integrality check or the indices do not add up to the index bound).
TriangularPBasis p_basis_regular(const QuarticField& field, Prime p);

// Case 5 with both h_3 >= 1: the numerator U of w_i - p^(h_3^j - h_3^i) w_j
// = U(alpha)/p^(h_3^i), before U is made monic.  Its X^2 coefficient is a
// p-adic unit.  Throws invalid_argument outside that case.
IntPoly case5_difference_numerator(const QuarticField& field, Prime p);

}  // namespace qib
