#pragma once

#include <array>

#include "quarticib/intpoly.hpp"
#include "quarticib/types.hpp"

namespace qib {

// w = (t alpha^3 + z alpha^2 + y alpha + x) / p^i in Q(alpha), alpha a root of
// the monic quartic `ambient`.  Stored exactly as given: common factors of the
// numerator and p^i are not cancelled.
struct QuarticElement {
  Integer x, y, z, t;
  unsigned long i = 0;
  Prime p = 2;
  IntPoly ambient;

  static QuarticElement from_numerator(const IntPoly& numerator, unsigned long i, Prime p, IntPoly ambient);
  IntPoly numerator() const { return IntPoly{x, y, z, t}; }
};

// Numerator coefficients of the characteristic polynomial of multiplication by
// w for X^4 + aX + b.  ch_w = X^4 + A3/p^i X^3 + A2/p^2i X^2 + A1/p^3i X + A0/p^4i.
struct LemmaCoefficients {
  Integer a3, a2, a1, a0;
  friend bool operator==(const LemmaCoefficients&, const LemmaCoefficients&) = default;
};

// Closed forms; rejects ambients with an X^3 or X^2 term.
LemmaCoefficients char_poly_lemma(const QuarticElement& w);

// Characteristic polynomial (coefficients of X^3, X^2, X, 1) of the integer
// matrix of multiplication by `numerator` on the basis (1, alpha, alpha^2, alpha^3).
std::array<Integer, 4> numerator_char_poly(const IntPoly& numerator, const IntPoly& ambient);

// Characteristic polynomial of w for any monic quartic ambient, coefficients of
// X^3, X^2, X, 1.
std::array<Rational, 4> char_poly_generic(const QuarticElement& w);

// w is integral iff all four coefficients of ch_w are integers.
bool is_p_integral(const QuarticElement& w);

// Reduces the product of two polynomials modulo the monic ambient.
IntPoly mul_mod(const IntPoly& f, const IntPoly& g, const IntPoly& ambient);

// alpha * w, rewritten in the (x, y, z, t) / p^i form.
QuarticElement times_alpha(const QuarticElement& w);

}  // namespace qib
