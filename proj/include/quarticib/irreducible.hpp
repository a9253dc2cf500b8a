#pragma once

#include <optional>

#include "quarticib/intpoly.hpp"

namespace qib {

// A monic factor of degree 1 or 2 of X^4 + aX + b over Z, if one exists.
// Integer roots and the resolvent cubic U^3 - 4bU - a^2 are located by
// bisection on monotone pieces, so no factorization of a or b is needed.
std::optional<IntPoly> trinomial_rational_factor(const Integer& a, const Integer& b);
inline bool trinomial_is_irreducible(const Integer& a, const Integer& b) {
  return !trinomial_rational_factor(a, b).has_value();
}

// Same for an arbitrary monic quartic, by enumerating the divisors of the
// constant term.  Throws FactorizationIncompleteError when the constant term
// cannot be factored.
std::optional<IntPoly> quartic_rational_factor(const IntPoly& f);
inline bool quartic_is_irreducible(const IntPoly& f) { return !quartic_rational_factor(f).has_value(); }

}  // namespace qib
