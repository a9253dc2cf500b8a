#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "quarticib/types.hpp"

namespace qib {

// Dense univariate polynomial over Z, coefficients in ascending degree.
// The coefficient vector never carries trailing zeros; the zero polynomial is
// the empty vector and has degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<Integer> coeffs);

  static IntPoly monomial(const Integer& c, std::size_t degree);
  static IntPoly constant(const Integer& c) { return monomial(c, 0); }
  static IntPoly x() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  const std::vector<Integer>& coeffs() const { return coeffs_; }
  // Coefficient of X^i; zero past the degree.
  Integer coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }
  const Integer& leading() const;

  Integer operator()(const Integer& x) const;
  Rational operator()(const Rational& x) const;
  IntPoly derivative() const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const Integer& c);

  friend IntPoly operator+(IntPoly l, const IntPoly& r) { return l += r; }
  friend IntPoly operator-(IntPoly l, const IntPoly& r) { return l -= r; }
  friend IntPoly operator*(const IntPoly& l, const IntPoly& r);
  friend IntPoly operator*(IntPoly l, const Integer& c) { return l *= c; }
  friend IntPoly operator*(const Integer& c, IntPoly r) { return r *= c; }
  friend bool operator==(const IntPoly& l, const IntPoly& r) { return l.coeffs_ == r.coeffs_; }

  std::string to_string(std::string_view var = "X") const;

 private:
  void trim();

  std::vector<Integer> coeffs_;
};

struct IntDivMod {
  IntPoly quotient;
  IntPoly remainder;
};

// Euclidean division by a monic divisor; exact over Z.
IntDivMod divmod_monic(const IntPoly& f, const IntPoly& g);

IntPoly pow(const IntPoly& f, unsigned e);

// Q(X) = P(X + t).
IntPoly taylor_shift(const IntPoly& p, const Integer& t);

// Exact division of every coefficient; throws if some coefficient is not divisible.
IntPoly divide_exact(const IntPoly& p, const Integer& d);

}  // namespace qib
