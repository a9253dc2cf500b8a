#pragma once

#include <compare>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace qib {

using Integer = mpz_class;
using Rational = mpq_class;

// Primes are machine words throughout; every coefficient is an Integer.
using Prime = unsigned long;

// p-adic valuation of an integer or integer polynomial.  The zero element has
// valuation +infinity, which is a distinct state rather than a large number.
class Valuation {
 public:
  constexpr explicit Valuation(long v) : finite_(true), value_(v) {}

  static constexpr Valuation infinity() { return Valuation(); }

  constexpr bool is_finite() const { return finite_; }
  constexpr bool is_infinite() const { return !finite_; }

  long value() const {
    if (!finite_) throw std::logic_error("value() of infinite valuation");
    return value_;
  }

  friend constexpr bool operator==(const Valuation& l, const Valuation& r) {
    return l.finite_ == r.finite_ && (!l.finite_ || l.value_ == r.value_);
  }
  friend constexpr std::strong_ordering operator<=>(const Valuation& l, const Valuation& r) {
    if (!l.finite_ && !r.finite_) return std::strong_ordering::equal;
    if (!l.finite_) return std::strong_ordering::greater;
    if (!r.finite_) return std::strong_ordering::less;
    return l.value_ <=> r.value_;
  }
  friend constexpr bool operator==(const Valuation& l, long r) { return l.finite_ && l.value_ == r; }
  friend constexpr std::strong_ordering operator<=>(const Valuation& l, long r) {
    if (!l.finite_) return std::strong_ordering::greater;
    return l.value_ <=> r;
  }

  friend constexpr Valuation operator+(const Valuation& l, const Valuation& r) {
    if (!l.finite_ || !r.finite_) return infinity();
    return Valuation(l.value_ + r.value_);
  }

  std::string to_string() const { return finite_ ? std::to_string(value_) : std::string("inf"); }

 private:
  constexpr Valuation() = default;

  bool finite_ = false;
  long value_ = 0;
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The defining polynomial factors over the rationals.
class ReducibleError : public Error {
 public:
  using Error::Error;
};

// (a, b) still admits the substitution alpha = p * alpha'.
class UnnormalizedError : public Error {
 public:
  using Error::Error;
};

// A table row produced an element that is not integral, or whose discriminant
// bookkeeping does not close.  Reaching this means a row is wrong.
class TableMismatchError : public Error {
 public:
  using Error::Error;
};

class NotRegularError : public Error {
 public:
  using Error::Error;
};

class HypothesisError : public Error {
 public:
  using Error::Error;
};

class FactorizationIncompleteError : public Error {
 public:
  using Error::Error;
};

inline Integer integer_from_string(const std::string& s) {
  Integer r;
  if (s.empty() || r.set_str(s, 10) != 0) throw std::invalid_argument("not a decimal integer: " + s);
  return r;
}

}  // namespace qib
