#pragma once

#include <cstdint>
#include <vector>

#include "quarticib/intpoly.hpp"

namespace qib {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
// Inverse modulo a prime; throws on zero.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);
std::uint64_t reduce_mod(const Integer& x, Prime p);

// Polynomial over F_p with coefficients in [0, p), ascending degree, no
// trailing zeros.
class ModPoly {
 public:
  explicit ModPoly(Prime p) : p_(p) {}
  ModPoly(std::vector<std::uint64_t> coeffs, Prime p);
  static ModPoly reduce(const IntPoly& f, Prime p);
  static ModPoly monomial(std::uint64_t c, std::size_t degree, Prime p);

  Prime modulus() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }
  std::uint64_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  std::uint64_t leading() const { return c_.empty() ? 0 : c_.back(); }

  std::uint64_t operator()(std::uint64_t x) const;
  ModPoly derivative() const;
  ModPoly monic() const;
  // Canonical lift to Z[X] with coefficients in [0, p).
  IntPoly lift() const;

  ModPoly& operator+=(const ModPoly& o);
  ModPoly& operator-=(const ModPoly& o);
  friend ModPoly operator+(ModPoly l, const ModPoly& r) { return l += r; }
  friend ModPoly operator-(ModPoly l, const ModPoly& r) { return l -= r; }
  friend ModPoly operator*(const ModPoly& l, const ModPoly& r);
  ModPoly scaled(std::uint64_t c) const;
  friend bool operator==(const ModPoly& l, const ModPoly& r) { return l.p_ == r.p_ && l.c_ == r.c_; }

  std::string to_string(std::string_view var = "X") const { return lift().to_string(var); }

 private:
  void trim();

  std::vector<std::uint64_t> c_;
  Prime p_;
};

struct ModDivMod {
  ModPoly quotient;
  ModPoly remainder;
};

ModDivMod divmod(const ModPoly& f, const ModPoly& g);
ModPoly operator%(const ModPoly& f, const ModPoly& g);
// Monic gcd (zero if both are zero).
ModPoly gcd(ModPoly a, ModPoly b);
ModPoly powmod(const ModPoly& base, const Integer& e, const ModPoly& modulus);

struct ModFactor {
  ModPoly factor;
  int multiplicity;
};

enum class FactorMethod {
  Auto,            // exhaustive search for p < 1000, distinct-degree otherwise
  Exhaustive,      // root search plus trial monic quadratics
  DistinctDegree,  // squarefree + distinct-degree + equal-degree splitting (odd p only)
};

// Complete factorization of f mod p into monic irreducibles, sorted by degree,
// then lexicographically by ascending coefficient sequence.  Supports degree <= 4
// after reduction; a constant reduction yields an empty list.
std::vector<ModFactor> factor_mod_p(const IntPoly& f, Prime p, FactorMethod method = FactorMethod::Auto);

}  // namespace qib
