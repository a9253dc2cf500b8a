#pragma once

#include <map>
#include <vector>

#include "quarticib/arith.hpp"
#include "quarticib/pbasis.hpp"

namespace qib {

// Q(alpha) for an irreducible X^4 + aX + b.
class TrinomialField {
 public:
  // Throws ReducibleError when P factors over Q.
  TrinomialField(Integer a, Integer b);

  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }
  // 256 b^3 - 27 a^4
  const Integer& disc() const { return disc_; }
  IntPoly polynomial() const { return IntPoly{b_, a_, 0, 0, 1}; }

 private:
  Integer a_, b_, disc_;
};

Integer trinomial_disc(const Integer& a, const Integer& b);

struct Normalized {
  Integer a, b;
  unsigned long k = 0;  // alpha = p^k alpha'
};

// Divides out (p^3, p^4) while v_p(a) >= 3 and v_p(b) >= 4.
Normalized normalize(const Integer& a, const Integer& b, Prime p);

// Table row for (a, b) at p.  Requires (a, b) normalized at p
// (UnnormalizedError otherwise); TableMismatchError if the row's elements fail
// verification.
TriangularPBasis p_basis(const TrinomialField& field, Prime p);

// normalize, p_basis, then rewrite the basis for the original alpha:
// L'(alpha/p^k) p^(k i) is monic in alpha and the exponent grows by k i.
TriangularPBasis p_basis_scaled(const TrinomialField& field, Prime p);

struct PBasisMap {
  std::map<Prime, TriangularPBasis> bases;  // primes with p^2 | disc
  Factorization disc_factorization;
  // Primes with p^2 | disc that do not fit a machine word.
  std::vector<Integer> unsupported_primes;
  // Every prime with p^2 | disc was found and handled.
  bool complete() const { return disc_factorization.complete() && unsupported_primes.empty(); }
};

PBasisMap p_basis_all(const TrinomialField& field, unsigned long trial_bound = 1000000);

}  // namespace qib
