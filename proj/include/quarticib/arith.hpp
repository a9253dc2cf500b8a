#pragma once

#include <utility>
#include <vector>

#include "quarticib/types.hpp"

namespace qib {

struct Factorization {
  std::vector<std::pair<Integer, unsigned long>> factors;  // primes ascending
  Integer cofactor = 1;  // composite part left unfactored (1 when complete)
  bool complete() const { return cofactor == 1; }
};

// Trial division up to trial_bound, then primality testing and Pollard-Brent
// rho on the cofactor.  Sign is dropped.  Whatever resists the rho budget is
// left in cofactor.
Factorization factor_integer(const Integer& n, unsigned long trial_bound = 1000000,
                             unsigned long rho_iterations = 200000);

bool is_probable_prime(const Integer& n);

// Least nonnegative x with x = r_i mod m_i for pairwise coprime m_i.
Integer crt(const std::vector<std::pair<Integer, Integer>>& residues_moduli);

// Least nonnegative solution of c*x = d mod m with gcd(c, m) = 1.
Integer solve_linear_congruence(const Integer& c, const Integer& d, const Integer& m);

// Floor division and nonnegative remainder.
Integer floor_div(const Integer& a, const Integer& b);
Integer mod_nonneg(const Integer& a, const Integer& m);

}  // namespace qib
