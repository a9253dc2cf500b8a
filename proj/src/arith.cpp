#include "quarticib/arith.hpp"

#include <algorithm>
#include <map>

namespace qib {

bool is_probable_prime(const Integer& n) { return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer mod_nonneg(const Integer& a, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer solve_linear_congruence(const Integer& c, const Integer& d, const Integer& m) {
  if (m == 1) return 0;
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t()) == 0)
    throw std::domain_error("solve_linear_congruence: coefficient not invertible");
  return mod_nonneg(inv * d, m);
}

Integer crt(const std::vector<std::pair<Integer, Integer>>& residues_moduli) {
  Integer x = 0;
  Integer modulus = 1;
  for (const auto& [r, m] : residues_moduli) {
    if (m == 1) continue;
    // x + modulus * k = r (mod m)
    const Integer k = solve_linear_congruence(modulus, r - x, m);
    x += modulus * k;
    modulus *= m;
    x = mod_nonneg(x, modulus);
  }
  return x;
}

namespace {

// Brent's variant of Pollard rho; returns a nontrivial factor or 0.
Integer pollard_brent(const Integer& n, unsigned long budget) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1; c < 20; ++c) {
    Integer y = 2, x, g = 1, q = 1, ys;
    unsigned long r = 1, spent = 0;
    const unsigned long m = 128;
    auto f = [&](const Integer& v) { return mod_nonneg(v * v + c, n); };
    while (g == 1 && spent < budget) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mod_nonneg(q * abs(x - y), n);
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
        spent += m;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = f(ys);
        Integer d = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != 1 && g != n) return g;
  }
  return 0;
}

void split_cofactor(const Integer& n, unsigned long budget, std::map<Integer, unsigned long>& primes,
                    std::vector<Integer>& stuck) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++primes[n];
    return;
  }
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    Integer s;
    mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
    split_cofactor(s, budget, primes, stuck);
    split_cofactor(s, budget, primes, stuck);
    return;
  }
  const Integer d = pollard_brent(n, budget);
  if (d == 0) {
    stuck.push_back(n);
    return;
  }
  split_cofactor(d, budget, primes, stuck);
  split_cofactor(n / d, budget, primes, stuck);
}

}  // namespace

Factorization factor_integer(const Integer& n, unsigned long trial_bound, unsigned long rho_iterations) {
  Factorization out;
  Integer m = abs(n);
  if (m == 0) throw std::invalid_argument("factor_integer: zero has no factorization");
  std::map<Integer, unsigned long> primes;
  for (unsigned long d = 2; d <= trial_bound && Integer(d) * d <= m; d += (d == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), d);
      ++primes[Integer(d)];
    }
  }
  std::vector<Integer> stuck;
  if (m > 1) split_cofactor(m, rho_iterations, primes, stuck);
  for (auto& [p, e] : primes) out.factors.emplace_back(p, e);
  for (const auto& s : stuck) out.cofactor *= s;
  return out;
}

}  // namespace qib
