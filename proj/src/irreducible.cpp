#include "quarticib/irreducible.hpp"

#include <algorithm>
#include <functional>

#include "quarticib/arith.hpp"

namespace qib {

namespace {

using IntFn = std::function<Integer(const Integer&)>;

// Zero of f on the integers of [lo, hi], where f is strictly monotone there.
std::optional<Integer> monotone_zero(const IntFn& f, Integer lo, Integer hi) {
  if (lo > hi) return std::nullopt;
  const int s_lo = sgn(f(lo));
  const int s_hi = sgn(f(hi));
  if (s_lo == 0) return lo;
  if (s_hi == 0) return hi;
  if (s_lo == s_hi) return std::nullopt;
  while (hi - lo > 1) {
    const Integer mid = floor_div(lo + hi, 2);
    const int s = sgn(f(mid));
    if (s == 0) return mid;
    if (s == s_lo)
      lo = mid;
    else
      hi = mid;
  }
  return std::nullopt;
}

Integer floor_cbrt(const Integer& y) {
  Integer r;
  mpz_root(r.get_mpz_t(), Integer(abs(y)).get_mpz_t(), 3);
  if (y < 0) {
    r = -r;
    if (r * r * r > y) r -= 1;
  }
  return r;
}

bool is_square(const Integer& n, Integer& root) {
  if (n < 0) return false;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  return root * root == n;
}

bool divides(const IntPoly& d, const IntPoly& f) { return divmod_monic(f, d).remainder.is_zero(); }

}  // namespace

std::optional<IntPoly> trinomial_rational_factor(const Integer& a, const Integer& b) {
  const IntPoly f{b, a, 0, 0, 1};
  const Integer bound = 1 + std::max<Integer>(abs(a), abs(b));

  // Integer roots: f' = 4x^3 + a changes sign once, at cbrt(-a/4).
  const IntFn quartic = [&](const Integer& x) -> Integer { return x * x * x * x + a * x + b; };
  const Integer c = floor_cbrt(floor_div(-a, 4));
  const std::optional<Integer> roots[] = {monotone_zero(quartic, -bound, std::min<Integer>(c, bound)),
                                          monotone_zero(quartic, std::max<Integer>(c + 1, -bound), bound)};
  for (const auto& root : roots)
    if (root) return IntPoly{Integer(-*root), Integer(1)};

  // (X^2 + uX + v)(X^2 - uX + w) with u != 0 forces U = u^2 to be a root of
  // U^3 - 4bU - a^2.
  const IntFn cubic = [&](const Integer& u) -> Integer { return u * u * u - 4 * b * u - a * a; };
  const Integer ubound = 1 + std::max<Integer>(4 * abs(b), a * a);
  std::vector<std::pair<Integer, Integer>> pieces;
  if (b <= 0) {
    pieces.emplace_back(1, ubound);
  } else {
    Integer s;
    mpz_sqrt(s.get_mpz_t(), Integer(floor_div(4 * b, 3)).get_mpz_t());
    pieces.emplace_back(1, s);
    pieces.emplace_back(s + 1, ubound);
  }
  for (const auto& [lo, hi] : pieces) {
    const auto root = monotone_zero(cubic, lo, hi);
    Integer u;
    if (!root || !is_square(*root, u)) continue;
    if (!mpz_divisible_p(a.get_mpz_t(), u.get_mpz_t())) continue;
    const Integer q = a / u;
    const Integer twice_v = *root - q;
    if (!mpz_even_p(twice_v.get_mpz_t())) continue;
    const IntPoly g{Integer(twice_v / 2), u, 1};
    if (divides(g, f)) return g;
  }
  // u = 0: X^4 - v^2 = (X^2 + v)(X^2 - v).
  Integer v;
  if (a == 0 && is_square(-b, v)) return IntPoly{v, 0, 1};
  return std::nullopt;
}

std::optional<IntPoly> quartic_rational_factor(const IntPoly& f) {
  if (f.degree() != 4 || !f.is_monic()) throw std::invalid_argument("quartic_rational_factor: expected a monic quartic");
  const Integer& b = f.coeff(0);
  if (b == 0) return IntPoly::x();
  const Factorization fac = factor_integer(b);
  if (!fac.complete())
    throw FactorizationIncompleteError("quartic_rational_factor: cannot factor constant term " + b.get_str());

  std::vector<Integer> divisors{1};
  for (const auto& [prime, e] : fac.factors) {
    const std::size_t n = divisors.size();
    Integer pk = 1;
    for (unsigned long k = 1; k <= e; ++k) {
      pk *= prime;
      for (std::size_t i = 0; i < n; ++i) divisors.push_back(divisors[i] * pk);
    }
  }

  const Integer &m = f.coeff(3), &n = f.coeff(2), &a = f.coeff(1);
  for (const auto& d : divisors) {
    for (const Integer& r : {Integer(d), Integer(-d)})
      if (f(r) == 0) return IntPoly{Integer(-r), 1};
  }
  // (X^2 + uX + v)(X^2 + u'X + v') with v v' = b, u + u' = m.
  for (const auto& d : divisors) {
    for (const Integer& v : {Integer(d), Integer(-d)}) {
      const Integer w = b / v;
      std::vector<Integer> candidates;
      if (w != v) {
        const Integer num = a - m * v;
        const Integer den = w - v;
        if (mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) candidates.push_back(num / den);
      } else if (a == m * v) {
        // u^2 - m u + (n - 2v) = 0
        Integer root;
        const Integer disc = m * m - 4 * (n - 2 * v);
        if (is_square(disc, root))
          for (const Integer& s : {Integer(m + root), Integer(m - root)})
            if (mpz_even_p(s.get_mpz_t())) candidates.push_back(s / 2);
      }
      for (const auto& u : candidates) {
        const IntPoly g{v, u, 1};
        if (divides(g, f)) return g;
      }
    }
  }
  return std::nullopt;
}

}  // namespace qib
