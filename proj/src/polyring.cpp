#include "quarticib/polyring.hpp"

#include <algorithm>

namespace qib {

IntPoly PhiExpansion::digit(std::size_t power) const {
  if (power > top_power()) return {};
  return terms_[top_power() - power];
}

IntPoly PhiExpansion::reconstruct() const {
  IntPoly acc;
  for (const auto& a : terms_) acc = acc * phi_ + a;
  return acc;
}

PhiExpansion phi_expand(const IntPoly& p, const IntPoly& phi) {
  if (!phi.is_monic() || phi.degree() < 1) throw std::invalid_argument("phi_expand: phi must be monic of degree >= 1");
  std::vector<IntPoly> digits;  // ascending powers of phi
  IntPoly rest = p;
  do {
    auto [q, r] = divmod_monic(rest, phi);
    digits.push_back(std::move(r));
    rest = std::move(q);
  } while (!rest.is_zero());
  std::reverse(digits.begin(), digits.end());
  return PhiExpansion(phi, std::move(digits));
}

PAdicSplit vp_split(const Integer& x, Prime p) {
  if (p < 2) throw std::invalid_argument("vp: modulus must be a prime");
  if (x == 0) return {Valuation::infinity(), Integer(0)};
  Integer u = x;
  long v = 0;
  while (mpz_divisible_ui_p(u.get_mpz_t(), p)) {
    mpz_divexact_ui(u.get_mpz_t(), u.get_mpz_t(), p);
    ++v;
  }
  return {Valuation(v), u};
}

Valuation vp_int(const Integer& x, Prime p) { return vp_split(x, p).valuation; }

Valuation vp_poly(const IntPoly& f, Prime p) {
  Valuation best = Valuation::infinity();
  for (const auto& c : f.coeffs()) best = std::min(best, vp_int(c, p));
  return best;
}

Integer ipow(Prime p, unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, e);
  return r;
}

Integer determinant(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = t;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Integer resultant(const IntPoly& f, const IntPoly& g) {
  const int m = f.degree();
  const int n = g.degree();
  if (m < 0 || n < 0) return 0;
  if (m == 0 && n == 0) return 1;
  const auto size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<Integer>> s(size, std::vector<Integer>(size, 0));
  // n rows of f, then m rows of g; coefficients from the leading one down.
  for (int r = 0; r < n; ++r)
    for (int j = 0; j <= m; ++j)
      s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + j)] = f.coeff(static_cast<std::size_t>(m - j));
  for (int r = 0; r < m; ++r)
    for (int j = 0; j <= n; ++j)
      s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + j)] = g.coeff(static_cast<std::size_t>(n - j));
  return determinant(std::move(s));
}

Integer discriminant(const IntPoly& p) {
  const int n = p.degree();
  if (n < 1) throw std::invalid_argument("discriminant: degree must be >= 1");
  Integer r = resultant(p, p.derivative());
  if (((n * (n - 1)) / 2) % 2 != 0) r = -r;
  mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), p.leading().get_mpz_t());
  return r;
}

bool dedekind_test(const IntPoly& p, Prime prime) {
  if (!p.is_monic()) throw std::invalid_argument("dedekind_test: polynomial must be monic");
  const auto factors = factor_mod_p(p, prime);
  IntPoly product = IntPoly::constant(1);
  ModPoly repeated = ModPoly::monomial(1, 0, prime);
  bool any_repeated = false;
  for (const auto& [g, e] : factors) {
    product = product * pow(g.lift(), static_cast<unsigned>(e));
    if (e >= 2) {
      repeated = repeated * g;
      any_repeated = true;
    }
  }
  if (!any_repeated) return false;
  // P - prod(g_i^e_i) is divisible by p; its quotient must share no repeated factor.
  const IntPoly f = divide_exact(p - product, Integer(prime));
  const ModPoly common = gcd(ModPoly::reduce(f, prime), repeated);
  return common.degree() > 0;
}

}  // namespace qib
