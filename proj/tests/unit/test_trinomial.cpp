#include <random>

#include "doctest.h"

#include "quarticib/irreducible.hpp"
#include "quarticib/oracle.hpp"
#include "quarticib/polyring.hpp"
#include "quarticib/trinomial.hpp"

using namespace qib;

namespace {

IntPoly trinomial(long a, long b) { return IntPoly{Integer(b), Integer(a), Integer(0), Integer(0), Integer(1)}; }

using Exps = std::array<unsigned long, 3>;

}  // namespace

TEST_CASE("normalize examples") {
  auto n = normalize(Integer(250), Integer(1875), 5);  // (5^3 2, 5^4 3)
  CHECK(n.a == 2);
  CHECK(n.b == 3);
  CHECK(n.k == 1);
  n = normalize(1, 1, 7);
  CHECK(n.a == 1);
  CHECK(n.k == 0);
  n = normalize(Integer(64), Integer(768), 2);
  CHECK(n.a == 1);
  CHECK(n.b == 3);
  CHECK(n.k == 2);
}

TEST_CASE("p_basis examples") {
  auto r = p_basis(TrinomialField(125, 125), 5);
  CHECK(r.label == "A1");
  CHECK(r.exponents == Exps{0, 1, 2});
  CHECK(r.numerators[1] == IntPoly::monomial(1, 2));
  CHECK(r.numerators[2] == IntPoly::monomial(1, 3));
  CHECK(r.vp_dK == 3);
  CHECK(r.vp_disc == 9);

  r = p_basis(TrinomialField(2, 2), 2);
  CHECK(r.label == "B13");
  CHECK(r.exponents == Exps{0, 0, 0});
  CHECK(r.vp_dK == 4);

  r = p_basis(TrinomialField(1, 81), 3);
  CHECK(r.label == "C4");
  CHECK(r.exponents == Exps{0, 0, 1});
  CHECK(r.numerators[2] == IntPoly{Integer(0), Integer(1), Integer(-1), Integer(1)});
  CHECK(r.vp_dK == 1);
  CHECK(r.vp_disc == 3);

  r = p_basis(TrinomialField(1, 23), 5);
  CHECK(r.label == "A8");
  CHECK(TrinomialField(1, 23).disc() == 3114725);
  CHECK(r.exponents == Exps{0, 0, 1});
  // (X^3 + 11X^2 + 121X - 3993)/5, coefficients only matter mod 5
  const IntPoly expect{Integer(-3993), Integer(121), Integer(11), Integer(1)};
  for (std::size_t j = 0; j < 3; ++j) CHECK(mod_nonneg(r.numerators[2].coeff(j) - expect.coeff(j), 5) == 0);
  CHECK(r.vp_dK == 0);

  r = p_basis(TrinomialField(16, 28), 2);
  CHECK(r.label == "B7");
  CHECK(r.exponents == Exps{0, 2, 2});
  CHECK(r.numerators[1] == IntPoly{Integer(2), Integer(0), Integer(1)});
  CHECK(r.numerators[2] == IntPoly{Integer(0), Integer(2), Integer(0), Integer(1)});
  CHECK(r.vp_dK == 6);
}

TEST_CASE("p_basis errors") {
  CHECK_THROWS_AS(TrinomialField(0, 4), ReducibleError);
  CHECK_THROWS_AS(TrinomialField(-2, 1), ReducibleError);  // X = 1 is a root
  CHECK_THROWS_AS(p_basis(TrinomialField(Integer(250), Integer(1875)), 5), UnnormalizedError);
  CHECK_THROWS_AS(p_basis(TrinomialField(1, 1), 4), std::invalid_argument);
}

TEST_CASE("p_basis_all examples") {
  auto m = p_basis_all(TrinomialField(2, 2));
  REQUIRE(m.bases.size() == 1);
  CHECK(m.bases.at(2).label == "B13");
  m = p_basis_all(TrinomialField(125, 125));
  REQUIRE(m.bases.size() == 1);
  CHECK(m.bases.at(5).label == "A1");
  CHECK(m.complete());
  CHECK(p_basis_all(TrinomialField(1, 1)).bases.empty());
}

TEST_CASE("p_basis_scaled matches the oracle on unnormalized pairs") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<long> d(-40, 40);
  int n = 0;
  while (n < 60) {
    const Prime p = (n % 2) ? 2 : 3;
    const long k = 1 + n % 2;
    const Integer a = Integer(d(rng)) * ipow(p, 3 * k), b = Integer(d(rng)) * ipow(p, 4 * k);
    if (!trinomial_is_irreducible(a, b)) continue;
    ++n;
    const TrinomialField field(a, b);
    const auto r = p_basis_scaled(field, p);
    const auto m = oracle::p_maximal_order(field.polynomial(), p);
    CHECK(r.vp_index == m.vp_index);
    for (std::size_t i = 0; i < 3; ++i) CHECK(oracle::contains(m.order, r.element(i)));
  }
}

TEST_CASE("trinomial irreducibility agrees with divisor enumeration") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<long> d(-400, 400);
  int reducible = 0;
  for (int n = 0; n < 2000; ++n) {
    const long a = d(rng), b = d(rng);
    if (b == 0) continue;
    const bool fast = trinomial_is_irreducible(a, b);
    CHECK_MESSAGE(fast == quartic_is_irreducible(trinomial(a, b)), "a=" << a << " b=" << b);
    if (!fast) ++reducible;
  }
  CHECK(reducible > 0);
  // quadratic-times-quadratic: (X^2+uX+v)(X^2-uX+w)
  CHECK_FALSE(trinomial_is_irreducible(0, 4));
  CHECK_FALSE(trinomial_is_irreducible(12, -5));  // (X^2+2X-1)(X^2-2X+5)
  CHECK(trinomial_rational_factor(0, 4).has_value());
  CHECK_FALSE(trinomial_is_irreducible(0, -9));  // (X^2-3)(X^2+3)
  CHECK(trinomial_is_irreducible(1, 1));
}
