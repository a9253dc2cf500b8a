#include <random>

#include "doctest.h"

#include "quarticib/globalize.hpp"
#include "quarticib/irreducible.hpp"
#include "quarticib/polyring.hpp"

using namespace qib;

namespace {

TriangularPBasis local(Prime p, std::array<IntPoly, 3> nums, std::array<unsigned long, 3> exps, const IntPoly& ambient) {
  TriangularPBasis b;
  b.p = p;
  b.ambient = ambient;
  b.numerators = std::move(nums);
  b.exponents = exps;
  return b;
}

}  // namespace

TEST_CASE("elementary_divisors examples") {
  const IntPoly f{Integer(125), Integer(125), Integer(0), Integer(0), Integer(1)};
  const IntPoly X = IntPoly::x(), X2 = IntPoly::monomial(1, 2), X3 = IntPoly::monomial(1, 3);
  CHECK(elementary_divisors({{5, local(5, {X, X2, X3}, {0, 1, 2}, f)}}) == std::array<Integer, 3>{1, 5, 25});
  CHECK(elementary_divisors({}) == std::array<Integer, 3>{1, 1, 1});
  CHECK(elementary_divisors({{2, local(2, {X, X2, X3}, {0, 0, 1}, f)}, {3, local(3, {X, X2, X3}, {0, 1, 1}, f)}}) ==
        std::array<Integer, 3>{1, 3, 6});
}

TEST_CASE("combine: coefficientwise CRT with least residues") {
  const IntPoly f{Integer(1), Integer(1), Integer(0), Integer(0), Integer(1)};
  const IntPoly X = IntPoly::x(), X2 = IntPoly::monomial(1, 2);
  const auto b2 = local(2, {X, X2, IntPoly{Integer(0), Integer(1), Integer(0), Integer(1)}}, {0, 0, 1}, f);
  const auto b3 = local(3, {X, X2, IntPoly{Integer(0), Integer(0), Integer(2), Integer(1)}}, {0, 0, 1}, f);
  // X^2: 0 mod 2, 2 mod 3 -> 2;  X: 1 mod 2, 0 mod 3 -> 3
  const auto g = combine({{2, b2}, {3, b3}}, f, Integer(36 * 7));
  CHECK(g.numerators[2] == IntPoly{Integer(0), Integer(3), Integer(2), Integer(1)});
  CHECK(g.divisors == std::array<Integer, 3>{1, 1, 6});
  CHECK(g.dK == 7);
  CHECK_THROWS_AS(combine({{2, b2}, {3, b3}}, f, Integer(35)), TableMismatchError);
  const IntPoly other{Integer(2), Integer(1), Integer(0), Integer(0), Integer(1)};
  CHECK_THROWS_AS(combine({{2, b2}}, other, Integer(4)), std::invalid_argument);
}

TEST_CASE("integral_basis examples") {
  auto g = integral_basis(TrinomialField(1, 1));
  CHECK(g.index == 1);
  CHECK(g.dK == 229);
  g = integral_basis(TrinomialField(125, 125));
  CHECK(g.divisors == std::array<Integer, 3>{1, 5, 25});
  CHECK(g.index == 125);
  CHECK(g.dK == Integer(-125 * 3119));
  CHECK(g.numerators[1] == IntPoly::monomial(1, 2));
  g = integral_basis(TrinomialField(2, 2));
  CHECK(g.index == 1);
  CHECK(g.dK == 1616);
}

TEST_CASE("integral_basis properties on random fields") {
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<long> d(-2000, 2000);
  int n = 0;
  while (n < 60) {
    const long a = d(rng) * ((n % 3 == 0) ? 8 : 1), b = d(rng) * ((n % 3 == 1) ? 9 : 1);
    if (!trinomial_is_irreducible(a, b)) continue;
    ++n;
    const TrinomialField field(a, b);
    const auto g = integral_basis(field);
    REQUIRE_FALSE(g.conditional);
    CHECK(g.disc == g.index * g.index * g.dK);
    CHECK(g.divisors[1] % g.divisors[0] == 0);
    CHECK(g.divisors[2] % g.divisors[1] == 0);
    const Rational det = change_of_basis_determinant(g);
    CHECK(abs(det) == Rational(Integer(1), g.index));
    // the Z-span is a ring (so each alpha * w_i stays inside) and is maximal at every p
    const auto order = as_order(g);
    CHECK(order.is_multiplicatively_closed());
    CHECK(order.index() == Rational(g.index));
    for (const auto& [p, e] : factor_integer(g.disc).factors) {
      if (e < 2) continue;
      const Prime q = p.get_ui();
      CHECK(oracle::p_maximal_order(field.polynomial(), q).vp_index == vp_int(g.index, q).value());
    }
  }
}
