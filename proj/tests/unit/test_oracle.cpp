#include "doctest.h"

#include "quarticib/oracle.hpp"

using namespace qib;
using qib::oracle::p_maximal_order;

namespace {

IntPoly trinomial(long a, long b) { return IntPoly{Integer(b), Integer(a), Integer(0), Integer(0), Integer(1)}; }

std::array<Integer, 4> row_denominators(const oracle::OrderBasis& o) {
  std::array<Integer, 4> d;
  for (std::size_t k = 0; k < 4; ++k) d[k] = o.rows()[k][k].get_den();
  return d;
}

}  // namespace

TEST_CASE("oracle reproduces table A1 at p=5") {
  const auto m = p_maximal_order(trinomial(125, 125), 5);
  CHECK(m.vp_index == 3);
  CHECK(row_denominators(m.order) == std::array<Integer, 4>{1, 1, 5, 25});
  CHECK(m.order.is_multiplicatively_closed());
}

TEST_CASE("oracle on squarefree reduction") {
  CHECK(p_maximal_order(trinomial(1, 1), 2).vp_index == 0);
}

TEST_CASE("oracle reproduces table C4 at p=3") {
  const auto m = p_maximal_order(trinomial(1, 81), 3);
  CHECK(m.vp_index == 1);
  CHECK(row_denominators(m.order) == std::array<Integer, 4>{1, 1, 1, 3});
}

TEST_CASE("oracle rejects a repeated root") {
  // 256*27 = 27*256: X^4 + 4X + 3 = (X+1)^2 (X^2 - 2X + 3)
  CHECK_THROWS_AS(p_maximal_order(trinomial(4, 3), 2), std::invalid_argument);
}

TEST_CASE("oracle contains") {
  const IntPoly f = trinomial(125, 125);
  const auto m = p_maximal_order(f, 5);
  CHECK(oracle::contains(m.order, QuarticElement{0, 0, 0, 1, 2, 5, f}));
  CHECK_FALSE(oracle::contains(m.order, QuarticElement{0, 0, 0, 1, 3, 5, f}));
  CHECK(oracle::contains(m.order, QuarticElement{0, 1, 0, 0, 0, 5, f}));
}

TEST_CASE("p-maximalization is idempotent") {
  for (long a : {16L, 12L, 7L, 4L}) {
    for (long b : {28L, 5L, 11L}) {
      const IntPoly f = trinomial(a, b);
      for (Prime p : {2UL, 3UL}) {
        const auto m = p_maximal_order(f, p);
        const auto again = oracle::p_maximalize(m.order, p);
        CHECK(again.order == m.order);
        CHECK(again.rounds == 1);
      }
    }
  }
}
