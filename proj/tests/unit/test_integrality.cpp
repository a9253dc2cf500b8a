#include <random>

#include "doctest.h"

#include "quarticib/integrality.hpp"
#include "quarticib/oracle.hpp"
#include "quarticib/polyring.hpp"

using namespace qib;

namespace {

IntPoly trinomial(long a, long b) { return IntPoly{Integer(b), Integer(a), Integer(0), Integer(0), Integer(1)}; }

std::array<Rational, 4> monic_coeffs(std::initializer_list<long> c) {
  std::array<Rational, 4> r;
  std::size_t k = 0;
  for (long x : c) r[k++] = Rational(x);
  return r;
}

Rational frac(const Integer& n, const Integer& d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

}  // namespace

TEST_CASE("char_poly_lemma examples") {
  const IntPoly f = trinomial(7, 11);
  const QuarticElement alpha{0, 1, 0, 0, 0, 2, f};
  CHECK(char_poly_lemma(alpha) == LemmaCoefficients{0, 0, 7, 11});
  // alpha^2: X^4 + 2b X^2 - a^2 X + b^2
  const QuarticElement alpha2{0, 0, 1, 0, 0, 2, f};
  CHECK(char_poly_lemma(alpha2) == LemmaCoefficients{0, 22, -49, 121});
  const IntPoly g = trinomial(125, 125);
  const QuarticElement w{0, 0, 1, 0, 1, 5, g};
  CHECK(char_poly_generic(w) == monic_coeffs({0, 10, -125, 25}));
}

TEST_CASE("char_poly_generic examples") {
  const IntPoly f{Integer(3), Integer(5), Integer(6), Integer(4), Integer(1)};
  CHECK(char_poly_generic(QuarticElement{0, 1, 0, 0, 0, 3, f}) == monic_coeffs({4, 6, 5, 3}));
  // B5/B6 element (alpha^2 + 2 alpha + 2)/4 with a = 16, b = 4 + 16
  CHECK(is_p_integral(QuarticElement{2, 2, 1, 0, 2, 2, trinomial(16, 20)}));
}

TEST_CASE("lemma closed forms equal the generic characteristic polynomial") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> d(-100, 100);
  std::uniform_int_distribution<unsigned long> e(0, 3);
  const Prime primes[] = {2, 3, 5, 7};
  for (int n = 0; n < 500; ++n) {
    const QuarticElement w{d(rng), d(rng), d(rng), d(rng), e(rng), primes[n % 4], trinomial(d(rng), d(rng))};
    const auto lemma = char_poly_lemma(w);
    const auto generic = char_poly_generic(w);
    const Integer q = ipow(w.p, w.i);
    CHECK(generic[0] == frac(lemma.a3, q));
    CHECK(generic[1] == frac(lemma.a2, q * q));
    CHECK(generic[2] == frac(lemma.a1, q * q * q));
    CHECK(generic[3] == frac(lemma.a0, q * q * q * q));
  }
}

TEST_CASE("is_p_integral examples") {
  CHECK(is_p_integral(QuarticElement{0, 0, 0, 1, 2, 5, trinomial(125, 125)}));
  CHECK_FALSE(is_p_integral(QuarticElement{0, 1, 0, 0, 1, 2, trinomial(1, 1)}));
  CHECK(is_p_integral(QuarticElement{0, 1, -1, 1, 1, 3, trinomial(1, 81)}));
  CHECK_THROWS(char_poly_lemma(QuarticElement{0, 1, 0, 0, 0, 2, IntPoly{Integer(1), Integer(0), Integer(1), Integer(0), Integer(1)}}));
}

TEST_CASE("is_p_integral agrees with membership in the p-maximal order") {
  std::mt19937_64 rng(32);
  std::uniform_int_distribution<long> d(-200, 200);
  for (Prime p : {2UL, 3UL, 5UL}) {
    int fields = 0;
    while (fields < 30) {
      const IntPoly f = trinomial(d(rng), d(rng));
      if (discriminant(f) == 0) continue;
      ++fields;
      const auto m = oracle::p_maximal_order(f, p);
      const Integer pp = ipow(p, 2);
      std::uniform_int_distribution<long> c(0, pp.get_si() * (long)p - 1);
      for (int k = 0; k < 40; ++k) {
        const QuarticElement w{c(rng), c(rng), c(rng), c(rng), 1 + (unsigned long)(k % 2), p, f};
        CHECK(is_p_integral(w) == oracle::contains(m.order, w));
      }
      // the oracle's own basis elements are integral
      for (const auto& row : m.order.rows()) {
        Integer den = 1;
        for (const auto& x : row) den = lcm(den, x.get_den());
        const auto v = vp_split(den, p);
        const Integer num[4] = {row[0].get_num() * (den / row[0].get_den()), row[1].get_num() * (den / row[1].get_den()),
                                row[2].get_num() * (den / row[2].get_den()), row[3].get_num() * (den / row[3].get_den())};
        // den is a p-power here
        CHECK(v.unit == 1);
        CHECK(is_p_integral(QuarticElement{num[0], num[1], num[2], num[3], (unsigned long)v.valuation.value(), p, f}));
      }
    }
  }
}

TEST_CASE("times_alpha multiplies by alpha") {
  std::mt19937_64 rng(33);
  std::uniform_int_distribution<long> d(-50, 50);
  for (int n = 0; n < 100; ++n) {
    const IntPoly f = trinomial(d(rng), d(rng));
    const QuarticElement w{d(rng), d(rng), d(rng), d(rng), 1, 3, f};
    const auto aw = times_alpha(w);
    CHECK(aw.numerator() == mul_mod(w.numerator(), IntPoly::x(), f));
    CHECK(aw.i == w.i);
  }
}
