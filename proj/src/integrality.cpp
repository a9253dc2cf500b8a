#include "quarticib/integrality.hpp"

#include "quarticib/polyring.hpp"

namespace qib {

QuarticElement QuarticElement::from_numerator(const IntPoly& numerator, unsigned long i, Prime p, IntPoly ambient) {
  if (numerator.degree() > 3) throw std::invalid_argument("QuarticElement: numerator degree above 3");
  return QuarticElement{numerator.coeff(0), numerator.coeff(1), numerator.coeff(2), numerator.coeff(3),
                        i, p, std::move(ambient)};
}

namespace {

void require_quartic(const IntPoly& ambient) {
  if (ambient.degree() != 4 || !ambient.is_monic())
    throw std::invalid_argument("ambient polynomial must be a monic quartic");
}

}  // namespace

LemmaCoefficients char_poly_lemma(const QuarticElement& w) {
  require_quartic(w.ambient);
  if (w.ambient.coeff(3) != 0 || w.ambient.coeff(2) != 0)
    throw std::invalid_argument("char_poly_lemma: ambient must be X^4 + aX + b");
  const Integer& a = w.ambient.coeff(1);
  const Integer& b = w.ambient.coeff(0);
  const Integer &x = w.x, &y = w.y, &z = w.z, &t = w.t;
  const Integer a2 = a * a, a3 = a2 * a, b2 = b * b, b3 = b2 * b;
  const Integer x2 = x * x, y2 = y * y, z2 = z * z, t2 = t * t;
  const Integer x3 = x2 * x, y3 = y2 * y, z3 = z2 * z, t3 = t2 * t;

  LemmaCoefficients c;
  c.a3 = -4 * x + 3 * a * t;
  c.a2 = 6 * x2 - 9 * a * x * t + 3 * a * y * z + 4 * b * y * t + 2 * b * z2 + 3 * a2 * t2;
  c.a1 = -(4 * x3 - 9 * a * x2 * t + 4 * b * x * z2 + 8 * b * x * y * t + 6 * a * x * y * z + 6 * a2 * x * t2 -
           a * y3 - 4 * b * y2 * z - 3 * a2 * y * z * t + a2 * z3 - 5 * a * b * y * t2 + a * b * z2 * t +
           4 * b2 * z * t2 - a3 * t3);
  c.a0 = x2 * x2 + 3 * a * x2 * y * z + 2 * b * x2 * z2 - a * x * y3 - 4 * b * x * y2 * z - 3 * a * x3 * t +
         b * y2 * y2 + b2 * z2 * z2 + b3 * t2 * t2 + 3 * a2 * x2 * t2 - 3 * a2 * x * y * z * t + a2 * x * z3 -
         5 * a * b * x * y * t2 + a * b * x * z2 * t + 4 * b2 * x * z * t2 - a3 * x * t3 + 4 * b * x2 * y * t +
         3 * a * b * y2 * z * t + 2 * b2 * y2 * t2 - a * b * y * z3 - 4 * b2 * y * z2 * t + a2 * b * y * t3 -
         a * b2 * z * t3;
  return c;
}

IntPoly mul_mod(const IntPoly& f, const IntPoly& g, const IntPoly& ambient) {
  return divmod_monic(f * g, ambient).remainder;
}

std::array<Integer, 4> numerator_char_poly(const IntPoly& numerator, const IntPoly& ambient) {
  require_quartic(ambient);
  constexpr std::size_t n = 4;
  using Matrix = std::array<std::array<Integer, n>, n>;
  // Column j holds the coordinates of numerator * alpha^j.
  Matrix m{};
  IntPoly col = divmod_monic(numerator, ambient).remainder;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t r = 0; r < n; ++r) m[r][j] = col.coeff(r);
    col = mul_mod(col, IntPoly::x(), ambient);
  }
  auto mul = [](const Matrix& l, const Matrix& r) {
    Matrix out{};
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) out[i][j] += l[i][k] * r[k][j];
    return out;
  };
  // Faddeev-LeVerrier; every division by k is exact for an integer matrix.
  std::array<Integer, n + 1> c{};  // c[k] = coefficient of X^k
  c[n] = 1;
  Matrix mk{};
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix prod = mul(m, mk);
    for (std::size_t d = 0; d < n; ++d) prod[d][d] += c[n - k + 1];
    mk = prod;
    Matrix am = mul(m, mk);
    Integer tr = 0;
    for (std::size_t d = 0; d < n; ++d) tr += am[d][d];
    Integer q = -tr;
    mpz_divexact_ui(q.get_mpz_t(), q.get_mpz_t(), k);
    c[n - k] = q;
  }
  return {c[3], c[2], c[1], c[0]};
}

std::array<Rational, 4> char_poly_generic(const QuarticElement& w) {
  const auto c = numerator_char_poly(w.numerator(), w.ambient);
  const Integer q = ipow(w.p, w.i);
  std::array<Rational, 4> out;
  Integer qk = 1;
  for (std::size_t k = 0; k < 4; ++k) {
    qk *= q;
    out[k] = Rational(c[k], qk);
    out[k].canonicalize();
  }
  return out;
}

bool is_p_integral(const QuarticElement& w) {
  for (const auto& c : char_poly_generic(w))
    if (c.get_den() != 1) return false;
  return true;
}

QuarticElement times_alpha(const QuarticElement& w) {
  const IntPoly product = mul_mod(w.numerator(), IntPoly::x(), w.ambient);
  return QuarticElement::from_numerator(product, w.i, w.p, w.ambient);
}

}  // namespace qib
