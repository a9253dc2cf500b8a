#include "quarticib/quartic_general.hpp"

#include "quarticib/arith.hpp"
#include "quarticib/irreducible.hpp"
#include "quarticib/newton.hpp"
#include "quarticib/polyring.hpp"

namespace qib {

QuarticField::QuarticField(IntPoly polynomial) : poly_(std::move(polynomial)) {
  if (poly_.degree() != 4 || !poly_.is_monic()) throw std::invalid_argument("QuarticField: expected a monic quartic");
  disc_ = discriminant(poly_);
  if (auto g = quartic_rational_factor(poly_))
    throw ReducibleError(poly_.to_string() + " is divisible by " + g->to_string());
}

bool QuarticField::satisfies_hypothesis(Prime p) const {
  return vp_int(poly_.coeff(3), p) == 0 || vp_int(poly_.coeff(2), p) <= 1 || vp_int(poly_.coeff(1), p) <= 2 ||
         vp_int(poly_.coeff(0), p) <= 3;
}

namespace {

const IntPoly X = IntPoly::x();

// Data of a linear factor phi = X - x0: theta = alpha - x0 and the phi-adic
// digits c_i of P(X + x0).
struct LinearPlace {
  Integer x0;
  IntPoly digits;
  long h1 = 0, h2 = 0, h3 = 0;

  // (theta^2 + c3 theta) and (theta^3 + c3 theta^2 + c2 theta) as polynomials in alpha.
  IntPoly w2_numerator() const { return taylor_shift(IntPoly{0, digits.coeff(3), 1}, -x0); }
  IntPoly w3_numerator() const { return taylor_shift(IntPoly{0, digits.coeff(2), digits.coeff(3), 1}, -x0); }
};

LinearPlace linear_place(const IntPoly& f, const RegularityEntry& e) {
  LinearPlace place;
  place.x0 = -e.phi.coeff(0);
  place.digits = taylor_shift(f, place.x0);
  const auto& h = e.index.h;
  place.h1 = h.size() > 1 ? h[1] : 0;
  place.h2 = h.size() > 2 ? h[2] : 0;
  place.h3 = h.size() > 3 ? h[3] : 0;
  return place;
}

struct Case5 {
  LinearPlace small, large;  // h3(small) <= h3(large)
};

Case5 case5_places(const IntPoly& f, const std::vector<const RegularityEntry*>& repeated) {
  Case5 c{linear_place(f, *repeated[0]), linear_place(f, *repeated[1])};
  if (c.small.h3 > c.large.h3) std::swap(c.small, c.large);
  return c;
}

void check_preconditions(const QuarticField& field, Prime p) {
  if (!is_probable_prime(Integer(p))) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (!field.satisfies_hypothesis(p))
    throw HypothesisError("v_p(m) >= 1, v_p(n) >= 2, v_p(a) >= 3 and v_p(b) >= 4 at p=" + std::to_string(p));
}

}  // namespace

TriangularPBasis p_basis_regular(const QuarticField& field, Prime p) {
  check_preconditions(field, p);
  const IntPoly& f = field.polynomial();
  const RegularityCertificate cert = p_regularity(f, p);
  if (!cert.regular) throw NotRegularError(f.to_string() + " is not " + std::to_string(p) + "-regular");
  std::vector<const RegularityEntry*> repeated;
  for (const auto& e : cert.entries)
    if (e.multiplicity >= 2) repeated.push_back(&e);

  TriangularPBasis basis;
  basis.p = p;
  basis.ambient = f;
  basis.vp_disc = vp_int(field.disc(), p).value();
  basis.numerators = {X, IntPoly::monomial(1, 2), IntPoly::monomial(1, 3)};
  basis.exponents = {0, 0, 0};

  if (repeated.empty()) {
    basis.label = "T1";
  } else if (repeated.size() == 1 && repeated[0]->phi.degree() == 1) {
    const RegularityEntry& e = *repeated[0];
    basis.label = e.multiplicity == 4 ? "T2" : e.multiplicity == 3 ? "T3" : "T4";
    const LinearPlace place = linear_place(f, e);
    basis.numerators = {X, place.w2_numerator(), place.w3_numerator()};
    basis.exponents = {0, static_cast<unsigned long>(place.h2), static_cast<unsigned long>(place.h3)};
    // Only case 2 can start its principal polygon at abscissa 0: when P is
    // normalized in alpha but not in theta, theta/p^h1 is needed as well.
    if (place.h1 > 0) {
      basis.numerators[0] = IntPoly{-place.x0, Integer(1)};
      basis.exponents[0] = static_cast<unsigned long>(place.h1);
    }
  } else if (repeated.size() == 2) {
    const Case5 c = case5_places(f, repeated);
    if (c.small.h3 == 0) {
      basis.label = "T5a";
      basis.numerators[2] = c.large.w3_numerator();
      basis.exponents = {0, 0, static_cast<unsigned long>(c.large.h3)};
    } else {
      basis.label = "T5b";
      const IntPoly U = c.small.w3_numerator() - c.large.w3_numerator();
      const Integer q = ipow(p, static_cast<unsigned long>(c.small.h3));
      Integer inv;
      if (U.degree() != 2 || mpz_invert(inv.get_mpz_t(), U.coeff(2).get_mpz_t(), q.get_mpz_t()) == 0)
        throw TableMismatchError("T5b: X^2 coefficient of the difference element is not a unit");
      // inv * U(alpha)/q is integral and agrees with the monic numerator below
      // up to integral multiples of 1, alpha, alpha^2.
      basis.numerators[1] = IntPoly{mod_nonneg(inv * U.coeff(0), q), mod_nonneg(inv * U.coeff(1), q), 1};
      basis.numerators[2] = c.large.w3_numerator();
      basis.exponents = {0, static_cast<unsigned long>(c.small.h3), static_cast<unsigned long>(c.large.h3)};
    }
  } else {
    // phi of degree 2 with multiplicity 2: P = phi^2 + A phi + B.
    basis.label = "T6";
    const IntPoly& phi = repeated[0]->phi;
    const PhiExpansion dev = phi_expand(f, phi);
    const Valuation vA = vp_poly(dev.digit(1), p), vB = vp_poly(dev.digit(0), p);
    long h = vB.is_finite() ? vB.value() / 2 : -1;
    if (vA.is_finite() && (h < 0 || vA.value() < h)) h = vA.value();
    if (h < 0) throw TableMismatchError("T6: phi^2 divides P");
    basis.numerators = {X, phi, X * phi};
    basis.exponents = {0, static_cast<unsigned long>(h), static_cast<unsigned long>(h)};
  }
  finalize_basis(basis, std::nullopt);
  if (basis.vp_index != cert.index_bound())
    throw TableMismatchError(basis.label + ": exponents sum to " + std::to_string(basis.vp_index) +
                             " but the index bound is " + std::to_string(cert.index_bound()));
  return basis;
}

IntPoly case5_difference_numerator(const QuarticField& field, Prime p) {
  check_preconditions(field, p);
  const IntPoly& f = field.polynomial();
  const RegularityCertificate cert = p_regularity(f, p);
  std::vector<const RegularityEntry*> repeated;
  for (const auto& e : cert.entries)
    if (e.multiplicity >= 2) repeated.push_back(&e);
  if (repeated.size() != 2) throw std::invalid_argument("case5_difference_numerator: P mod p is not phi1^2 phi2^2");
  const Case5 c = case5_places(f, repeated);
  if (c.small.h3 == 0) throw std::invalid_argument("case5_difference_numerator: some h_3 is zero");
  return c.small.w3_numerator() - c.large.w3_numerator();
}

}  // namespace qib
