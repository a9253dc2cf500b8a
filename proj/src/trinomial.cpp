#include "quarticib/trinomial.hpp"

#include "quarticib/irreducible.hpp"
#include "quarticib/newton.hpp"
#include "quarticib/polyring.hpp"

namespace qib {

Integer trinomial_disc(const Integer& a, const Integer& b) {
  const Integer a2 = a * a;
  return 256 * b * b * b - 27 * a2 * a2;
}

TrinomialField::TrinomialField(Integer a, Integer b) : a_(std::move(a)), b_(std::move(b)) {
  disc_ = trinomial_disc(a_, b_);
  if (auto g = trinomial_rational_factor(a_, b_))
    throw ReducibleError(polynomial().to_string() + " is divisible by " + g->to_string());
}

Normalized normalize(const Integer& a, const Integer& b, Prime p) {
  Normalized n{a, b, 0};
  const Integer p3 = ipow(p, 3), p4 = ipow(p, 4);
  // a = b = 0 is excluded by irreducibility; guard anyway.
  while (n.b != 0 && vp_int(n.a, p) >= 3 && vp_int(n.b, p) >= 4) {
    n.a /= p3;
    n.b /= p4;
    ++n.k;
  }
  return n;
}

namespace {

struct Row {
  std::string label;
  std::array<IntPoly, 3> numerators;
  std::array<unsigned long, 3> exponents;
  std::optional<long> dK;
  std::optional<long> vp_disc;
};

const IntPoly X = IntPoly::x();
const IntPoly X2 = IntPoly::monomial(1, 2);
const IntPoly X3 = IntPoly::monomial(1, 3);

Row power(std::string label, long dK, long vd) { return {std::move(label), {X, X2, X3}, {0, 0, 0}, dK, vd}; }

Row plain(std::string label, std::array<unsigned long, 3> r, long dK, long vd) {
  return {std::move(label), {X, X2, X3}, r, dK, vd};
}

// X^3 - aX^2 + X, the C-table numerator over 3.
IntPoly c_numerator(const Integer& a) { return IntPoly{0, 1, Integer(-a), 1}; }

Row table_a(const Integer& a, const Integer& b, Prime p, long vdisc) {
  const Valuation va = vp_int(a, p), vb = vp_int(b, p);
  if (vb == 3 && va >= 3) return plain("A1", {0, 1, 2}, 3, 9);
  if (vb >= 3 && va == 2) return plain("A2", {0, 1, 2}, 2, 8);
  if (vb >= 1 && va == 0) return power("A3", 0, 0);
  if (vb == 2 && va >= 2) return plain("A4", {0, 1, 1}, 2, 6);
  if (vb == 1 && va >= 1) return power("A5", 3, 3);
  if (vb >= 2 && va == 1) return plain("A6", {0, 0, 1}, 2, 4);
  if (vb == 0 && va >= 1) return power("A7", 0, 0);
  // v_p(a) = v_p(b) = 0
  const long m = vdisc / 2;
  if (m == 0) return {"A8", {X, X2, X3}, {0, 0, 0}, vdisc % 2, std::nullopt};
  const Integer t = solve_linear_congruence(3 * a, -4 * b, ipow(p, static_cast<unsigned long>(m + 1)));
  const IntPoly L3{Integer(-3 * t * t * t), Integer(t * t), t, 1};
  return {"A8", {X, X2, L3}, {0, 0, static_cast<unsigned long>(m)}, vdisc % 2, std::nullopt};
}

Row table_c(const Integer& a, const Integer& b, long vdisc) {
  const Valuation va = vp_int(a, 3), vb = vp_int(b, 3);
  const Integer a2 = mod_nonneg(a * a, 9);
  const Integer b9 = mod_nonneg(b, 9);
  const auto c_row = [&](std::string label, long dK, long vd) {
    return Row{std::move(label), {X, X2, c_numerator(a)}, {0, 0, 1}, dK, vd};
  };
  if (vb >= 4) {
    if (va == 2) return plain("C1", {0, 1, 2}, 5, 11);
    if (va == 1) return plain("C2", {0, 0, 1}, 5, 7);
    return a2 == 1 ? c_row("C4", 1, 3) : power("C3", 3, 3);
  }
  if (vb == 3) {
    if (va >= 2) return plain("C5", {0, 1, 2}, 3, 9);
    if (va == 1) return plain("C6", {0, 0, 1}, 5, 7);
    return a2 == 1 ? c_row("C7", 1, 3) : power("C8", 3, 3);
  }
  if (vb == 2) {
    if (va >= 2) return plain("C9", {0, 1, 1}, 2, 6);
    if (va == 1) return plain("C10", {0, 0, 1}, 4, 6);
    return a2 == 1 ? c_row("C11", 1, 3) : power("C12", 3, 3);
  }
  if (vb == 1) {
    if (va >= 1) return power("C13", 3, 3);
    if (b9 == 6) return a2 == 4 ? c_row("C15", 1, 3) : power("C14", 3, 3);
    // b = 3 mod 9
    if (a2 != 7) return power("C16", 4, 4);
    const Integer B = a * a * a * a - a * a + b;
    if (vp_int(B, 3) == 2) return c_row("C18", 3, 5);
    // C17: theta = alpha - s is the 3-adic triple root to precision 3^(v+1).
    // The table's theta^2/3 is not integral (theta is a unit at the simple
    // root); theta (theta + 4s)/3 is, and spans the same lattice locally at
    // the triple root.
    const Integer s = solve_linear_congruence(a, -4 * (b / 3), ipow(3, static_cast<unsigned long>(vdisc + 1)));
    const long m = (vdisc - 2) / 2;
    const IntPoly theta2{0, Integer(4 * s), 1};
    const IntPoly theta3{0, Integer(6 * s * s), Integer(4 * s), 1};
    return {"C17",
            {X, taylor_shift(theta2, -s), taylor_shift(theta3, -s)},
            {0, 1, static_cast<unsigned long>(m)},
            vdisc % 2,
            std::nullopt};
  }
  return power("C19", 0, 0);
}

Row b_star(const Integer& a, const Integer& b, long vdisc) {
  const IntPoly f{b, a, 0, 0, 1};
  Integer s = 1;
  constexpr int kMaxShifts = 4096;
  for (int iter = 0; iter < kMaxShifts; ++iter) {
    const IntPoly g = taylor_shift(f, s);
    const Valuation vA = vp_int(g.coeff(1), 2), vB = vp_int(g.coeff(0), 2);
    if (!is_p_regular(g, 2)) {
      if (vB.is_infinite() || vB.value() % 2 == 0)
        throw TableMismatchError("B*: P(X+" + s.get_str() + ") is not 2-regular with v2(B) even");
      s += ipow(2, static_cast<unsigned long>((vB.value() - 1) / 2));
      continue;
    }
    const PolygonIndex idx = ind_N(g, X, 2);
    const long r = idx.h.size() > 3 ? idx.h[3] : 0;
    // theta = alpha - s
    const IntPoly theta2 = IntPoly::monomial(1, 2);
    const IntPoly theta3{0, Integer(6 * s * s), Integer(4 * s), 1};
    Row row{"B*", {taylor_shift(X, -s), taylor_shift(theta2, -s), taylor_shift(theta3, -s)},
            {0, 1, static_cast<unsigned long>(r)}, std::nullopt, std::nullopt};
    if (vA == r && vB >= 2 * r - 1) {
      row.label = "B*1";
      row.dK = 3;
      row.vp_disc = 2 * r + 5;
    } else if (vB == 2 * r && vA == r + 1) {
      row.label = "B*2";
      row.dK = 5;
      row.vp_disc = 2 * r + 7;
    } else if (vB == 2 * r && vA >= r + 2) {
      row.label = "B*3";
      row.dK = 6;
      row.vp_disc = 2 * r + 8;
    }
    (void)vdisc;
    return row;
  }
  throw TableMismatchError("B*: no 2-regular shift found");
}

Row table_b(const Integer& a, const Integer& b, long vdisc) {
  const Valuation va = vp_int(a, 2), vb = vp_int(b, 2);
  if (va == 0) return power("B14", 0, 0);
  if (vb == 0) {
    const Integer b4 = mod_nonneg(b, 4), b8 = mod_nonneg(b, 8);
    if (va >= 3) {
      if (b4 == 1) return power("B15", 8, 8);
      if (b8 == 3) return {"B16", {X, IntPoly{1, 0, 1}, IntPoly{-1, 1, -1, 1}}, {0, 1, 1}, 4, 8};
      // b = 7 mod 8.  The printed (alpha^3 + 4alpha^2 + 6alpha)/4 is the B*
      // element written in alpha instead of theta = alpha - 1.
      return {"B17", {X, IntPoly{1, 0, 1}, taylor_shift(IntPoly{0, 6, 4, 1}, -1)}, {0, 1, 2}, 2, 8};
    }
    if (va == 2) {
      if (b4 == 1) return power("B18", 9, 9);
      if (b8 == 7) return {"B19", {X, IntPoly{1, 0, 1}, IntPoly{0, 1, 0, 1}}, {0, 1, 1}, 6, 10};
      return b_star(a, b, vdisc);
    }
    // v2(a) = 1
    if (b4 == 3) return power("B20", 4, 4);
    return {"B21", {X, X2, IntPoly{-1, 1, -1, 1}}, {0, 0, 1}, 2, 4};
  }
  if (vb == 1) {
    if (va >= 3) return power("B11", 11, 11);
    if (va == 2) return power("B12", 8, 8);
    return power("B13", 4, 4);
  }
  if (va == 1) return plain("B10", {0, 0, 1}, 2, 4);
  if (vb == 2) {
    if (va == 2) return plain("B9", {0, 1, 1}, 4, 8);
    if (va == 3) return {"B8", {X, X2, IntPoly{0, 2, 0, 1}}, {0, 1, 2}, 6, 12};
    // v2(a) >= 4: b = 4 or 12 mod 16
    const Integer b16 = mod_nonneg(b, 16);
    if (b16 == 12) return {"B7", {X, IntPoly{2, 0, 1}, IntPoly{0, 2, 0, 1}}, {0, 2, 2}, 6, 14};
    const Integer A = a / 16, B = (b - 4) / 16;
    const IntPoly L2{2, 2, 1};
    if (mod_nonneg(A - B, 2) == 0)
      return {"B5", {X, L2, IntPoly{0, Integer(2 + 4 * B), 2, 1}}, {0, 2, 3}, 4, 14};
    return {"B6", {X, L2, IntPoly{0, 2, 2, 1}}, {0, 2, 2}, 6, 14};
  }
  // v2(b) >= 3, v2(a) >= 2
  if (va == 2) return plain("B1", {0, 1, 2}, 2, 8);
  // v2(b) = 3 since (a, b) is normalized
  if (va >= 5) return plain("B2", {0, 1, 2}, 11, 17);
  if (va == 4) return plain("B3", {0, 1, 2}, 10, 16);
  return plain("B4", {0, 1, 2}, 6, 12);
}

TriangularPBasis basis_for(const Integer& a, const Integer& b, Prime p) {
  if (!is_probable_prime(Integer(p))) throw std::invalid_argument("p_basis: " + std::to_string(p) + " is not prime");
  if (vp_int(a, p) >= 3 && vp_int(b, p) >= 4)
    throw UnnormalizedError("p_basis: (a, b) = (" + a.get_str() + ", " + b.get_str() + ") is not normalized at p=" +
                            std::to_string(p));
  const Integer disc = trinomial_disc(a, b);
  const long vdisc = vp_int(disc, p).value();
  const Row row = p == 2 ? table_b(a, b, vdisc) : p == 3 ? table_c(a, b, vdisc) : table_a(a, b, p, vdisc);

  TriangularPBasis basis;
  basis.p = p;
  basis.ambient = IntPoly{b, a, 0, 0, 1};
  basis.numerators = row.numerators;
  basis.exponents = row.exponents;
  basis.label = row.label;
  basis.vp_disc = vdisc;
  basis.table_vp_disc = row.vp_disc;
  finalize_basis(basis, row.dK);
  return basis;
}

}  // namespace

TriangularPBasis p_basis(const TrinomialField& field, Prime p) { return basis_for(field.a(), field.b(), p); }

TriangularPBasis p_basis_scaled(const TrinomialField& field, Prime p) {
  const Normalized n = normalize(field.a(), field.b(), p);
  TriangularPBasis basis = basis_for(n.a, n.b, p);
  if (n.k == 0) return basis;
  for (std::size_t i = 0; i < 3; ++i) {
    const unsigned long deg = i + 1;
    std::vector<Integer> c(deg + 1);
    for (unsigned long j = 0; j <= deg; ++j) c[j] = basis.numerators[i].coeff(j) * ipow(p, n.k * (deg - j));
    basis.numerators[i] = IntPoly(std::move(c));
    basis.exponents[i] += n.k * deg;
  }
  basis.ambient = field.polynomial();
  basis.vp_disc = vp_int(field.disc(), p).value();
  basis.table_vp_disc.reset();
  finalize_basis(basis, basis.vp_dK);
  return basis;
}

PBasisMap p_basis_all(const TrinomialField& field, unsigned long trial_bound) {
  PBasisMap out;
  out.disc_factorization = factor_integer(field.disc(), trial_bound);
  for (const auto& [prime, e] : out.disc_factorization.factors) {
    if (e < 2) continue;
    if (!prime.fits_ulong_p()) {
      out.unsupported_primes.push_back(prime);
      continue;
    }
    const Prime p = prime.get_ui();
    out.bases.emplace(p, p_basis_scaled(field, p));
  }
  return out;
}

}  // namespace qib
