#include "quarticib/newton.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qib {

Side::Side(ValuationPoint start, ValuationPoint end) : start_(start), end_(end) {
  if (end.abscissa <= start.abscissa) throw std::invalid_argument("Side: end must lie right of start");
  degree_ = std::gcd(std::abs(end.ordinate - start.ordinate), end.abscissa - start.abscissa);
}

long NewtonPolygon::length() const { return empty() ? 0 : end_abscissa() - start_abscissa(); }

long NewtonPolygon::height() const {
  return empty() ? 0 : sides_.back().end().ordinate - sides_.front().start().ordinate;
}

long NewtonPolygon::start_abscissa() const {
  if (empty()) throw std::logic_error("empty polygon has no start");
  return sides_.front().start().abscissa;
}

long NewtonPolygon::end_abscissa() const {
  if (empty()) throw std::logic_error("empty polygon has no end");
  return sides_.back().end().abscissa;
}

NewtonPolygon build_polygon(std::vector<ValuationPoint> points) {
  if (points.empty()) throw std::invalid_argument("build_polygon: no points");
  std::sort(points.begin(), points.end(),
            [](const ValuationPoint& l, const ValuationPoint& r) { return l.abscissa < r.abscissa; });
  for (std::size_t i = 1; i < points.size(); ++i)
    if (points[i].abscissa == points[i - 1].abscissa) throw std::invalid_argument("build_polygon: repeated abscissa");

  // Lower hull; collinear middle points are dropped so every side is maximal.
  std::vector<ValuationPoint> hull;
  for (const auto& pt : points) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull.back();
      const long cross = (b.abscissa - a.abscissa) * (pt.ordinate - a.ordinate) -
                         (b.ordinate - a.ordinate) * (pt.abscissa - a.abscissa);
      if (cross > 0) break;
      hull.pop_back();
    }
    hull.push_back(pt);
  }
  std::vector<Side> sides;
  for (std::size_t i = 1; i < hull.size(); ++i) sides.emplace_back(hull[i - 1], hull[i]);
  return NewtonPolygon(std::move(points), std::move(sides));
}

NewtonPolygon principal_part(const NewtonPolygon& n) {
  std::vector<Side> sides;
  for (const auto& s : n.sides())
    if (s.height() > 0) sides.push_back(s);
  std::vector<ValuationPoint> points;
  if (!sides.empty()) {
    const long lo = sides.front().start().abscissa;
    for (const auto& pt : n.points())
      if (pt.abscissa >= lo) points.push_back(pt);
  }
  return NewtonPolygon(std::move(points), std::move(sides));
}

Rational polygon_ordinate(const NewtonPolygon& n, long j) {
  if (n.empty() || j < n.start_abscissa() || j > n.end_abscissa())
    throw std::out_of_range("polygon_ordinate: abscissa outside the polygon");
  for (const auto& s : n.sides()) {
    if (j <= s.end().abscissa) {
      Rational y = Rational(s.start().ordinate) + s.slope() * Rational(j - s.start().abscissa);
      y.canonicalize();
      return y;
    }
  }
  throw std::logic_error("polygon_ordinate: unreachable");
}

std::vector<ValuationPoint> phi_points(const PhiExpansion& e, Prime p) {
  std::vector<ValuationPoint> pts;
  for (std::size_t i = 0; i < e.terms().size(); ++i) {
    const Valuation v = vp_poly(e.term(i), p);
    if (v.is_finite()) pts.push_back({static_cast<long>(i), v.value()});
  }
  return pts;
}

NewtonPolygon phi_polygon(const IntPoly& f, const IntPoly& phi, Prime p) {
  return build_polygon(phi_points(phi_expand(f, phi), p));
}

ResidueField::ResidueField(ModPoly modulus) : modulus_(modulus.monic()) {
  if (modulus_.degree() < 1) throw std::invalid_argument("ResidueField: modulus must have degree >= 1");
}

ModPoly ResidueField::inv(const ModPoly& a) const {
  // Extended Euclid: track s with s * a = r (mod modulus).
  ModPoly r0 = modulus_, r1 = a % modulus_;
  ModPoly s0 = zero(), s1 = one();
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    ModPoly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) throw std::domain_error("ResidueField: element not invertible");
  return (s0.scaled(inv_mod(r0.leading(), characteristic()))) % modulus_;
}

namespace {

void trim(ResidueFieldPoly& r) {
  while (!r.empty() && r.back().is_zero()) r.pop_back();
}

ResidueFieldPoly remainder(const ResidueField& f, ResidueFieldPoly a, const ResidueFieldPoly& b) {
  trim(a);
  const ModPoly lead_inv = f.inv(b.back());
  while (a.size() >= b.size()) {
    const ModPoly c = f.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = (a[shift + j] - f.mul(c, b[j])) % f.modulus();
    trim(a);
  }
  return a;
}

}  // namespace

ResidueFieldPoly gcd(const ResidueField& f, ResidueFieldPoly a, ResidueFieldPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    ResidueFieldPoly r = remainder(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool is_squarefree(const ResidueField& f, const ResidueFieldPoly& r) {
  ResidueFieldPoly d;
  for (std::size_t k = 1; k < r.size(); ++k) d.push_back(r[k].scaled(k % f.characteristic()));
  const ResidueFieldPoly g = gcd(f, r, d);
  return g.size() <= 1;
}

std::string ResidualPoly::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    if (coeffs[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << coeffs[k].to_string() << ")";
    if (k >= 1) os << "*Y";
    if (k >= 2) os << "^" << k;
  }
  return first ? "0" : os.str();
}

ResidualPoly residual_poly(const IntPoly& f, const IntPoly& phi, Prime p, const Side& side) {
  const PhiExpansion e = phi_expand(f, phi);
  const NewtonPolygon principal = principal_part(build_polygon(phi_points(e, p)));
  if (std::find(principal.sides().begin(), principal.sides().end(), side) == principal.sides().end())
    throw std::invalid_argument("residual_poly: side is not on the principal polygon");
  ResidueField field(ModPoly::reduce(phi, p));
  const long d = side.degree();
  const long run = side.slope_denominator();
  const long rise = side.slope_numerator();
  ResidueFieldPoly coeffs(static_cast<std::size_t>(d + 1), field.zero());
  for (long k = 0; k <= d; ++k) {
    const long abscissa = side.start().abscissa + k * run;
    const long ordinate = side.start().ordinate + k * rise;
    const IntPoly& a = e.term(static_cast<std::size_t>(abscissa));
    if (vp_poly(a, p) == ordinate) {
      const IntPoly unit = divide_exact(a, ipow(p, static_cast<unsigned long>(ordinate)));
      coeffs[static_cast<std::size_t>(d - k)] = ModPoly::reduce(unit, p) % field.modulus();
    }
  }
  return ResidualPoly{side, std::move(field), std::move(coeffs)};
}

PolygonIndex ind_N(const IntPoly& f, const IntPoly& phi, Prime p) {
  PolygonIndex out;
  out.polygon = phi_polygon(f, phi, p);
  out.principal = principal_part(out.polygon);
  const long end = out.polygon.empty() ? 0 : out.polygon.end_abscissa();
  out.h.assign(static_cast<std::size_t>(std::max(end, 1L)), 0);
  if (out.principal.empty()) return out;
  for (long j = 1; j < end; ++j) {
    if (j < out.principal.start_abscissa()) continue;
    const Rational y = polygon_ordinate(out.principal, j);
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), y.get_num_mpz_t(), y.get_den_mpz_t());
    const long h = std::max(0L, fl.get_si());
    out.h[static_cast<std::size_t>(j)] = h;
    out.index += h;
  }
  return out;
}

long RegularityCertificate::index_bound() const {
  long total = 0;
  for (const auto& e : entries) total += e.phi.degree() * e.index.index;
  return total;
}

RegularityCertificate p_regularity(const IntPoly& f, Prime p) {
  if (!f.is_monic()) throw std::invalid_argument("p_regularity: polynomial must be monic");
  RegularityCertificate cert;
  for (const auto& [phibar, mult] : factor_mod_p(f, p)) {
    RegularityEntry entry{phibar.lift(), mult, {}, {}, true};
    entry.index = ind_N(f, entry.phi, p);
    for (const auto& side : entry.index.principal.sides()) {
      entry.residuals.push_back(residual_poly(f, entry.phi, p, side));
      if (!entry.residuals.back().squarefree()) entry.regular = false;
    }
    cert.regular = cert.regular && entry.regular;
    cert.entries.push_back(std::move(entry));
  }
  return cert;
}

std::string render_polygon(const NewtonPolygon& n) {
  std::ostringstream os;
  for (const auto& s : n.sides()) {
    os << "side: (" << s.start().abscissa << "," << s.start().ordinate << ")->(" << s.end().abscissa << ","
       << s.end().ordinate << ") slope=" << s.slope_numerator() << "/" << s.slope_denominator()
       << " degree=" << s.degree() << "\n";
  }
  return os.str();
}

}  // namespace qib
