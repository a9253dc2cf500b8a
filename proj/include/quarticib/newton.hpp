#pragma once

#include <string>
#include <vector>

#include "quarticib/polyring.hpp"

namespace qib {

struct ValuationPoint {
  long abscissa;
  long ordinate;
  friend bool operator==(const ValuationPoint&, const ValuationPoint&) = default;
};

class Side {
 public:
  Side(ValuationPoint start, ValuationPoint end);

  const ValuationPoint& start() const { return start_; }
  const ValuationPoint& end() const { return end_; }
  long length() const { return end_.abscissa - start_.abscissa; }
  long height() const { return end_.ordinate - start_.ordinate; }
  // gcd(height, length); for a horizontal side this is the length.
  long degree() const { return degree_; }
  // slope = slope_numerator / slope_denominator in lowest terms, denominator > 0.
  long slope_numerator() const { return height() / degree_; }
  long slope_denominator() const { return length() / degree_; }
  Rational slope() const {
    Rational r{Integer(height()), Integer(length())};
    r.canonicalize();
    return r;
  }

  friend bool operator==(const Side&, const Side&) = default;

 private:
  ValuationPoint start_;
  ValuationPoint end_;
  long degree_;
};

// Lower convex envelope of a finite point set, split into maximal sides of
// strictly increasing slope.
class NewtonPolygon {
 public:
  NewtonPolygon() = default;
  NewtonPolygon(std::vector<ValuationPoint> points, std::vector<Side> sides)
      : points_(std::move(points)), sides_(std::move(sides)) {}

  const std::vector<ValuationPoint>& points() const { return points_; }
  const std::vector<Side>& sides() const { return sides_; }
  bool empty() const { return sides_.empty(); }
  long length() const;
  long height() const;
  long start_abscissa() const;
  long end_abscissa() const;

 private:
  std::vector<ValuationPoint> points_;
  std::vector<Side> sides_;
};

NewtonPolygon build_polygon(std::vector<ValuationPoint> points);

// Sub-polygon of the sides with positive slope.
NewtonPolygon principal_part(const NewtonPolygon& n);

// Exact ordinate of the polygon above abscissa j.
Rational polygon_ordinate(const NewtonPolygon& n, long j);

// Points (i, v_p(a_i)) of the phi-adic development, infinite ones omitted.
std::vector<ValuationPoint> phi_points(const PhiExpansion& e, Prime p);
NewtonPolygon phi_polygon(const IntPoly& f, const IntPoly& phi, Prime p);

// The finite field F_p[X]/(phi-bar).
class ResidueField {
 public:
  explicit ResidueField(ModPoly modulus);

  const ModPoly& modulus() const { return modulus_; }
  Prime characteristic() const { return modulus_.modulus(); }
  ModPoly zero() const { return ModPoly(characteristic()); }
  ModPoly one() const { return ModPoly::monomial(1, 0, characteristic()); }
  ModPoly mul(const ModPoly& a, const ModPoly& b) const { return (a * b) % modulus_; }
  ModPoly inv(const ModPoly& a) const;

 private:
  ModPoly modulus_;
};

// Polynomial in Y over a residue field, ascending powers of Y.
using ResidueFieldPoly = std::vector<ModPoly>;

ResidueFieldPoly gcd(const ResidueField& f, ResidueFieldPoly a, ResidueFieldPoly b);
bool is_squarefree(const ResidueField& f, const ResidueFieldPoly& r);

struct ResidualPoly {
  Side side;
  ResidueField field;
  ResidueFieldPoly coeffs;  // ascending powers of Y; coeffs.back() is the left-endpoint residue

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool squarefree() const { return is_squarefree(field, coeffs); }
  std::string to_string() const;
};

ResidualPoly residual_poly(const IntPoly& f, const IntPoly& phi, Prime p, const Side& side);

struct PolygonIndex {
  NewtonPolygon polygon;    // full phi-polygon
  NewtonPolygon principal;  // its positive-slope part
  std::vector<long> h;      // h[j] = floor(N+(j)) for 1 <= j < end abscissa; h[0] = 0
  long index = 0;           // sum of h
};

// Lattice points (j, y), 1 <= y <= N+(j), 1 <= j < end abscissa of the polygon.
PolygonIndex ind_N(const IntPoly& f, const IntPoly& phi, Prime p);

struct RegularityEntry {
  IntPoly phi;  // canonical monic lift of the factor
  int multiplicity;
  PolygonIndex index;
  std::vector<ResidualPoly> residuals;  // one per principal side
  bool regular;
};

struct RegularityCertificate {
  bool regular = true;
  std::vector<RegularityEntry> entries;
  // sum over factors of deg(phi_i) * ind_{N_i}(P): the index lower bound.
  long index_bound() const;
};

RegularityCertificate p_regularity(const IntPoly& f, Prime p);
inline bool is_p_regular(const IntPoly& f, Prime p) { return p_regularity(f, p).regular; }

// One "side: (x0,y0)->(x1,y1) slope=h/e degree=d" line per side.
std::string render_polygon(const NewtonPolygon& n);

}  // namespace qib
