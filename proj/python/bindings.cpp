#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "quarticib/globalize.hpp"
#include "quarticib/newton.hpp"
#include "quarticib/oracle.hpp"
#include "quarticib/polyring.hpp"
#include "quarticib/quartic_general.hpp"
#include "quarticib/trinomial.hpp"

namespace py = pybind11;
using namespace qib;

namespace {

// Python ints are unbounded; go through decimal strings both ways.
Integer to_integer(const py::int_& x) { return integer_from_string(py::str(x).cast<std::string>()); }

py::int_ to_py(const Integer& x) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(x.get_str().c_str(), nullptr, 10));
}

py::list coeffs_to_py(const IntPoly& f) {
  py::list out;
  for (const auto& c : f.coeffs()) out.append(to_py(c));
  return out;
}

IntPoly poly_from_py(const std::vector<py::int_>& coeffs) {
  std::vector<Integer> c;
  for (const auto& x : coeffs) c.push_back(to_integer(x));
  return IntPoly(std::move(c));
}

py::dict pbasis_to_py(const TriangularPBasis& b) {
  py::dict d;
  d["p"] = b.p;
  d["case"] = b.label;
  d["vp_disc"] = b.vp_disc;
  d["vp_index"] = b.vp_index;
  d["vp_dK"] = b.vp_dK;
  py::list nums;
  for (const auto& n : b.numerators) nums.append(coeffs_to_py(n));
  d["numerators"] = nums;
  d["exponents"] = py::make_tuple(b.exponents[0], b.exponents[1], b.exponents[2]);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Integral bases of quartic fields X^4 + aX + b";

  auto base = py::register_exception<Error>(m, "QuarticError");
  py::register_exception<ReducibleError>(m, "ReducibleError", base.ptr());
  py::register_exception<UnnormalizedError>(m, "UnnormalizedError", base.ptr());
  py::register_exception<TableMismatchError>(m, "TableMismatchError", base.ptr());
  py::register_exception<NotRegularError>(m, "NotRegularError", base.ptr());
  py::register_exception<HypothesisError>(m, "HypothesisError", base.ptr());
  py::register_exception<FactorizationIncompleteError>(m, "FactorizationIncompleteError", base.ptr());

  m.def("disc", [](const py::int_& a, const py::int_& b) { return to_py(trinomial_disc(to_integer(a), to_integer(b))); },
        py::arg("a"), py::arg("b"), "256 b^3 - 27 a^4");

  m.def("discriminant", [](const std::vector<py::int_>& coeffs) { return to_py(discriminant(poly_from_py(coeffs))); },
        py::arg("coeffs"), "Discriminant of a polynomial given by ascending coefficients");

  m.def(
      "p_basis",
      [](const py::int_& a, const py::int_& b, Prime p) {
        const TrinomialField field(to_integer(a), to_integer(b));
        return pbasis_to_py(p_basis_scaled(field, p));
      },
      py::arg("a"), py::arg("b"), py::arg("p"),
      "Triangular p-integral basis from the tables: dict with case, numerators, exponents, valuations");

  m.def(
      "p_basis_regular",
      [](const std::vector<py::int_>& coeffs, Prime p) {
        return pbasis_to_py(p_basis_regular(QuarticField(poly_from_py(coeffs)), p));
      },
      py::arg("coeffs"), py::arg("p"), "Triangular p-integral basis of a p-regular monic quartic");

  m.def(
      "integral_basis",
      [](const py::int_& a, const py::int_& b, unsigned long max_trial_division) {
        const auto g = integral_basis(TrinomialField(to_integer(a), to_integer(b)), max_trial_division);
        py::dict d;
        py::list nums, divs;
        for (std::size_t i = 0; i < 3; ++i) {
          nums.append(coeffs_to_py(g.numerators[i]));
          divs.append(to_py(g.divisors[i]));
        }
        d["numerators"] = nums;
        d["divisors"] = divs;
        d["index"] = to_py(g.index);
        d["disc"] = to_py(g.disc);
        d["dK"] = to_py(g.dK);
        d["conditional"] = g.conditional;
        if (g.conditional) d["unfactored"] = to_py(g.unfactored);
        return d;
      },
      py::arg("a"), py::arg("b"), py::arg("max_trial_division") = 1000000UL,
      "Global triangular integral basis (1, L1/d1, L2/d2, L3/d3)");

  m.def(
      "oracle_vp_index",
      [](const std::vector<py::int_>& coeffs, Prime p) { return oracle::p_maximal_order(poly_from_py(coeffs), p).vp_index; },
      py::arg("coeffs"), py::arg("p"), "v_p of the index of Z[alpha] in the p-maximal order (Round 2)");

  m.def(
      "newton_polygon",
      [](const std::vector<py::int_>& coeffs, std::vector<py::int_> phi, Prime p) {
        const IntPoly phi_poly = phi.empty() ? IntPoly::x() : poly_from_py(phi);
        const NewtonPolygon n = phi_polygon(poly_from_py(coeffs), phi_poly, p);
        py::list sides;
        for (const auto& s : n.sides())
          sides.append(py::make_tuple(py::make_tuple(s.start().abscissa, s.start().ordinate),
                                      py::make_tuple(s.end().abscissa, s.end().ordinate), s.slope_numerator(),
                                      s.slope_denominator(), s.degree()));
        return sides;
      },
      py::arg("coeffs"), py::arg("phi") = std::vector<py::int_>{}, py::arg("p"),
      "Sides ((x0, y0), (x1, y1), slope_num, slope_den, degree) of the phi-polygon; phi defaults to X");

  m.def(
      "is_p_regular", [](const std::vector<py::int_>& coeffs, Prime p) { return is_p_regular(poly_from_py(coeffs), p); },
      py::arg("coeffs"), py::arg("p"));

  m.def(
      "index_bound",
      [](const std::vector<py::int_>& coeffs, Prime p) { return p_regularity(poly_from_py(coeffs), p).index_bound(); },
      py::arg("coeffs"), py::arg("p"), "sum of deg(phi_i) ind_N over the factors of P mod p");

  m.def(
      "is_element_integral",
      [](const std::vector<py::int_>& numerator, unsigned long exponent, Prime p, const std::vector<py::int_>& ambient) {
        return is_p_integral(QuarticElement::from_numerator(poly_from_py(numerator), exponent, p, poly_from_py(ambient)));
      },
      py::arg("numerator"), py::arg("exponent"), py::arg("p"), py::arg("ambient"),
      "Whether numerator(alpha)/p^exponent is p-integral");
}
