#include "quarticib/pbasis.hpp"

namespace qib {

void finalize_basis(TriangularPBasis& basis, std::optional<long> expected_dK) {
  const std::string where = basis.label + " at p=" + std::to_string(basis.p);
  long index = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    const IntPoly& L = basis.numerators[i];
    if (L.degree() != static_cast<int>(i) + 1 || !L.is_monic())
      throw TableMismatchError(where + ": numerator " + std::to_string(i + 1) + " is not monic of degree " +
                               std::to_string(i + 1));
    if (i > 0 && basis.exponents[i] < basis.exponents[i - 1])
      throw TableMismatchError(where + ": denominator exponents are not nondecreasing");
    if (!is_p_integral(basis.element(i)))
      throw TableMismatchError(where + ": (" + L.to_string("alpha") + ")/" + std::to_string(basis.p) + "^" +
                               std::to_string(basis.exponents[i]) + " is not integral");
    index += static_cast<long>(basis.exponents[i]);
  }
  basis.vp_index = index;
  basis.vp_dK = basis.vp_disc - 2 * index;
  if (basis.vp_dK < 0) throw TableMismatchError(where + ": index exceeds half the discriminant valuation");
  if (expected_dK && *expected_dK != basis.vp_dK)
    throw TableMismatchError(where + ": v_p(disc)=" + std::to_string(basis.vp_disc) + " but 2 v_p(ind) + v_p(d_K) = " +
                             std::to_string(2 * index + *expected_dK));
}

}  // namespace qib
