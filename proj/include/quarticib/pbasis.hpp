#pragma once

#include <array>
#include <optional>
#include <string>

#include "quarticib/integrality.hpp"
#include "quarticib/intpoly.hpp"

namespace qib {

// (1, L1(alpha)/p^r1, L2(alpha)/p^r2, L3(alpha)/p^r3) with monic L_i of degree i.
struct TriangularPBasis {
  Prime p = 2;
  IntPoly ambient;
  std::array<IntPoly, 3> numerators;
  std::array<unsigned long, 3> exponents{};
  std::string label;
  long vp_disc = 0;
  long vp_index = 0;
  long vp_dK = 0;
  // The v_p(disc) column of the table row, when the row prints one.
  std::optional<long> table_vp_disc;

  QuarticElement element(std::size_t i) const {
    return QuarticElement::from_numerator(numerators.at(i), exponents.at(i), p, ambient);
  }
};

// Checks monic numerators of degree 1, 2, 3, nondecreasing exponents and
// p-integrality of every element, then fills vp_index and vp_dK from vp_disc.
// When expected_dK is given, v_p(disc) = 2 v_p(ind) + expected_dK must close.
// Any failure raises TableMismatchError.
void finalize_basis(TriangularPBasis& basis, std::optional<long> expected_dK);

}  // namespace qib
