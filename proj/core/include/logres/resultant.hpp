#pragma once

// Resultants by the subresultant pseudo-remainder sequence, with a Bareiss
// fraction-free Sylvester determinant as an independent second route.

#include <cstddef>
#include <vector>

#include "logres/polynomial.hpp"
#include "logres/upoly.hpp"

namespace logres::elim {

using upoly::Integer;
using upoly::UPoly;

// Polynomial in y whose coefficients are polynomials in t: sum_j coeffs[j](t) y^j.
using BiPoly = std::vector<UPoly>;

Integer resultant(const UPoly& a, const UPoly& b);
UPoly resultant(const BiPoly& a, const BiPoly& b);

Integer resultant_bareiss(const UPoly& a, const UPoly& b);
UPoly resultant_bareiss(const BiPoly& a, const BiPoly& b);

// Splits a bivariate integer polynomial along the eliminated variable.
BiPoly to_bipoly(const poly::Polynomial& p, std::size_t eliminate);

// Res_{x_eliminate}(P, Q) as a polynomial in the other variable of a bivariate pair.
// A side of degree zero in the eliminated variable contributes its power (standard
// Sylvester convention). Throws CommonFactorError when P and Q share a nonconstant
// factor (zero resultant, or both free of the eliminated variable with a common factor).
UPoly sylvester_resultant(const poly::Polynomial& p, const poly::Polynomial& q, std::size_t eliminate);

}  // namespace logres::elim
