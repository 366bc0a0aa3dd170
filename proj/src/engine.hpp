#pragma once

#include "braid.hpp"
#include "laurent.hpp"
#include "precision.hpp"

namespace cj {

/// Normalized colored Jones polynomial of the braid closure, colored by the
/// n-dimensional irreducible sl2 module; exact, in q, unknot = 1.
LaurentPolynomial colored_jones(const BraidWord& braid, int n);

/// Same state sum evaluated at q = q0 in tracked-error arithmetic.
PrecisionComplex colored_jones_numeric(const BraidWord& braid, int n,
                                       const PrecisionComplex& q0);

}  // namespace cj
