#pragma once

#include "braid.hpp"
#include "laurent.hpp"

namespace cj {

/// Symmetrized Alexander polynomial of the braid closure, normalized so that
/// alexander(t)(1) = 1 and alexander is invariant under t -> 1/t.
LaurentPolynomial alexander(const BraidWord& braid);

}  // namespace cj
