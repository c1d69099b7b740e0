#pragma once

#include <vector>

#include "spschub/numeric.hpp"

namespace spschub::detail {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Exact inverse by Gauss-Jordan elimination; throws an internal error if
/// the matrix is singular.
RationalMatrix invert_exact(RationalMatrix m);

/// Rank over Q.
int rank_exact(RationalMatrix m);

}  // namespace spschub::detail
