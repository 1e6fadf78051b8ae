#pragma once

#include <span>

#include "monodromy/matrix.hpp"

namespace monodromy {

/// Whether `p` is a convex combination of `points`, decided exactly by a
/// phase-one simplex over Q (Bland's rule). False for an empty point set.
bool in_convex_hull(std::span<const RatVector> points, const RatVector& p);

}  // namespace monodromy
