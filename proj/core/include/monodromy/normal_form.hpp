#pragma once

#include <vector>

#include "monodromy/matrix.hpp"

namespace monodromy {

/// left * M * right == S with left, right unimodular, S diagonal with
/// non-negative entries, each dividing the next.
struct SmithDecomposition {
  IntMatrix S;
  IntMatrix left;
  IntMatrix right;

  /// Nonzero diagonal entries of S, in order.
  std::vector<Integer> invariant_factors() const;
  std::size_t rank() const { return invariant_factors().size(); }
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

/// Row-style Hermite normal form: transform * M == H, transform unimodular,
/// H in row echelon form with positive pivots and the entries above each
/// pivot reduced into [0, pivot).
struct HermiteDecomposition {
  IntMatrix H;
  IntMatrix transform;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row of H
};

HermiteDecomposition hermite_normal_form(const IntMatrix& m);

}  // namespace monodromy
