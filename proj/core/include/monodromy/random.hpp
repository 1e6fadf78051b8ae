#pragma once

#include <random>

#include "monodromy/matrix.hpp"

namespace monodromy {

/// Generators for property tests and batch runs. Deterministic for a given
/// engine state with a given standard library.
struct UnimodularSampler {
  std::size_t genus = 3;
  int max_entry = 3;          // elementary factors use c in [-max_entry, max_entry] \ {0}
  std::size_t factors = 0;    // 0 means 2 * genus
  double permutation_share = 0.25;

  IntMatrix operator()(std::mt19937_64& rng) const;
};

/// Symmetric g x g matrix with entries uniform in [-bound, bound].
IntMatrix random_symmetric(std::mt19937_64& rng, std::size_t g, int bound);

/// g x g matrix with entries uniform in [-bound, bound].
IntMatrix random_integer_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int bound);

}  // namespace monodromy
