#include "monodromy/random.hpp"

#include <algorithm>
#include <numeric>

namespace monodromy {

IntMatrix UnimodularSampler::operator()(std::mt19937_64& rng) const {
  const std::size_t g = genus;
  IntMatrix m = IntMatrix::identity(g);
  if (g < 2) {
    if (g == 1 && std::bernoulli_distribution(0.5)(rng)) m(0, 0) = -1;
    return m;
  }
  std::uniform_int_distribution<std::size_t> index(0, g - 1);
  std::uniform_int_distribution<int> coeff(1, max_entry);
  std::bernoulli_distribution negative(0.5);
  std::bernoulli_distribution permute(permutation_share);
  const std::size_t count = factors ? factors : 2 * g;
  for (std::size_t n = 0; n < count; ++n) {
    if (permute(rng)) {
      std::vector<std::size_t> perm(g);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      IntMatrix p(g, g);
      for (std::size_t i = 0; i < g; ++i) p(perm[i], i) = 1;
      m = m * p;
    } else {
      std::size_t i = index(rng);
      std::size_t j = index(rng);
      while (j == i) j = index(rng);
      int c = coeff(rng);
      if (negative(rng)) c = -c;
      m.add_col_multiple(j, i, c);  // m * (Id + c E_ij)
    }
  }
  return m;
}

IntMatrix random_symmetric(std::mt19937_64& rng, std::size_t g, int bound) {
  std::uniform_int_distribution<int> entry(-bound, bound);
  IntMatrix b(g, g);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = i; j < g; ++j) {
      b(i, j) = entry(rng);
      b(j, i) = b(i, j);
    }
  return b;
}

IntMatrix random_integer_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int bound) {
  std::uniform_int_distribution<int> entry(-bound, bound);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = entry(rng);
  return m;
}

}  // namespace monodromy
