#pragma once

#include <vector>

#include "monodromy/matrix.hpp"

namespace monodromy {

/// Basis of the saturated lattice ker_Z(M - Id) in Z^g, as the rows of its
/// Hermite normal form (positive leading entries). Empty when M has no
/// nonzero fixed vector. Throws DimensionMismatch for non-square M.
std::vector<IntVector> saturated_fixed_lattice(const IntMatrix& m);

/// P in GL_g(Z) whose first k columns are `vectors`. The completion comes from
/// the row Hermite reduction U * [vectors] = [Id; 0], P = U^{-1}.
/// Throws DomainError if the vectors are dependent or span a non-saturated lattice.
IntMatrix extend_to_unimodular_basis(const std::vector<IntVector>& vectors, std::size_t g);

/// P^{-1} M P = [[Id_k, U], [0, V]] where the first k coordinates span
/// exactly ker(M - Id).
struct FixedBlockForm {
  IntMatrix P;
  IntMatrix U;  // k x (g - k)
  IntMatrix V;  // (g - k) x (g - k)
  std::size_t k = 0;

  std::size_t genus() const { return P.rows(); }
  IntMatrix conjugated() const;
  /// det(V - Id) != 0. Fails exactly when the eigenvalue 1 of M carries a
  /// nontrivial Jordan block (V is then forced to have eigenvalue 1 too).
  bool v_minus_id_invertible() const;
};

/// P is always in GL_g(Z); M only needs det M != 0 (the unimodularity gate
/// belongs to certify). Throws DimensionMismatch for non-square M and
/// DomainError for singular M.
FixedBlockForm conjugate_to_fixed_block_form(const IntMatrix& m);

}  // namespace monodromy
