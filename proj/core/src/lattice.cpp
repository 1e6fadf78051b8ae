#include "monodromy/lattice.hpp"

#include "monodromy/normal_form.hpp"

namespace monodromy {

std::vector<IntVector> saturated_fixed_lattice(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("saturated_fixed_lattice: non-square matrix");
  const std::size_t g = m.rows();
  auto snf = smith_normal_form(m - IntMatrix::identity(g));
  const std::size_t r = snf.rank();
  if (r == g) return {};
  // left * N * right = S, so the trailing columns of `right` span ker_Z N.
  IntMatrix rows = snf.right.block(0, r, g, g - r).transpose();
  auto hnf = hermite_normal_form(rows);
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < hnf.H.rows(); ++i)
    out.emplace_back(hnf.H.row(i).begin(), hnf.H.row(i).end());
  return out;
}

IntMatrix extend_to_unimodular_basis(const std::vector<IntVector>& vectors, std::size_t g) {
  const std::size_t k = vectors.size();
  if (k > g) throw DomainError("more vectors than the ambient rank");
  for (const auto& v : vectors)
    if (v.size() != g) throw DimensionMismatch("vector length differs from g");
  IntMatrix cols = IntMatrix::from_columns(vectors, g);
  auto hnf = hermite_normal_form(cols);
  if (hnf.pivots.size() < k) throw DomainError("vectors are linearly dependent");
  IntMatrix expected(g, k);
  for (std::size_t i = 0; i < k; ++i) expected(i, i) = 1;
  if (!(hnf.H == expected)) throw DomainError("vectors span a non-saturated sublattice");
  IntMatrix p = unimodular_inverse(hnf.transform);
  if (!(p.block(0, 0, g, k) == cols)) throw InternalError("unimodular completion lost the input vectors");
  return p;
}

IntMatrix FixedBlockForm::conjugated() const {
  const std::size_t g = genus();
  return block_matrix(IntMatrix::identity(k), U, IntMatrix(g - k, k), V);
}

bool FixedBlockForm::v_minus_id_invertible() const {
  return determinant(V - IntMatrix::identity(V.rows())) != 0;
}

FixedBlockForm conjugate_to_fixed_block_form(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("conjugate_to_fixed_block_form: non-square matrix");
  if (determinant(m) == 0) throw DomainError("matrix must be invertible over Q");
  const std::size_t g = m.rows();
  auto fixed = saturated_fixed_lattice(m);
  const std::size_t k = fixed.size();
  IntMatrix p = extend_to_unimodular_basis(fixed, g);
  IntMatrix c = unimodular_inverse(p) * m * p;
  IntMatrix lead(g, k);
  for (std::size_t i = 0; i < k; ++i) lead(i, i) = 1;
  if (!(c.block(0, 0, g, k) == lead)) throw InternalError("conjugated matrix is not in fixed-block form");
  return {std::move(p), c.block(0, k, k, g - k), c.block(k, k, g - k, g - k), k};
}

}  // namespace monodromy
