#include "monodromy/subspace.hpp"

namespace monodromy {

Subspace Subspace::span(const RatMatrix& generators) {
  Subspace s;
  s.ambient_ = generators.rows();
  // Row-reducing the transpose gives the reduced column echelon form of the span.
  auto e = rref(generators.transpose());
  s.basis_ = e.reduced.block(0, 0, e.pivots.size(), e.reduced.cols()).transpose();
  if (s.basis_.rows() != s.ambient_) s.basis_ = RatMatrix(s.ambient_, 0);
  return s;
}

Subspace Subspace::zero(std::size_t ambient_dim) { return span(RatMatrix(ambient_dim, 0)); }

Subspace Subspace::whole(std::size_t ambient_dim) {
  return span(RatMatrix::identity(ambient_dim));
}

bool Subspace::contains(const RatVector& v) const {
  if (v.size() != ambient_) throw DimensionMismatch("vector length differs from ambient dimension");
  RatMatrix col(ambient_, 1);
  for (std::size_t i = 0; i < ambient_; ++i) col(i, 0) = v[i];
  return rank(hstack(basis_, col)) == dim();
}

Subspace rational_kernel(const RatMatrix& m) {
  const std::size_t n = m.cols();
  auto e = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    RatVector v(n, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return Subspace::span(RatMatrix::from_columns(basis, n));
}

Subspace rational_image(const RatMatrix& m) { return Subspace::span(m); }

Subspace image_of(const RatMatrix& m, const Subspace& s) {
  if (m.cols() != s.ambient_dim()) throw DimensionMismatch("image_of: matrix/subspace mismatch");
  return Subspace::span(m * s.basis());
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw DimensionMismatch("subspace_sum: ambient dimensions differ");
  return Subspace::span(hstack(a.basis(), b.basis()));
}

bool subspace_equals(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw DimensionMismatch("subspace_equals: ambient dimensions differ");
  return a == b;
}

}  // namespace monodromy
