#pragma once

#include "monodromy/matrix.hpp"

namespace monodromy {

/// Linear subspace of Q^n. The basis is kept in reduced column echelon form,
/// so equal subspaces have identical representations.
class Subspace {
 public:
  /// The zero subspace of Q^0.
  Subspace() = default;

  /// Span of the columns of `generators` (which need not be independent).
  static Subspace span(const RatMatrix& generators);
  static Subspace zero(std::size_t ambient_dim);
  static Subspace whole(std::size_t ambient_dim);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.cols(); }
  bool is_zero() const noexcept { return dim() == 0; }
  bool is_whole() const noexcept { return dim() == ambient_; }

  /// ambient_dim x dim, columns independent, reduced column echelon form.
  const RatMatrix& basis() const noexcept { return basis_; }

  bool contains(const RatVector& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  std::size_t ambient_ = 0;
  RatMatrix basis_;
};

/// ker M as a subspace of Q^{cols(M)}.
Subspace rational_kernel(const RatMatrix& m);
/// Column space of M as a subspace of Q^{rows(M)}.
Subspace rational_image(const RatMatrix& m);
/// Image of a subspace under M.
Subspace image_of(const RatMatrix& m, const Subspace& s);

/// Throws DimensionMismatch when ambient dimensions differ.
Subspace subspace_sum(const Subspace& a, const Subspace& b);
bool subspace_equals(const Subspace& a, const Subspace& b);

}  // namespace monodromy
