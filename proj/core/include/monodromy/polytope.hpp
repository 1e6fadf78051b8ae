#pragma once

#include <optional>
#include <vector>

#include "monodromy/matrix.hpp"

namespace monodromy {

/// Convex polytope in Q^d given by its vertices. Duplicates and points that are
/// convex combinations of the others are dropped on construction; the
/// remaining vertices are sorted lexicographically.
class Polytope {
 public:
  /// Throws DomainError for an empty point list, DimensionMismatch when a
  /// point has the wrong length.
  static Polytope from_points(std::size_t dim, std::vector<RatVector> points);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<RatVector>& vertices() const noexcept { return vertices_; }
  bool is_point() const noexcept { return vertices_.size() == 1; }

  friend bool operator==(const Polytope&, const Polytope&) = default;

 private:
  Polytope(std::size_t dim, std::vector<RatVector> vertices)
      : dim_(dim), vertices_(std::move(vertices)) {}

  std::size_t dim_;
  std::vector<RatVector> vertices_;
};

/// A rational cohomology class, evaluated on points of H_1 by the dot product.
struct Covector {
  RatVector coefficients;

  std::size_t dim() const noexcept { return coefficients.size(); }
  Rational operator()(const RatVector& p) const;
  friend bool operator==(const Covector&, const Covector&) = default;
};

Covector operator+(const Covector& a, const Covector& b);
Covector operator*(const Rational& s, const Covector& w);

/// max over vertex pairs of w(p) - w(q). Throws DimensionMismatch.
Rational thickness(const Polytope& P, const Covector& w);

/// Vertices of hull{p - q}; centrally symmetric.
Polytope difference_body(const Polytope& P);

/// Membership in the unit ball of the thickness semi-norm: T(w) <= 1.
bool unit_ball_contains(const Polytope& P, const Covector& w);

struct Extrema {
  std::vector<RatVector> argmin;
  std::vector<RatVector> argmax;
};

/// Vertices on which w attains its minimum and maximum. Throws DimensionMismatch.
Extrema unique_extrema(const Polytope& P, const Covector& w);

/// The open cone of w is labelled by the unique minimizing and maximizing vertices.
struct ConeDescriptor {
  RatVector argmin_vertex;
  RatVector argmax_vertex;
  friend bool operator==(const ConeDescriptor&, const ConeDescriptor&) = default;
};

/// nullopt when either extremum is attained on more than one vertex (w lies
/// on the boundary between cones).
std::optional<ConeDescriptor> cone_of(const Polytope& P, const Covector& w);

struct FiberEuler {
  Integer chi;
  /// P is a single point. The thickness formula then gives chi = 0, whereas
  /// the G = Z case (kernel trivial) has chi = 1; callers must treat this case
  /// separately.
  bool point_polytope = false;
};

/// chi(ker w) = -T(w) for a primitive integral w inside an open cone.
/// Throws DomainError for a non-integral or non-primitive w, a boundary class,
/// or a non-integral thickness.
FiberEuler euler_char_of_class(const Polytope& P, const Covector& w);

}  // namespace monodromy
