#include "monodromy/polytope.hpp"

#include <algorithm>

#include "monodromy/exact_lp.hpp"

namespace monodromy {

namespace {

void check_dim(const Polytope& P, const Covector& w) {
  if (P.dim() != w.dim()) throw DimensionMismatch("covector and polytope dimensions differ");
}

}  // namespace

Polytope Polytope::from_points(std::size_t dim, std::vector<RatVector> points) {
  if (points.empty()) throw DomainError("a polytope needs at least one point");
  for (const auto& p : points)
    if (p.size() != dim) throw DimensionMismatch("point dimension differs from polytope dimension");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  // Dropping a non-extreme point does not change the hull, so one pass suffices.
  std::vector<RatVector> kept = points;
  for (std::size_t i = 0; i < kept.size();) {
    std::vector<RatVector> others;
    others.reserve(kept.size() - 1);
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != i) others.push_back(kept[j]);
    if (in_convex_hull(others, kept[i]))
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
    else
      ++i;
  }
  return Polytope(dim, std::move(kept));
}

Rational Covector::operator()(const RatVector& p) const {
  if (p.size() != coefficients.size()) throw DimensionMismatch("covector and point dimensions differ");
  Rational s = 0;
  for (std::size_t i = 0; i < p.size(); ++i) s += coefficients[i] * p[i];
  return s;
}

Covector operator+(const Covector& a, const Covector& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("covector dimensions differ");
  Covector c = a;
  for (std::size_t i = 0; i < c.coefficients.size(); ++i) c.coefficients[i] += b.coefficients[i];
  return c;
}

Covector operator*(const Rational& s, const Covector& w) {
  Covector c = w;
  for (auto& x : c.coefficients) x *= s;
  return c;
}

Rational thickness(const Polytope& P, const Covector& w) {
  check_dim(P, w);
  const auto& vs = P.vertices();
  Rational lo = w(vs.front());
  Rational hi = lo;
  for (const auto& v : vs) {
    Rational x = w(v);
    if (x < lo) lo = x;
    if (x > hi) hi = x;
  }
  return hi - lo;
}

Polytope difference_body(const Polytope& P) {
  std::vector<RatVector> diffs;
  const auto& vs = P.vertices();
  diffs.reserve(vs.size() * vs.size());
  for (const auto& p : vs)
    for (const auto& q : vs) {
      RatVector d(P.dim());
      for (std::size_t i = 0; i < d.size(); ++i) d[i] = p[i] - q[i];
      diffs.push_back(std::move(d));
    }
  return Polytope::from_points(P.dim(), std::move(diffs));
}

bool unit_ball_contains(const Polytope& P, const Covector& w) { return thickness(P, w) <= 1; }

Extrema unique_extrema(const Polytope& P, const Covector& w) {
  check_dim(P, w);
  const auto& vs = P.vertices();
  Rational lo = w(vs.front());
  Rational hi = lo;
  for (const auto& v : vs) {
    Rational x = w(v);
    if (x < lo) lo = x;
    if (x > hi) hi = x;
  }
  Extrema e;
  for (const auto& v : vs) {
    Rational x = w(v);
    if (x == lo) e.argmin.push_back(v);
    if (x == hi) e.argmax.push_back(v);
  }
  return e;
}

std::optional<ConeDescriptor> cone_of(const Polytope& P, const Covector& w) {
  auto e = unique_extrema(P, w);
  if (e.argmin.size() != 1 || e.argmax.size() != 1) return std::nullopt;
  return ConeDescriptor{e.argmin.front(), e.argmax.front()};
}

FiberEuler euler_char_of_class(const Polytope& P, const Covector& w) {
  check_dim(P, w);
  Integer content = 0;
  for (const auto& c : w.coefficients) {
    if (c.get_den() != 1) throw DomainError("class must be integral");
    content = gcd(content, c.get_num());
  }
  if (content != 1) throw DomainError("class must be primitive (coordinate gcd 1)");
  if (!cone_of(P, w)) throw DomainError("class lies on a cone boundary, not in an open fibered cone");
  Rational t = thickness(P, w);
  if (t.get_den() != 1) throw DomainError("thickness is not an integer; polytope data is inconsistent");
  return {-t.get_num(), P.is_point()};
}

}  // namespace monodromy
