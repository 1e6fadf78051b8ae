#include "monodromy/exact_lp.hpp"

#include <optional>

namespace monodromy {

bool in_convex_hull(std::span<const RatVector> points, const RatVector& p) {
  if (points.empty()) return false;
  const std::size_t d = p.size();
  for (const auto& v : points)
    if (v.size() != d) throw DimensionMismatch("in_convex_hull: point dimensions differ");

  // Rows: sum_i lambda_i v_i = p, sum_i lambda_i = 1. Columns: lambdas, then
  // one artificial per row, then the right-hand side.
  const std::size_t m = d + 1;
  const std::size_t n = points.size();
  const std::size_t rhs = n + m;
  RatMatrix t(m + 1, n + m + 1);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t i = 0; i < n; ++i) t(r, i) = r < d ? points[i][r] : Rational(1);
    t(r, rhs) = r < d ? p[r] : Rational(1);
    if (t(r, rhs) < 0) t.negate_row(r);
    t(r, n + r) = 1;
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) basis[r] = n + r;
  // Objective row: minimize the sum of artificials.
  for (std::size_t c = 0; c <= rhs; ++c) {
    if (c >= n && c < rhs) continue;
    Rational s = 0;
    for (std::size_t r = 0; r < m; ++r) s += t(r, c);
    t(m, c) = -s;
  }

  while (true) {
    std::optional<std::size_t> enter;
    for (std::size_t c = 0; c < rhs; ++c)
      if (t(m, c) < 0) {
        enter = c;
        break;
      }
    if (!enter) break;
    std::optional<std::size_t> leave;
    Rational best;
    for (std::size_t r = 0; r < m; ++r) {
      if (t(r, *enter) <= 0) continue;
      Rational ratio = t(r, rhs) / t(r, *enter);
      if (!leave || ratio < best || (ratio == best && basis[r] < basis[*leave])) {
        leave = r;
        best = ratio;
      }
    }
    // Phase one is bounded below by zero, so some row always limits the step.
    if (!leave) break;
    const std::size_t lr = *leave;
    const Rational piv = t(lr, *enter);
    for (std::size_t c = 0; c <= rhs; ++c) t(lr, c) /= piv;
    for (std::size_t r = 0; r <= m; ++r) {
      if (r == lr || t(r, *enter) == 0) continue;
      const Rational f = t(r, *enter);
      t.add_row_multiple(r, lr, -f);
    }
    basis[lr] = *enter;
  }
  return t(m, rhs) == 0;
}

}  // namespace monodromy
