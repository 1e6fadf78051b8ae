#include "monodromy/normal_form.hpp"

#include <optional>
#include <utility>

namespace monodromy {

namespace {

Integer floor_quotient(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Smallest nonzero |entry| in the trailing submatrix starting at (t, t);
// ties go to the first entry in row-major order.
std::optional<std::pair<std::size_t, std::size_t>> smallest_entry(const IntMatrix& a,
                                                                   std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      if (!best || abs(a(i, j)) < abs(a(best->first, best->second))) best = {{i, j}};
    }
  return best;
}

}  // namespace

std::vector<Integer> SmithDecomposition::invariant_factors() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < S.rows() && i < S.cols(); ++i)
    if (S(i, i) != 0) out.push_back(S(i, i));
  return out;
}

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  IntMatrix left = IntMatrix::identity(m.rows());
  IntMatrix right = IntMatrix::identity(m.cols());
  const std::size_t diag = std::min(m.rows(), m.cols());

  for (std::size_t t = 0; t < diag; ++t) {
    bool finished = false;
    while (true) {
      auto pos = smallest_entry(a, t);
      if (!pos) {
        finished = true;
        break;
      }
      a.swap_rows(t, pos->first);
      left.swap_rows(t, pos->first);
      a.swap_cols(t, pos->second);
      right.swap_cols(t, pos->second);

      bool clean = true;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (a(i, t) == 0) continue;
        Integer q = -floor_quotient(a(i, t), a(t, t));
        a.add_row_multiple(i, t, q);
        left.add_row_multiple(i, t, q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (a(t, j) == 0) continue;
        Integer q = -floor_quotient(a(t, j), a(t, t));
        a.add_col_multiple(j, t, q);
        right.add_col_multiple(j, t, q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into the pivot row and retry.
      std::optional<std::size_t> offending;
      for (std::size_t i = t + 1; i < a.rows() && !offending; ++i)
        for (std::size_t j = t + 1; j < a.cols(); ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            offending = i;
            break;
          }
      if (!offending) break;
      a.add_row_multiple(t, *offending, 1);
      left.add_row_multiple(t, *offending, 1);
    }
    if (finished) break;
    if (a(t, t) < 0) {
      a.negate_row(t);
      left.negate_row(t);
    }
  }
  return {std::move(a), std::move(left), std::move(right)};
}

HermiteDecomposition hermite_normal_form(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    while (true) {
      std::optional<std::size_t> best;
      for (std::size_t i = r; i < h.rows(); ++i)
        if (h(i, c) != 0 && (!best || abs(h(i, c)) < abs(h(*best, c)))) best = i;
      if (!best) break;
      h.swap_rows(r, *best);
      u.swap_rows(r, *best);
      bool clean = true;
      for (std::size_t i = r + 1; i < h.rows(); ++i) {
        if (h(i, c) == 0) continue;
        Integer q = -floor_quotient(h(i, c), h(r, c));
        h.add_row_multiple(i, r, q);
        u.add_row_multiple(i, r, q);
        if (h(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      h.negate_row(r);
      u.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = -floor_quotient(h(i, c), h(r, c));
      if (q == 0) continue;
      h.add_row_multiple(i, r, q);
      u.add_row_multiple(i, r, q);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(h), std::move(u), std::move(pivots)};
}

}  // namespace monodromy
