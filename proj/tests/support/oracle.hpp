#pragma once

// Independent reference arithmetic for tests. Deliberately built on
// boost::multiprecision rather than GMP and on plain textbook elimination, so
// it shares no code path with the library under test.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <string>
#include <vector>

#include "monodromy/matrix.hpp"

namespace oracle {

using Z = boost::multiprecision::cpp_int;
using Q = boost::multiprecision::cpp_rational;
using QMat = std::vector<std::vector<Q>>;

inline Q to_q(const monodromy::Integer& x) { return Q(Z(x.get_str())); }
inline Q to_q(const monodromy::Rational& x) {
  return Q(Z(x.get_num().get_str()), Z(x.get_den().get_str()));
}

template <class T>
QMat from(const monodromy::Matrix<T>& m) {
  QMat out(m.rows(), std::vector<Q>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = to_q(m(i, j));
  return out;
}

inline std::size_t cols_of(const QMat& a) { return a.empty() ? 0 : a[0].size(); }

inline std::size_t rank(QMat a) {
  std::size_t r = 0;
  const std::size_t n = cols_of(a);
  for (std::size_t c = 0; c < n && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      if (a[i][c] == 0) continue;
      Q f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

inline Q det(QMat a) {
  const std::size_t n = a.size();
  Q d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      d = -d;
    }
    d *= a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      Q f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return d;
}

inline QMat mul(const QMat& a, const QMat& b) {
  const std::size_t n = cols_of(b);
  QMat c(a.size(), std::vector<Q>(n));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline QMat sub_identity(QMat a) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i][i] -= 1;
  return a;
}

inline QMat hcat(const QMat& a, const QMat& b) {
  QMat out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i].insert(out[i].end(), b[i].begin(), b[i].end());
  return out;
}

inline QMat identity(std::size_t n) {
  QMat a(n, std::vector<Q>(n));
  for (std::size_t i = 0; i < n; ++i) a[i][i] = 1;
  return a;
}

inline QMat transpose(const QMat& a) {
  QMat t(cols_of(a), std::vector<Q>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < cols_of(a); ++j) t[j][i] = a[i][j];
  return t;
}

/// Gauss-Jordan on [a | Id]; empty result when singular.
inline QMat inverse(const QMat& a) {
  const std::size_t n = a.size();
  QMat m = hcat(a, identity(n));
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return {};
    std::swap(m[p], m[c]);
    Q inv = 1 / m[c][c];
    for (auto& x : m[c]) x *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      Q f = m[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  QMat out(n, std::vector<Q>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = m[i][n + j];
  return out;
}

/// Null space basis as the columns of an n x (n - rank) matrix, one free
/// variable at a time.
inline QMat kernel_basis(QMat a, std::size_t n) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    Q inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      Q f = a[i][c];
      for (std::size_t j = 0; j < n; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  QMat basis(n, std::vector<Q>());
  for (std::size_t free = 0; free < n; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    std::vector<Q> v(n);
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -a[k][free];
    for (std::size_t i = 0; i < n; ++i) basis[i].push_back(v[i]);
  }
  return basis;
}

/// Every column of `b` lies in the column span of `a` (both with the same row count).
inline bool column_span_contains(const QMat& a, const QMat& b) {
  if (cols_of(b) == 0) return true;
  if (cols_of(a) == 0) return rank(b) == 0;
  return rank(hcat(a, b)) == rank(a);
}

/// max over all pairs of points of |w(p) - w(q)|; no pruning, no min/max shortcut.
inline Q brute_thickness(const std::vector<monodromy::RatVector>& points,
                         const monodromy::RatVector& w) {
  Q best = 0;
  for (const auto& p : points)
    for (const auto& q : points) {
      Q s = 0;
      for (std::size_t i = 0; i < w.size(); ++i) s += to_q(w[i]) * (to_q(p[i]) - to_q(q[i]));
      if (s < 0) s = -s;
      best = std::max(best, s);
    }
  return best;
}

inline Z gcd_of_entries(const QMat& a) {
  Z g = 0;
  for (const auto& row : a)
    for (const auto& x : row) g = boost::multiprecision::gcd(g, boost::multiprecision::numerator(x));
  return boost::multiprecision::abs(g);
}

}  // namespace oracle
