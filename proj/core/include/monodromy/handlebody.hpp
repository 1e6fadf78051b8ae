#pragma once

#include <compare>
#include <vector>

#include "monodromy/lattice.hpp"
#include "monodromy/matrix.hpp"

namespace monodromy {

/// Action of a handlebody mapping class on H_1(S_g; Q) = L + D in a symplectic
/// basis a_1..a_g (spanning L) and b_1..b_g (spanning D):
///
///     [[A, B], [0, (A^t)^{-1}]]
///
/// The constructor only checks shapes; `validate` checks the group conditions.
class HandlebodyMatrix {
 public:
  /// Throws DimensionMismatch unless A and B are square of the same size.
  HandlebodyMatrix(IntMatrix a, IntMatrix b);

  std::size_t genus() const noexcept { return a_.rows(); }
  const IntMatrix& A() const noexcept { return a_; }
  const IntMatrix& B() const noexcept { return b_; }

  friend bool operator==(const HandlebodyMatrix&, const HandlebodyMatrix&) = default;

 private:
  IntMatrix a_;
  IntMatrix b_;
};

/// A in GL_g(Z) and A B^t symmetric (equivalently B^t (A^t)^{-1} = A^{-1} B).
bool validate(const HandlebodyMatrix& h);

/// The 2g x 2g block matrix. Throws DomainError if !validate(h).
IntMatrix full_matrix(const HandlebodyMatrix& h);

/// J = [[0, Id], [-Id, 0]].
IntMatrix symplectic_form(std::size_t g);
/// F^t J F == J.
bool is_symplectic(const IntMatrix& f);

/// A^{-1} B, the symmetric block of the unipotent factor in
/// full(A, B) = full(A, 0) * full(Id, A^{-1} B). Requires validate(h).
IntMatrix unipotent_part(const HandlebodyMatrix& h);

/// Handlebody block for the fixed-block form f_* = [[Id_k, U], [0, V]]:
/// A = (f_*^{-1})^t, and with f_*^{-1} = [[Id, Y], [0, Z]],
/// B = [[Id_k, 0], [Y^t, 0]].
/// Needs V in GL(Z) and the leading k coordinates to span exactly ker(f_* - Id);
/// throws DomainError otherwise.
HandlebodyMatrix construct_B(const IntMatrix& U, const IntMatrix& V);
HandlebodyMatrix construct_B(const FixedBlockForm& form);

/// Disk-bounding twist generators. alpha(i) is the twist about alpha_i,
/// delta(i, j) the twist about a curve in the class a_i + a_j. Indices are 1-based.
struct TwistGenerator {
  enum class Kind { alpha, delta };
  Kind kind = Kind::alpha;
  std::size_t i = 1;
  std::size_t j = 0;  // 0 for alpha

  static TwistGenerator alpha(std::size_t i);
  /// Normalizes to i < j; throws DomainError for i == j.
  static TwistGenerator delta(std::size_t i, std::size_t j);

  auto operator<=>(const TwistGenerator&) const = default;
};

struct TwistFactor {
  TwistGenerator generator;
  Integer exponent;
  friend bool operator==(const TwistFactor&, const TwistFactor&) = default;
};

/// Product of commuting unipotent twist generators, kept in canonical order
/// (alphas ascending, then deltas lexicographically) with repeated generators
/// merged and zero exponents dropped.
class TwistWord {
 public:
  explicit TwistWord(std::size_t g) : g_(g) {}
  /// Throws DomainError for a zero exponent or an index beyond g.
  TwistWord(std::size_t g, const std::vector<TwistFactor>& factors);

  std::size_t genus() const noexcept { return g_; }
  const std::vector<TwistFactor>& factors() const noexcept { return factors_; }
  bool empty() const noexcept { return factors_.empty(); }

  friend bool operator==(const TwistWord&, const TwistWord&) = default;

 private:
  std::size_t g_;
  std::vector<TwistFactor> factors_;
};

/// Exponent of delta(i, j) is B[i][j]; exponent of alpha(i) is
/// B[i][i] - sum_{j != i} B[i][j]. Throws DomainError for non-symmetric B.
TwistWord decompose_unipotent(const IntMatrix& B);

/// (Id, sum of exponent * generator block) with alpha(i) -> E_i and
/// delta(i, j) -> E_i + E_j + E_ij + E_ji.
HandlebodyMatrix evaluate_twist_word(const TwistWord& w);

}  // namespace monodromy
