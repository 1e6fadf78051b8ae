#include "monodromy/handlebody.hpp"

#include <algorithm>
#include <map>

namespace monodromy {

HandlebodyMatrix::HandlebodyMatrix(IntMatrix a, IntMatrix b) : a_(std::move(a)), b_(std::move(b)) {
  if (!a_.is_square() || !b_.is_square() || a_.rows() != b_.rows())
    throw DimensionMismatch("handlebody blocks A and B must be square of equal size");
}

bool validate(const HandlebodyMatrix& h) {
  if (!is_unimodular(h.A())) return false;
  return is_symmetric(h.A() * h.B().transpose());
}

IntMatrix full_matrix(const HandlebodyMatrix& h) {
  if (!validate(h)) throw DomainError("not a handlebody matrix: need A unimodular and A B^t symmetric");
  const std::size_t g = h.genus();
  return block_matrix(h.A(), h.B(), IntMatrix(g, g), unimodular_inverse(h.A()).transpose());
}

IntMatrix symplectic_form(std::size_t g) {
  return block_matrix(IntMatrix(g, g), IntMatrix::identity(g), -IntMatrix::identity(g), IntMatrix(g, g));
}

bool is_symplectic(const IntMatrix& f) {
  if (!f.is_square() || f.rows() % 2 != 0) return false;
  const IntMatrix j = symplectic_form(f.rows() / 2);
  return f.transpose() * j * f == j;
}

IntMatrix unipotent_part(const HandlebodyMatrix& h) {
  if (!validate(h)) throw DomainError("not a handlebody matrix: need A unimodular and A B^t symmetric");
  return unimodular_inverse(h.A()) * h.B();
}

HandlebodyMatrix construct_B(const IntMatrix& U, const IntMatrix& V) {
  if (!V.is_square()) throw DimensionMismatch("construct_B: V must be square");
  const std::size_t k = U.rows();
  const std::size_t rest = V.rows();
  if (U.cols() != rest) throw DimensionMismatch("construct_B: U must be k x (g - k)");
  const std::size_t g = k + rest;
  if (!is_unimodular(V)) throw DomainError("determinant ±1 required");
  // The leading block must be the whole fixed space: no y != 0 with U y = 0 and V y = y.
  IntMatrix stacked(k + rest, rest);
  stacked.set_block(0, 0, U);
  stacked.set_block(k, 0, V - IntMatrix::identity(rest));
  if (rank(stacked) != rest)
    throw DomainError("leading block does not span the fixed space of f_*");

  const IntMatrix Z = unimodular_inverse(V);
  const IntMatrix Y = -(U * Z);
  const IntMatrix a_transpose = block_matrix(IntMatrix::identity(k), Y, IntMatrix(rest, k), Z);
  IntMatrix B(g, g);
  B.set_block(0, 0, IntMatrix::identity(k));
  B.set_block(k, 0, Y.transpose());
  return {a_transpose.transpose(), std::move(B)};
}

HandlebodyMatrix construct_B(const FixedBlockForm& form) { return construct_B(form.U, form.V); }

TwistGenerator TwistGenerator::alpha(std::size_t i) {
  if (i == 0) throw DomainError("twist generator indices are 1-based");
  return {Kind::alpha, i, 0};
}

TwistGenerator TwistGenerator::delta(std::size_t i, std::size_t j) {
  if (i == 0 || j == 0) throw DomainError("twist generator indices are 1-based");
  if (i == j) throw DomainError("delta(i, j) needs i != j");
  return {Kind::delta, std::min(i, j), std::max(i, j)};
}

TwistWord::TwistWord(std::size_t g, const std::vector<TwistFactor>& factors) : g_(g) {
  std::map<TwistGenerator, Integer> merged;
  for (const auto& f : factors) {
    if (f.exponent == 0) throw DomainError("twist exponents must be nonzero");
    const auto& gen = f.generator;
    if (gen.i == 0 || gen.i > g || gen.j > g) throw DomainError("twist generator index beyond genus");
    if (gen.kind == TwistGenerator::Kind::delta && !(gen.i < gen.j))
      throw DomainError("delta(i, j) must satisfy i < j");
    if (gen.kind == TwistGenerator::Kind::alpha && gen.j != 0)
      throw DomainError("alpha generators take a single index");
    merged[gen] += f.exponent;
  }
  // Kind::alpha < Kind::delta, so map order is the canonical order.
  for (auto& [gen, e] : merged)
    if (e != 0) factors_.push_back({gen, e});
}

TwistWord decompose_unipotent(const IntMatrix& B) {
  if (!is_symmetric(B)) throw DomainError("unipotent block must be symmetric");
  const std::size_t g = B.rows();
  std::vector<TwistFactor> factors;
  for (std::size_t i = 0; i < g; ++i) {
    Integer e = B(i, i);
    for (std::size_t j = 0; j < g; ++j)
      if (j != i) e -= B(i, j);
    if (e != 0) factors.push_back({TwistGenerator::alpha(i + 1), e});
  }
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = i + 1; j < g; ++j)
      if (B(i, j) != 0) factors.push_back({TwistGenerator::delta(i + 1, j + 1), B(i, j)});
  return {g, factors};
}

HandlebodyMatrix evaluate_twist_word(const TwistWord& w) {
  const std::size_t g = w.genus();
  IntMatrix B(g, g);
  for (const auto& [gen, e] : w.factors()) {
    const std::size_t i = gen.i - 1;
    if (gen.kind == TwistGenerator::Kind::alpha) {
      B(i, i) += e;
    } else {
      const std::size_t j = gen.j - 1;
      B(i, i) += e;
      B(j, j) += e;
      B(i, j) += e;
      B(j, i) += e;
    }
  }
  return {IntMatrix::identity(g), std::move(B)};
}

}  // namespace monodromy
