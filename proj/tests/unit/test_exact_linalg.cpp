#include <doctest.h>

#include <random>

#include "monodromy/lattice.hpp"
#include "monodromy/normal_form.hpp"
#include "monodromy/random.hpp"
#include "monodromy/subspace.hpp"
#include "support/oracle.hpp"

using namespace monodromy;

namespace {

bool is_smith_form(const IntMatrix& s) {
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < s.cols(); ++j)
      if (i != j && s(i, j) != 0) return false;
  const std::size_t d = std::min(s.rows(), s.cols());
  for (std::size_t i = 0; i < d; ++i) {
    if (s(i, i) < 0) return false;
    if (i + 1 < d) {
      if (s(i, i) == 0 && s(i + 1, i + 1) != 0) return false;
      if (s(i, i) != 0 && !mpz_divisible_p(s(i + 1, i + 1).get_mpz_t(), s(i, i).get_mpz_t())) return false;
    }
  }
  return true;
}

void check_smith(const IntMatrix& m) {
  auto snf = smith_normal_form(m);
  CHECK(snf.left * m * snf.right == snf.S);
  CHECK(abs(determinant(snf.left)) == 1);
  CHECK(abs(determinant(snf.right)) == 1);
  CHECK(is_smith_form(snf.S));
}

RatMatrix rat(std::initializer_list<std::initializer_list<Rational>> rows) { return RatMatrix(rows); }

}  // namespace

TEST_CASE("determinant and rank agree with the oracle") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + trial % 5;
    IntMatrix m = random_integer_matrix(rng, n, n, 6);
    CHECK(oracle::to_q(Rational(determinant(m))) == oracle::det(oracle::from(m)));
    CHECK(rank(m) == oracle::rank(oracle::from(m)));
  }
  CHECK(determinant(IntMatrix(0, 0)) == 1);
  CHECK_THROWS_AS(determinant(IntMatrix(2, 3)), DimensionMismatch);
}

TEST_CASE("unimodular inverse") {
  IntMatrix m{{2, 1}, {1, 1}};
  CHECK(unimodular_inverse(m) == IntMatrix{{1, -1}, {-1, 2}});
  CHECK_THROWS_AS(unimodular_inverse(IntMatrix{{2, 0}, {0, 1}}), DomainError);
}

TEST_CASE("smith normal form examples") {
  auto id = smith_normal_form(IntMatrix::identity(2));
  CHECK(id.S == IntMatrix::identity(2));
  CHECK(id.left == IntMatrix::identity(2));
  CHECK(id.right == IntMatrix::identity(2));

  IntMatrix m{{2, 4}, {6, 8}};
  auto snf = smith_normal_form(m);
  // d1 = gcd of entries, d1 * d2 = |det|.
  auto q = oracle::from(m);
  oracle::Z d1 = oracle::gcd_of_entries(q);
  oracle::Z d2 = boost::multiprecision::numerator(oracle::Q(abs(oracle::det(q)))) / d1;
  CHECK(d1 == 2);
  CHECK(d2 == 4);
  CHECK(snf.S == IntMatrix{{2, 0}, {0, 4}});
  check_smith(m);

  auto zero = smith_normal_form(IntMatrix(2, 3));
  CHECK(zero.S == IntMatrix(2, 3));
  CHECK(zero.rank() == 0);

  auto empty = smith_normal_form(IntMatrix(0, 3));
  CHECK(empty.S.rows() == 0);
  CHECK(empty.right == IntMatrix::identity(3));
}

TEST_CASE("smith normal form property: unimodular factors and divisibility chain") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    IntMatrix m = random_integer_matrix(rng, r, c, 9);
    check_smith(m);
    auto snf = smith_normal_form(m);
    auto factors = snf.invariant_factors();
    CHECK(factors.size() == oracle::rank(oracle::from(m)));
    if (!factors.empty()) CHECK(oracle::to_q(Rational(factors.front())) == oracle::Q(oracle::gcd_of_entries(oracle::from(m))));
    if (r == c && factors.size() == r) {
      Integer prod = 1;
      for (auto& f : factors) prod *= f;
      CHECK(prod == abs(determinant(m)));
    }
  }
}

TEST_CASE("hermite normal form") {
  IntMatrix k{{1}, {-1}};
  auto hnf = hermite_normal_form(k);
  CHECK(hnf.H == IntMatrix{{1}, {0}});
  CHECK(hnf.transform == IntMatrix{{1, 0}, {1, 1}});

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    IntMatrix m = random_integer_matrix(rng, 1 + rng() % 4, 1 + rng() % 4, 7);
    auto h = hermite_normal_form(m);
    CHECK(h.transform * m == h.H);
    CHECK(abs(determinant(h.transform)) == 1);
    for (std::size_t r = 0; r < h.pivots.size(); ++r) {
      CHECK(h.H(r, h.pivots[r]) > 0);
      for (std::size_t above = 0; above < r; ++above) {
        CHECK(h.H(above, h.pivots[r]) >= 0);
        CHECK(h.H(above, h.pivots[r]) < h.H(r, h.pivots[r]));
      }
    }
    CHECK(h.pivots.size() == rank(m));
  }
}

TEST_CASE("rational kernel and image examples") {
  CHECK(rational_kernel(RatMatrix::identity(2)).is_zero());
  auto k = rational_kernel(rat({{0, 1}, {0, 1}}));
  CHECK(k == Subspace::span(rat({{1}, {0}})));
  CHECK(rational_kernel(RatMatrix(2, 2)).is_whole());

  CHECK(rational_image(RatMatrix::identity(2)).is_whole());
  CHECK(rational_image(rat({{0, 0}, {3, 1}})) == Subspace::span(rat({{0}, {1}})));
  CHECK(rational_image(RatMatrix(2, 2)).is_zero());
}

TEST_CASE("subspace sum examples") {
  auto e1 = Subspace::span(rat({{1}, {0}}));
  auto e2 = Subspace::span(rat({{0}, {1}}));
  CHECK(subspace_sum(e1, e2).is_whole());
  CHECK(subspace_sum(Subspace::span(rat({{0}, {1}})), Subspace::span(rat({{1}, {3}}))).is_whole());
  CHECK(subspace_equals(subspace_sum(e1, Subspace::zero(2)), e1));
  CHECK_THROWS_AS(subspace_sum(e1, Subspace::zero(3)), DimensionMismatch);
}

TEST_CASE("rank-nullity and canonical subspace equality against the oracle") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    IntMatrix m = random_integer_matrix(rng, r, c, 3);
    if (trial % 3 == 0) m.set_block(0, 0, IntMatrix(r, c / 2));  // force rank drops
    RatMatrix q = to_rational(m);
    auto ker = rational_kernel(q);
    auto im = rational_image(q);
    CHECK(ker.dim() + im.dim() == c);
    CHECK((q * ker.basis()).is_zero());

    // Same subspace from a different generating set.
    IntMatrix mix = random_integer_matrix(rng, c, c, 2);
    RatMatrix other = q * to_rational(mix);
    auto im2 = rational_image(other);
    const bool mutual = oracle::column_span_contains(oracle::from(im.basis()), oracle::from(im2.basis())) &&
                        oracle::column_span_contains(oracle::from(im2.basis()), oracle::from(im.basis()));
    CHECK(subspace_equals(im, im2) == mutual);
    CHECK(subspace_equals(im, im));
    CHECK(subspace_equals(ker, subspace_sum(ker, ker)));
  }
}

TEST_CASE("saturated fixed lattice examples") {
  auto id = saturated_fixed_lattice(IntMatrix::identity(2));
  CHECK(id == std::vector<IntVector>{{1, 0}, {0, 1}});
  IntMatrix m{{2, 1}, {0, 1}};
  auto fixed = saturated_fixed_lattice(m);
  REQUIRE(fixed.size() == 1);
  CHECK(fixed[0] == IntVector{1, -1});
  CHECK(m.apply(fixed[0]) == fixed[0]);
  CHECK(saturated_fixed_lattice(IntMatrix{{0, -1}, {1, 0}}).empty());
  CHECK_THROWS_AS(saturated_fixed_lattice(IntMatrix(2, 3)), DimensionMismatch);
}

TEST_CASE("saturated fixed lattice is saturated") {
  // M - Id = [[2, 4], [0, 0]] has kernel spanned by (2, -1), which is primitive.
  IntMatrix m{{3, 4}, {0, 1}};
  auto fixed = saturated_fixed_lattice(m);
  REQUIRE(fixed.size() == 1);
  CHECK(fixed[0] == IntVector{2, -1});
  CHECK(abs(determinant(extend_to_unimodular_basis(fixed, 2))) == 1);
}

TEST_CASE("extend to unimodular basis") {
  CHECK(extend_to_unimodular_basis({{1, 0}}, 2) == IntMatrix::identity(2));
  auto p = extend_to_unimodular_basis({{1, -1}}, 2);
  CHECK(p == IntMatrix{{1, 0}, {-1, 1}});
  CHECK(abs(determinant(p)) == 1);
  CHECK(extend_to_unimodular_basis({}, 2) == IntMatrix::identity(2));

  auto q = extend_to_unimodular_basis({{2, 3, 5}}, 3);
  CHECK(abs(determinant(q)) == 1);
  CHECK(q.column(0) == IntVector{2, 3, 5});

  CHECK_THROWS_AS(extend_to_unimodular_basis({{2, 0}}, 2), DomainError);
  CHECK_THROWS_AS(extend_to_unimodular_basis({{1, 1}, {2, 2}}, 2), DomainError);
  CHECK_THROWS_AS(extend_to_unimodular_basis({{1, 1, 0}}, 2), DimensionMismatch);
}

TEST_CASE("conjugate to fixed block form examples") {
  auto id = conjugate_to_fixed_block_form(IntMatrix::identity(2));
  CHECK(id.k == 2);
  CHECK(id.U.rows() == 2);
  CHECK(id.U.cols() == 0);
  CHECK(id.V.rows() == 0);
  CHECK(id.P == IntMatrix::identity(2));

  auto same = conjugate_to_fixed_block_form(IntMatrix{{1, 1}, {0, 2}});
  CHECK(same.k == 1);
  CHECK(same.U == IntMatrix{{1}});
  CHECK(same.V == IntMatrix{{2}});
  CHECK(same.P == IntMatrix::identity(2));

  auto moved = conjugate_to_fixed_block_form(IntMatrix{{2, 1}, {0, 1}});
  CHECK(moved.P == IntMatrix{{1, 0}, {-1, 1}});
  CHECK(moved.conjugated() == IntMatrix{{1, 1}, {0, 2}});
  CHECK_THROWS_AS(conjugate_to_fixed_block_form(IntMatrix{{1, 1}, {1, 1}}), DomainError);

  IntMatrix u{{0, 1}, {1, 0}};
  auto swap = conjugate_to_fixed_block_form(u);
  CHECK(swap.k == 1);
  CHECK(swap.P.column(0) == IntVector{1, 1});
  CHECK(unimodular_inverse(swap.P) * u * swap.P == swap.conjugated());
  CHECK(swap.V == IntMatrix{{-1}});

  auto free = conjugate_to_fixed_block_form(IntMatrix{{0, -1}, {1, 0}});
  CHECK(free.k == 0);
  CHECK(free.U.rows() == 0);
  CHECK(free.V == IntMatrix{{0, -1}, {1, 0}});

  CHECK_THROWS_AS(conjugate_to_fixed_block_form(IntMatrix(2, 3)), DimensionMismatch);
}

TEST_CASE("non-semisimple eigenvalue 1 leaves V - Id singular") {
  auto form = conjugate_to_fixed_block_form(IntMatrix{{1, 1}, {0, 1}});
  CHECK(form.k == 1);
  CHECK(form.V == IntMatrix{{1}});
  CHECK_FALSE(form.v_minus_id_invertible());
}

TEST_CASE("fixed block form property over random GL_g(Z)") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t g = 1 + trial % 6;
    UnimodularSampler sample{g, 3};
    IntMatrix m = sample(rng);
    auto form = conjugate_to_fixed_block_form(m);
    CHECK(abs(determinant(form.P)) == 1);
    CHECK(unimodular_inverse(form.P) * m * form.P == form.conjugated());
    auto shifted = oracle::sub_identity(oracle::from(m));
    const std::size_t r1 = oracle::rank(shifted);
    CHECK(form.k == g - r1);
    // det(V - Id) != 0 exactly when eigenvalue 1 is semisimple.
    const bool semisimple = oracle::rank(oracle::mul(shifted, shifted)) == r1;
    CHECK(form.v_minus_id_invertible() == semisimple);
  }
}
