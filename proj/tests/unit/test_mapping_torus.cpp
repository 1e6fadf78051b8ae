#include <doctest.h>

#include <random>

#include "monodromy/mapping_torus.hpp"
#include "monodromy/random.hpp"
#include "support/oracle.hpp"

using namespace monodromy;

namespace {

std::size_t oracle_dim_surface(const IntMatrix& phi) {
  return 1 + phi.rows() - oracle::rank(oracle::sub_identity(oracle::from(phi)));
}

}  // namespace

TEST_CASE("h1_surface_torus examples") {
  CHECK(h1_surface_torus(IntMatrix::identity(4)).dim == 5);
  IntMatrix twisted = full_matrix({IntMatrix::identity(2), IntMatrix{{2, 1}, {1, 0}}});
  CHECK(h1_surface_torus(twisted).dim == 3);
  CHECK(oracle_dim_surface(twisted) == 3);
  IntMatrix swapped = full_matrix({IntMatrix{{1, 0}, {1, -1}}, IntMatrix{{1, 0}, {1, 0}}});
  CHECK(oracle::rank(oracle::sub_identity(oracle::from(swapped))) == 3);
  CHECK(h1_surface_torus(swapped).dim == 2);
  CHECK_THROWS_AS(h1_surface_torus(IntMatrix(2, 4)), DimensionMismatch);
}

TEST_CASE("h1_surface_torus torsion") {
  // Id - (-Id) = 2 Id: two copies of Z/2 and no free part beyond the circle.
  auto h = h1_surface_torus(-IntMatrix::identity(2));
  CHECK(h.dim == 1);
  CHECK(h.torsion == std::vector<Integer>{2, 2});
  // B = [[2, 0], [0, 0]] on g = 2: cokernel Z/2 + Z^2 in the surface part.
  auto t = h1_surface_torus(full_matrix({IntMatrix::identity(2), IntMatrix{{2, 0}, {0, 0}}}));
  CHECK(t.dim == 4);
  CHECK(t.torsion == std::vector<Integer>{2});
  CHECK(h1_surface_torus(IntMatrix::identity(4)).torsion.empty());
}

TEST_CASE("h1_handlebody_torus examples") {
  CHECK(h1_handlebody_torus(IntMatrix::identity(2)) == 3);
  CHECK(h1_handlebody_torus(IntMatrix{{1, 1}, {0, -1}}) == 2);
  CHECK(h1_handlebody_torus(IntMatrix{{0, -1}, {1, 0}}) == 1);
  CHECK_THROWS_AS(h1_handlebody_torus(IntMatrix(1, 2)), DimensionMismatch);
}

TEST_CASE("check_full_compatibility examples") {
  CHECK(check_full_compatibility({IntMatrix::identity(2), IntMatrix{{2, 1}, {1, 0}}}));
  CHECK(check_full_compatibility({IntMatrix{{1, 0}, {1, -1}}, IntMatrix{{1, 0}, {1, 0}}}));
  CHECK_FALSE(check_full_compatibility({IntMatrix::identity(2), IntMatrix(2, 2)}));
  CHECK_THROWS_AS(check_full_compatibility({IntMatrix::identity(2), IntMatrix{{0, 1}, {0, 0}}}), DomainError);
}

TEST_CASE("certify examples") {
  auto id = certify(FreeEndomorphism::identity(2));
  CHECK(id.handlebody.A() == IntMatrix::identity(2));
  CHECK(id.handlebody.B() == IntMatrix::identity(2));
  CHECK(id.homology.dim_h1_M == 3);
  CHECK(id.homology.dim_h1_W == 3);
  CHECK(id.twist_word == TwistWord(2, {{TwistGenerator::alpha(1), 1}, {TwistGenerator::alpha(2), 1}}));
  CHECK(id.word_input.has_value());
  CHECK_FALSE(id.automorphism_verified);
  CHECK(verify_certificate(id).empty());

  auto c = certify(IntMatrix{{1, 1}, {0, -1}});
  CHECK(c.block_form.P == IntMatrix::identity(2));
  CHECK(c.handlebody.A() == IntMatrix{{1, 0}, {1, -1}});
  CHECK(c.handlebody.B() == IntMatrix{{1, 0}, {1, 0}});
  CHECK(c.homology.dim_h1_M == 2);
  CHECK(c.homology.dim_h1_W == 2);
  CHECK(c.norms.N == 1);
  CHECK(c.norms.T == 1);
  CHECK(verify_certificate(c).empty());

  CHECK_THROWS_AS(certify(IntMatrix{{2, 1}, {0, 1}}), DomainError);
  CHECK_THROWS_AS(certify(IntMatrix{{2, 0}, {0, 1}}), DomainError);
  CHECK_THROWS_AS(certify(IntMatrix(2, 3)), DimensionMismatch);
  CHECK_THROWS_AS(certify(IntMatrix(0, 0)), DomainError);
}

TEST_CASE("certify handles a Jordan block at eigenvalue 1") {
  auto c = certify(IntMatrix{{1, 1}, {0, 1}});
  CHECK_FALSE(c.block_form.v_minus_id_invertible());
  CHECK(c.criterion);
  CHECK(c.homology.dim_h1_M == 2);
  CHECK(c.homology.dim_h1_W == 2);
  CHECK(verify_certificate(c).empty());
}

TEST_CASE("certify from words") {
  auto f = FreeEndomorphism::parse(3, {"a b", "b", "c a"});
  auto c = certify(f);
  CHECK(c.f_star == abelianization_matrix(f));
  CHECK(verify_certificate(c).empty());
  CHECK_THROWS_AS(certify(FreeEndomorphism::parse(2, {"a a", "b"})), DomainError);
}

TEST_CASE("verify_certificate detects tampering") {
  auto c = certify(IntMatrix{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
  REQUIRE(verify_certificate(c).empty());

  auto bad_b = c;
  IntMatrix b = c.handlebody.B();
  b(0, 1) += 1;
  bad_b.handlebody = HandlebodyMatrix(c.handlebody.A(), b);
  CHECK_FALSE(verify_certificate(bad_b).empty());

  auto bad_dim = c;
  bad_dim.homology.dim_h1_M += 1;
  CHECK_FALSE(verify_certificate(bad_dim).empty());

  auto bad_norm = c;
  bad_norm.norms.T = 7;
  CHECK_FALSE(verify_certificate(bad_norm).empty());

  auto bad_word = c;
  auto factors = c.twist_word.factors();
  factors.push_back({TwistGenerator::alpha(1), 1});
  bad_word.twist_word = TwistWord(3, factors);
  CHECK_FALSE(verify_certificate(bad_word).empty());

  auto bad_p = c;
  bad_p.block_form.P = IntMatrix::identity(3);
  CHECK_FALSE(verify_certificate(bad_p).empty());
}

TEST_CASE("construct_B output satisfies the criterion for admissible inputs") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t g = 1 + trial % 6;
    auto form = conjugate_to_fixed_block_form(UnimodularSampler{g, 3}(rng));
    auto h = construct_B(form);
    CHECK(validate(h));
    CHECK(check_full_compatibility(h));
    CHECK(h1_surface_torus(full_matrix(h)).dim == h1_handlebody_torus(form.conjugated()));
  }
}

TEST_CASE("certify on random GL_g(Z) matches the dense oracle") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t g = 2 + trial % 5;
    IntMatrix f = UnimodularSampler{g, 3}(rng);
    auto c = certify(f);
    const std::size_t expected = 1 + g - oracle::rank(oracle::sub_identity(oracle::from(f)));
    CHECK(c.homology.dim_h1_W == expected);
    CHECK(c.homology.dim_h1_M == expected);
    CHECK(oracle_dim_surface(full_matrix(c.handlebody)) == expected);
    CHECK(c.norms.N == Integer(g) - 1);
    CHECK(verify_certificate(c).empty());
  }
}

TEST_CASE("handlebody torus dimension is conjugation invariant") {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t g = 1 + trial % 6;
    IntMatrix f = UnimodularSampler{g, 3}(rng);
    IntMatrix p = UnimodularSampler{g, 3}(rng);
    CHECK(h1_handlebody_torus(f) == h1_handlebody_torus(unimodular_inverse(p) * f * p));
  }
}

TEST_CASE("g = 2, A = Id: criterion iff det B != 0") {
  int compatible = 0;
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      for (int d = -2; d <= 2; ++d) {
        IntMatrix B{{a, b}, {b, d}};
        HandlebodyMatrix h(IntMatrix::identity(2), B);
        const bool expected = oracle::det(oracle::from(B)) != 0;
        CHECK(check_full_compatibility(h) == expected);
        if (expected) ++compatible;
        IntMatrix f = full_matrix(h);
        CHECK(h1_surface_torus(f).dim == oracle_dim_surface(f));
      }
  CHECK(compatible > 0);
}
