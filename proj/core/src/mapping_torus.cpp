#include "monodromy/mapping_torus.hpp"

#include "monodromy/normal_form.hpp"
#include "monodromy/subspace.hpp"

namespace monodromy {

namespace {

constexpr const char* kFamilyNote =
    "homology-level certificate: every monodromy psi^n * phi_0 with psi in the kernel of "
    "H_g -> Out(F_g) acting trivially on H_1(S_g; Q) has this same action, so the data "
    "above holds for the whole family; hyperbolicity and volumes are not certified";

}  // namespace

SurfaceTorusHomology h1_surface_torus(const IntMatrix& phi_star) {
  if (!phi_star.is_square()) throw DimensionMismatch("h1_surface_torus: non-square monodromy");
  const std::size_t n = phi_star.rows();
  auto snf = smith_normal_form(IntMatrix::identity(n) - phi_star);
  SurfaceTorusHomology out;
  auto factors = snf.invariant_factors();
  out.dim = 1 + (n - factors.size());
  for (auto& f : factors)
    if (f > 1) out.torsion.push_back(f);
  return out;
}

std::size_t h1_handlebody_torus(const IntMatrix& f_star) {
  if (!f_star.is_square()) throw DimensionMismatch("h1_handlebody_torus: non-square action");
  const std::size_t g = f_star.rows();
  return 1 + (g - rank(IntMatrix::identity(g) - f_star));
}

bool check_full_compatibility(const HandlebodyMatrix& h) {
  if (!validate(h)) throw DomainError("not a handlebody matrix: need A unimodular and A B^t symmetric");
  const std::size_t g = h.genus();
  const IntMatrix id = IntMatrix::identity(g);
  const IntMatrix lower = unimodular_inverse(h.A()).transpose();
  Subspace moved = rational_image(to_rational(h.A() - id));
  Subspace fixed = rational_kernel(to_rational(lower - id));
  Subspace pushed = image_of(to_rational(h.B()), fixed);
  return subspace_sum(moved, pushed).is_whole();
}

Certificate certify(const IntMatrix& f_star) {
  if (!f_star.is_square()) throw DimensionMismatch("certify: f_* must be square");
  const std::size_t g = f_star.rows();
  if (g == 0) throw DomainError("rank must be positive");
  if (!is_unimodular(f_star)) throw DomainError("determinant ±1 required");

  FixedBlockForm form = conjugate_to_fixed_block_form(f_star);
  HandlebodyMatrix h = construct_B(form);
  if (!validate(h)) throw InternalError("constructed (A, B) violates the handlebody conditions");
  if (!check_full_compatibility(h)) throw InternalError("constructed (A, B) fails the compatibility criterion");

  IntMatrix unipotent = unipotent_part(h);
  TwistWord word = decompose_unipotent(unipotent);
  if (!(evaluate_twist_word(word).B() == unipotent)) throw InternalError("twist word does not realize the unipotent block");

  auto surface = h1_surface_torus(full_matrix(h));
  const std::size_t dim_w = h1_handlebody_torus(form.conjugated());
  if (surface.dim != dim_w) throw InternalError("criterion holds but H_1 dimensions differ");

  HomologyReport report{surface.dim, dim_w, std::move(surface.torsion), true};
  NormBookkeeping norms{g, g, Integer(g) - 1, Integer(g) - 1};
  return Certificate{std::nullopt,
                     f_star,
                     std::move(form),
                     std::move(h),
                     std::move(unipotent),
                     std::move(word),
                     true,
                     std::move(report),
                     std::move(norms),
                     false,
                     kFamilyNote};
}

Certificate certify(const FreeEndomorphism& f) {
  Certificate c = certify(abelianization_matrix(f));
  c.word_input = f;
  return c;
}

std::vector<std::string> verify_certificate(const Certificate& c) {
  std::vector<std::string> failures;
  auto expect = [&](bool ok, const char* what) {
    if (!ok) failures.emplace_back(what);
  };
  try {
    const std::size_t g = c.genus();
    const auto& form = c.block_form;
    expect(g > 0 && c.f_star.is_square(), "f_star is not a nonempty square matrix");
    if (!failures.empty()) return failures;
    if (c.word_input) expect(abelianization_matrix(*c.word_input) == c.f_star, "f_star is not the abelianization of the input words");
    expect(is_unimodular(c.f_star), "f_star is not unimodular");
    expect(form.P.rows() == g && is_unimodular(form.P), "conjugator is not unimodular");
    expect(form.k <= g && form.U.rows() == form.k && form.U.cols() == g - form.k &&
               form.V.rows() == g - form.k && form.V.cols() == g - form.k,
           "block shapes do not match k");
    if (!failures.empty()) return failures;

    const IntMatrix conj = form.conjugated();
    expect(unimodular_inverse(form.P) * c.f_star * form.P == conj, "P^{-1} f_star P differs from [[Id, U], [0, V]]");
    expect(form.k == g - rank(c.f_star - IntMatrix::identity(g)), "k differs from dim ker(f_star - Id)");

    const auto& h = c.handlebody;
    expect(h.genus() == g, "handlebody genus differs from f_star");
    if (!failures.empty()) return failures;
    expect(validate(h), "(A, B) violates A unimodular / A B^t symmetric");
    if (!failures.empty()) return failures;
    expect(unimodular_inverse(h.A()).transpose() == conj, "(A^t)^{-1} differs from the conjugated f_star");
    expect(is_symplectic(full_matrix(h)), "full matrix is not symplectic");
    const bool criterion = check_full_compatibility(h);
    expect(criterion && c.criterion, "compatibility criterion fails");

    expect(h.A() * c.unipotent_block == h.B(), "A * unipotent_block differs from B");
    expect(c.twist_word.genus() == g && evaluate_twist_word(c.twist_word).B() == c.unipotent_block,
           "twist word does not evaluate to the unipotent block");

    auto surface = h1_surface_torus(full_matrix(h));
    expect(surface.dim == c.homology.dim_h1_M, "dim H_1(M) mismatch");
    expect(surface.torsion == c.homology.torsion_M, "torsion of H_1(M) mismatch");
    expect(h1_handlebody_torus(conj) == c.homology.dim_h1_W, "dim H_1(W) mismatch");
    expect(c.homology.dim_h1_W == 1 + form.k, "dim H_1(W) differs from 1 + dim ker(f_star - Id)");
    expect(c.homology.iota_iso && c.homology.dim_h1_M == c.homology.dim_h1_W, "H_1(M) and H_1(W) are not isomorphic");

    const Integer expected = Integer(g) - 1;
    expect(c.norms.fiber_genus == g && c.norms.handlebody_rank == g, "norm bookkeeping genus/rank mismatch");
    expect(c.norms.N == expected && c.norms.T == expected, "N and T differ from g - 1");
  } catch (const std::exception& e) {
    failures.emplace_back(std::string("check raised: ") + e.what());
  }
  return failures;
}

}  // namespace monodromy
