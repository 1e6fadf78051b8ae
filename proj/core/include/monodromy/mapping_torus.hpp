#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monodromy/handlebody.hpp"
#include "monodromy/lattice.hpp"
#include "monodromy/word.hpp"

namespace monodromy {

/// H_1 of the surface mapping torus: Q-dimension and the invariant factors
/// (> 1) of the integral cokernel of Id - phi_*.
struct SurfaceTorusHomology {
  std::size_t dim = 0;
  std::vector<Integer> torsion;
};

/// dim = 1 + (n - rank(Id - phi_*)). Throws DimensionMismatch for non-square input.
SurfaceTorusHomology h1_surface_torus(const IntMatrix& phi_star);

/// dim H_1(W; Q) = 1 + (g - rank(Id - f_*)). Throws DimensionMismatch for non-square input.
std::size_t h1_handlebody_torus(const IntMatrix& f_star);

/// im(A - Id) + B(ker((A^t)^{-1} - Id)) == Q^g. Sufficient for the boundary
/// inclusion of the handlebody bundle to be a rational H_1-isomorphism.
/// Throws DomainError if !validate(h).
bool check_full_compatibility(const HandlebodyMatrix& h);

struct HomologyReport {
  std::size_t dim_h1_M = 0;
  std::size_t dim_h1_W = 0;
  std::vector<Integer> torsion_M;
  bool iota_iso = false;
};

/// For the compatible class: N = x/2 = g - 1 on the surface side and
/// T = -chi(F_g) = g - 1 on the free-by-cyclic side.
struct NormBookkeeping {
  std::size_t fiber_genus = 0;
  std::size_t handlebody_rank = 0;
  Integer N;
  Integer T;
};

struct Certificate {
  std::optional<FreeEndomorphism> word_input;  // set when certified from words
  IntMatrix f_star;                            // action on H_1(F_g), columns = images
  FixedBlockForm block_form;                   // P^{-1} f_star P = [[Id, U], [0, V]]
  HandlebodyMatrix handlebody;                 // in the conjugated frame
  IntMatrix unipotent_block;                   // A^{-1} B
  TwistWord twist_word;                        // realizes (Id, unipotent_block)
  bool criterion = false;
  HomologyReport homology;
  NormBookkeeping norms;
  bool automorphism_verified = false;
  std::string family_note;

  std::size_t genus() const { return f_star.rows(); }
};

/// Runs the whole construction. Throws DimensionMismatch for non-square input,
/// DomainError for g = 0 or |det f_*| != 1, InternalError if a checked
/// consequence of the construction fails.
Certificate certify(const IntMatrix& f_star);
Certificate certify(const FreeEndomorphism& f);

/// Recomputes every invariant of a certificate from its recorded data.
/// Returns one message per failed check; empty means valid.
std::vector<std::string> verify_certificate(const Certificate& c);

}  // namespace monodromy
