#pragma once

// Fans of the canonical model: the normal fan of P~ = C(P) + F(P), the
// coneswise canonical refinement of Sigma_P, discrepancies, the codimension-2
// certificate and one deterministic crepant simplicial refinement.

#include <optional>
#include <vector>

#include "finepoly/fan.hpp"
#include "finepoly/fine_interior.hpp"

namespace finepoly {

struct CanonicalConeData {
  Cone cone;
  /// Nonzero lattice points of Conv(0, rays); they cut out Theta*.
  std::vector<LatticeVector> candidates;
  /// M(sigma): vertices of Theta* = { x : <x,nu> >= 1 on sigma ∩ N \ 0 }.
  std::vector<RationalVector> theta_vertices;
  /// Rays of the recession cone of Theta*, the dual cone of sigma.
  std::vector<LatticeVector> recession;
  /// Domains of linearity of ord over Theta*, one per vertex of M(sigma).
  std::vector<std::vector<LatticeVector>> refinement;
};

/// Normal fan of C(P) + F(P); needs F(P) nonempty.
Fan tilde_fan(const FineInteriorData& data);
Fan tilde_fan(const Polytope& p);

CanonicalConeData canonical_refinement(const Cone& cone);

/// Canonical refinements of the maximal cones of Sigma_P, glued.
Fan canonical_refinement_fan(const Polytope& p);

/// Normal fan of F(2kP) for a multiple kP that is canonically closed; equal
/// to canonical_refinement_fan(p) by the dilation law.
Fan canonical_refinement_fan_by_dilation(const Polytope& p);

/// Intersection over vertices p_sigma of p_sigma + Theta*_sigma.
std::optional<Polytope> coneswise_fine_interior(const Polytope& p);

/// a(nu) = ord_F(nu) - ord_P(nu) - 1 for nu != 0.
Rational discrepancy(const FineInteriorData& data, const LatticeVector& nu);
Rational discrepancy(const Polytope& p, const LatticeVector& nu);

struct Codim2Entry {
  LatticeVector nu_i;
  LatticeVector nu_j;
  bool meets_fine_interior = false;  ///< F(P) meets <x,nu> = ord_P(nu) + 1 for both
  bool contains_vertex = false;      ///< a vertex of P has <v,nu> = ord_P(nu) for both
  bool ok() const { return meets_fine_interior && contains_vertex; }
};

std::vector<Codim2Entry> verify_codim2(const FineInteriorData& data, const Fan& tilde);

struct CrepantRefinement {
  Fan fan;
  bool simplicial = false;
  bool complete = false;
  bool rays_equal_support = false;
  /// S_F(P) ∩ sigma = rays(sigma) for every maximal cone.
  bool terminal = false;
};

/// Stellar subdivisions of Sigma~ at the points of S_F(P) in lexicographic
/// order, then a pulling triangulation of what is still not simplicial.
CrepantRefinement crepant_simplicial_refinement(const FineInteriorData& data, const Fan& tilde);

/// d = 2: every 2-cone of Sigma~ spanned by nu_i, nu_j has |det| equal to one
/// more than the number of S_F(P) points strictly inside it.
bool koelman_check(const FineInteriorData& data, const Fan& tilde);

struct CanonicalModelData {
  Fan tilde;
  std::vector<LatticeVector> tilde_rays;
  bool tilde_rays_in_support = false;
  CrepantRefinement hat;
  std::vector<Codim2Entry> codim2;
  bool codim2_ok = false;
};

CanonicalModelData canonical_model(const FineInteriorData& data);

}  // namespace finepoly
