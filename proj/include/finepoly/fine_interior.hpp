#pragma once

// The Fine interior F(P) = { x : <x, nu> >= ord_P(nu) + 1 for all nu != 0 },
// its support S_F(P), the canonical hull C(P), the function delta_P and the
// closedness predicates and dilation thresholds built on them.
//
// F(P) is cut out by the finitely many nonzero lattice points of
// Conv(Sigma_P[1]); these are the "candidates". Rather than intersect all of
// them at once, the computation starts from the shifted facet inequalities
// and adds the most violated candidates until none is violated.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "finepoly/polytope.hpp"

namespace finepoly {

/// Nonzero lattice points of Conv(Sigma_P[1]), lexicographically sorted.
std::vector<LatticeVector> candidate_normals(const Polytope& p);

/// Largest |nu|_inf over the facet normals; a radius at which the box oracle
/// sees every candidate.
std::int64_t candidate_radius(const Polytope& p);

/// F(P), or nullopt when it is empty.
std::optional<Polytope> fine_interior(const Polytope& p);
std::optional<Polytope> fine_interior(const Polytope& p, std::span<const LatticeVector> candidates);

/// S_F(P) given F(P); sorted lexicographically.
std::vector<LatticeVector> support_set(const Polytope& p, const Polytope& fine);
std::vector<LatticeVector> support_set(const Polytope& p, const Polytope& fine,
                                       std::span<const LatticeVector> candidates);

/// C(P); throws InputError if F(P) is empty.
Polytope canonical_hull(const Polytope& p);

struct FineInteriorData {
  Polytope input;
  std::optional<Polytope> fine;
  std::vector<LatticeVector> support;
  std::optional<Polytope> canonical_hull;
  std::vector<LatticeVector> candidates;

  bool empty() const { return !fine.has_value(); }
  /// -1 when F(P) is empty.
  int fine_dim() const { return fine ? fine->affine_dim() : -1; }
};

FineInteriorData compute_fine_interior_data(const Polytope& p);

/// delta_P(y) = ord_F(P)(y) - ord_P(y), memoized per instance. Not
/// thread-safe; use one per analysis.
class DeltaFunction {
 public:
  DeltaFunction(const Polytope& p, const Polytope& fine);

  Rational operator()(const LatticeVector& y);
  /// Membership in Delta_P = { y : delta_P(y) <= 1 }.
  bool in_delta_region(const LatticeVector& y) { return (*this)(y) <= 1; }

 private:
  std::vector<RationalVector> p_vertices_;
  std::vector<RationalVector> f_vertices_;
  std::map<LatticeVector, Rational> cache_;
};

/// delta_P(nu); requires F(P) nonempty.
Rational delta(const Polytope& p, const LatticeVector& nu);

struct ClosednessFlags {
  bool no_fine_interior = false;
  bool canonically_closed = false;
  bool integrally_closed = false;
  bool reflexive = false;
  bool almost_reflexive = false;
  bool pseudoreflexive = false;
};

ClosednessFlags closedness_flags(const Polytope& p);
ClosednessFlags closedness_flags(const FineInteriorData& data);

/// Every facet normal of P lies in S_F(P); false when F(P) is empty.
bool canonically_closed(const Polytope& p);

/// lambda_P^0: F(lambda P) is nonempty exactly when lambda >= lambda_P^0.
Rational lambda_min(const Polytope& p);

/// Interval [lo, hi] with hi - lo <= precision containing the threshold
/// lambda_P beyond which lambda P is canonically closed.
std::pair<Rational, Rational> lambda_closed(const Polytope& p, const Rational& precision);

/// Brute-force F(P) over every nonzero nu with |nu|_inf <= radius.
std::optional<Polytope> oracle_fine_interior(const Polytope& p, std::int64_t radius);

}  // namespace finepoly
