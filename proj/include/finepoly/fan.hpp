#pragma once

// Rational polyhedral fans in N_R stored by their maximal cones.
//
// Rays are primitive lattice vectors, kept sorted; a cone is the sorted list
// of indices of its rays. Lower-dimensional cones are implicit as faces of
// the maximal ones.

#include <cstddef>
#include <vector>

#include "finepoly/exact.hpp"
#include "finepoly/polytope.hpp"

namespace finepoly {

struct Cone {
  std::vector<LatticeVector> rays;
  int dim = 0;
};

struct ConeFacet {
  LatticeVector normal;              ///< inward, primitive: <ray, normal> >= 0
  std::vector<std::size_t> rays;     ///< positions (in the input ray list) on the facet
};

/// Facets of cone(rays) relative to its linear span.
std::vector<ConeFacet> cone_facets(const std::vector<LatticeVector>& rays, std::size_t ambient);

/// Extreme rays (primitive, sorted) of the cone generated by gens.
std::vector<LatticeVector> cone_extreme_rays(const std::vector<LatticeVector>& gens, std::size_t ambient);

/// y lies in cone(rays), given the cone's facets and its linear span.
bool cone_contains(const std::vector<LatticeVector>& rays, const LatticeVector& y);

/// Strictly convex: no nonzero y with y and -y both in the cone.
bool cone_strictly_convex(const std::vector<LatticeVector>& rays, std::size_t ambient);

class Fan {
 public:
  Fan() = default;
  /// Normalizes: rays made primitive and sorted, cones sorted.
  Fan(std::size_t dim, const std::vector<std::vector<LatticeVector>>& maximal_cones);

  std::size_t dim() const { return dim_; }
  const std::vector<LatticeVector>& rays() const { return rays_; }
  const std::vector<std::vector<std::size_t>>& cones() const { return cones_; }
  std::vector<LatticeVector> cone_rays(std::size_t i) const;
  Cone cone(std::size_t i) const;

  bool operator==(const Fan& other) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<LatticeVector> rays_;
  std::vector<std::vector<std::size_t>> cones_;
};

/// Normal fan of a full-dimensional polytope: one maximal cone per vertex,
/// spanned by the facet normals tight at it (listed in vertex order).
Fan normal_fan(const Polytope& p);

/// Certificate of completeness: every maximal cone is full-dimensional and
/// strictly convex, and every facet of every maximal cone is shared by
/// exactly two maximal cones.
bool is_complete(const Fan& fan);

bool is_simplicial(const Fan& fan);

/// Ray index pairs spanning the 2-dimensional cones of the fan.
std::vector<std::pair<std::size_t, std::size_t>> two_cones(const Fan& fan);

/// Every maximal cone of `fine` lies in a maximal cone of `coarse`.
bool refines(const Fan& fine, const Fan& coarse);

/// Star subdivision at y: each maximal cone containing y is replaced by the
/// cones over its facets not containing y, joined with y.
Fan stellar_subdivision(const Fan& fan, const LatticeVector& y);

/// Pulling triangulation of every non-simplicial maximal cone, pulling rays
/// in the fan's (lexicographic) ray order so shared faces agree.
Fan pulling_triangulation(const Fan& fan);

}  // namespace finepoly
