#pragma once

// Exact convex polytopes in M_Q = Q^d kept in dual representation.
//
// A Polytope always stores its irredundant vertex list (lexicographically
// sorted) and an irredundant inequality description. Full-dimensional
// polytopes get their facets with primitive inward normals, so offsets are
// ord_P of the facet normals. Lower-dimensional polytopes additionally store
// integer equations of the affine hull; their inequalities are facets of
// the projection to a set of pivot coordinates, lifted back, and are only
// meant for membership tests.

#include <cstddef>
#include <vector>

#include "finepoly/exact.hpp"
#include "finepoly/matrix.hpp"

namespace finepoly {

/// { x : <x, normal> >= offset }
struct HalfSpace {
  LatticeVector normal;
  Rational offset;

  bool operator==(const HalfSpace&) const = default;
  bool operator<(const HalfSpace& o) const { return normal != o.normal ? normal < o.normal : offset < o.offset; }
};

/// { x : <x, normal> = value }
struct Equation {
  LatticeVector normal;
  Rational value;

  bool operator==(const Equation&) const = default;
};

class UnboundedError : public InputError {
 public:
  using InputError::InputError;
};

class EmptyPolyhedronError : public InputError {
 public:
  using InputError::InputError;
};

class Polytope {
 public:
  Polytope() = default;

  static Polytope from_vertices(std::vector<RationalVector> points);
  static Polytope from_lattice_points(const std::vector<LatticeVector>& points);
  static Polytope from_halfspaces(const std::vector<HalfSpace>& halfspaces, std::size_t dim,
                                  const std::vector<Equation>& equations = {});

  std::size_t ambient_dim() const { return dim_; }
  int affine_dim() const { return affine_dim_; }
  bool full_dimensional() const { return affine_dim_ == static_cast<int>(dim_); }
  bool is_lattice() const;

  const std::vector<RationalVector>& vertices() const { return vertices_; }
  const std::vector<HalfSpace>& halfspaces() const { return halfspaces_; }
  const std::vector<Equation>& equations() const { return equations_; }

  bool contains(const RationalVector& x) const;
  bool contains(const Polytope& other) const;

  /// Indices of halfspaces tight at vertex i.
  std::vector<std::size_t> tight_halfspaces(std::size_t vertex) const;

  /// Same vertex set (both representations are canonical given the vertices).
  bool operator==(const Polytope& other) const { return dim_ == other.dim_ && vertices_ == other.vertices_; }

 private:
  std::size_t dim_ = 0;
  int affine_dim_ = -1;
  std::vector<RationalVector> vertices_;
  std::vector<HalfSpace> halfspaces_;
  std::vector<Equation> equations_;
};

/// ord_P(nu) = min_{x in P} <x, nu>.
Rational support_value(const Polytope& p, const LatticeVector& nu);

/// The face of P on which nu attains ord_P(nu).
Polytope face(const Polytope& p, const LatticeVector& nu);

/// Primitive inward facet normals of a full-dimensional polytope (Sigma_P[1]).
std::vector<LatticeVector> facet_normals(const Polytope& p);

Polytope minkowski_sum(const Polytope& a, const Polytope& b);
Polytope dilate(const Polytope& p, const Rational& lambda);
Polytope translate(const Polytope& p, const RationalVector& x);
Polytope product(const Polytope& a, const Polytope& b);

/// Image under the lattice map x -> pi x; pi must be surjective onto Z^rows.
Polytope project(const Polytope& p, const IntegerMatrix& pi);

/// All integer points of P in lexicographic order.
std::vector<LatticeVector> lattice_points(const Polytope& p);

/// Integer points of the relative interior of a full-dimensional P.
std::vector<LatticeVector> interior_lattice_points(const Polytope& p);

/// k! times the Euclidean volume measured in a basis of the direction
/// lattice of P; k must equal affine_dim(P).
Rational normalized_volume(const Polytope& p, int k);

/// Vertex barycenter (average of the vertices).
RationalVector vertex_barycenter(const Polytope& p);

}  // namespace finepoly
