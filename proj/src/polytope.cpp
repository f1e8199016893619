#include "finepoly/polytope.hpp"

#include <algorithm>

#include "finepoly/double_description.hpp"
#include "finepoly/kernels.hpp"

namespace finepoly {

namespace {

void sort_unique(std::vector<RationalVector>& pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

// Facets of the convex hull of points spanning Q^d. The valid inequalities
// <x,a> >= b form a pointed cone in (a,b)-space cut out by one row per point;
// its extreme rays with a != 0 are the facets.
std::vector<HalfSpace> hull_facets(const std::vector<RationalVector>& pts, std::size_t d) {
  DoubleDescription dd(d + 1);
  for (const auto& p : pts) {
    Integer den = lcm_of_denominators(p);
    LatticeVector row;
    row.reserve(d + 1);
    for (const auto& c : p) row.push_back(c.get_num() * (den / c.get_den()));
    row.push_back(-den);
    dd.add_constraint(row);
  }
  if (!dd.lines().empty()) throw InternalError("hull_facets: points do not span");
  std::vector<HalfSpace> out;
  for (const auto& r : dd.rays()) {
    LatticeVector a(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(d));
    if (is_zero(a)) continue;
    Integer g = gcd_of(a);
    for (auto& x : a) x /= g;
    out.push_back({std::move(a), Rational(r[d], g)});
  }
  for (auto& h : out) h.offset.canonicalize();
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Points whose tight facet normals have full rank.
std::vector<RationalVector> extreme_points(const std::vector<RationalVector>& pts,
                                           const std::vector<HalfSpace>& facets, std::size_t d) {
  std::vector<RationalVector> out;
  for (const auto& p : pts) {
    std::vector<LatticeVector> tight;
    for (const auto& h : facets)
      if (dot(p, h.normal) == h.offset) tight.push_back(h.normal);
    if (tight.size() >= d && rank(tight, d) == d) out.push_back(p);
  }
  return out;
}

RationalVector restrict_to(const RationalVector& v, const std::vector<std::size_t>& coords) {
  RationalVector out;
  out.reserve(coords.size());
  for (auto c : coords) out.push_back(v[c]);
  return out;
}

}  // namespace

Polytope Polytope::from_vertices(std::vector<RationalVector> points) {
  if (points.empty()) throw InputError("polytope from an empty point list");
  const std::size_t d = points.front().size();
  for (const auto& p : points)
    if (p.size() != d) throw InputError("points of mixed dimension");
  for (auto& p : points)
    for (auto& c : p) c.canonicalize();
  sort_unique(points);

  Polytope poly;
  poly.dim_ = d;
  const RationalVector& v0 = points.front();
  std::vector<LatticeVector> dirs;
  std::vector<RationalVector> rdirs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    rdirs.push_back(sub(points[i], v0));
    dirs.push_back(clear_denominators(rdirs.back()));
  }
  const std::size_t k = rank(std::span<const RationalVector>(rdirs), d);
  poly.affine_dim_ = static_cast<int>(k);

  if (k == d) {
    poly.halfspaces_ = hull_facets(points, d);
    poly.vertices_ = extreme_points(points, poly.halfspaces_, d);
    return poly;
  }

  for (auto& e : integer_kernel(dirs, d)) {
    Rational value = dot(v0, e);
    poly.equations_.push_back({std::move(e), value});
  }
  if (k == 0) {
    poly.vertices_ = {v0};
    return poly;
  }

  // Project to pivot coordinates, which is injective on the affine hull.
  std::vector<std::size_t> pivots = rref(rdirs, d).pivots;
  std::vector<RationalVector> projected;
  projected.reserve(points.size());
  for (const auto& p : points) projected.push_back(restrict_to(p, pivots));
  std::vector<HalfSpace> low = hull_facets(projected, k);
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::vector<LatticeVector> tight;
    for (const auto& h : low)
      if (dot(projected[i], h.normal) == h.offset) tight.push_back(h.normal);
    if (tight.size() >= k && rank(tight, k) == k) poly.vertices_.push_back(points[i]);
  }
  for (const auto& h : low) {
    LatticeVector n(d, Integer(0));
    for (std::size_t j = 0; j < k; ++j) n[pivots[j]] = h.normal[j];
    poly.halfspaces_.push_back({std::move(n), h.offset});
  }
  std::sort(poly.halfspaces_.begin(), poly.halfspaces_.end());
  return poly;
}

Polytope Polytope::from_lattice_points(const std::vector<LatticeVector>& points) {
  std::vector<RationalVector> pts;
  pts.reserve(points.size());
  for (const auto& p : points) pts.push_back(to_rational(p));
  return from_vertices(std::move(pts));
}

Polytope Polytope::from_halfspaces(const std::vector<HalfSpace>& halfspaces, std::size_t dim,
                                   const std::vector<Equation>& equations) {
  if (dim == 0) throw InputError("ambient dimension must be positive");
  DoubleDescription dd(dim + 1);
  for (const auto& h : halfspaces) {
    if (h.normal.size() != dim) throw InputError("half-space dimension mismatch");
    dd.add_constraint(homogenize(h.normal, h.offset));
  }
  for (const auto& e : equations) {
    if (e.normal.size() != dim) throw InputError("equation dimension mismatch");
    LatticeVector row = homogenize(e.normal, e.value);
    dd.add_constraint(row);
    dd.add_constraint(negate(row));
  }
  LatticeVector t_row(dim + 1, Integer(0));
  t_row[dim] = 1;
  dd.add_constraint(t_row);

  std::vector<RationalVector> verts;
  bool recession = !dd.lines().empty();
  for (const auto& r : dd.rays()) {
    if (r[dim] == 0) {
      recession = true;
      continue;
    }
    RationalVector v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = Rational(r[i], r[dim]);
    for (auto& c : v) c.canonicalize();
    verts.push_back(std::move(v));
  }
  if (verts.empty()) throw EmptyPolyhedronError("half-space system is infeasible");
  if (recession) throw UnboundedError("half-space system is unbounded");
  return from_vertices(std::move(verts));
}

bool Polytope::is_lattice() const {
  for (const auto& v : vertices_)
    if (!is_integral(v)) return false;
  return true;
}

bool Polytope::contains(const RationalVector& x) const {
  if (x.size() != dim_) throw InputError("point dimension mismatch");
  for (const auto& e : equations_)
    if (dot(x, e.normal) != e.value) return false;
  for (const auto& h : halfspaces_)
    if (dot(x, h.normal) < h.offset) return false;
  return true;
}

bool Polytope::contains(const Polytope& other) const {
  for (const auto& v : other.vertices())
    if (!contains(v)) return false;
  return true;
}

std::vector<std::size_t> Polytope::tight_halfspaces(std::size_t vertex) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < halfspaces_.size(); ++i)
    if (dot(vertices_[vertex], halfspaces_[i].normal) == halfspaces_[i].offset) out.push_back(i);
  return out;
}

Rational support_value(const Polytope& p, const LatticeVector& nu) {
  if (p.vertices().empty()) throw InputError("support value of an empty polytope");
  if (nu.size() != p.ambient_dim()) throw InputError("normal dimension mismatch");
  Rational best = dot(p.vertices().front(), nu);
  for (const auto& v : p.vertices()) {
    Rational s = dot(v, nu);
    if (s < best) best = s;
  }
  return best;
}

Polytope face(const Polytope& p, const LatticeVector& nu) {
  Rational ord = support_value(p, nu);
  std::vector<RationalVector> pts;
  for (const auto& v : p.vertices())
    if (dot(v, nu) == ord) pts.push_back(v);
  return Polytope::from_vertices(std::move(pts));
}

std::vector<LatticeVector> facet_normals(const Polytope& p) {
  if (!p.full_dimensional()) throw InputError("facet normals need a full-dimensional polytope");
  std::vector<LatticeVector> out;
  out.reserve(p.halfspaces().size());
  for (const auto& h : p.halfspaces()) out.push_back(h.normal);
  return out;
}

Polytope minkowski_sum(const Polytope& a, const Polytope& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw InputError("Minkowski sum of mismatched dimensions");
  std::vector<RationalVector> pts;
  pts.reserve(a.vertices().size() * b.vertices().size());
  for (const auto& u : a.vertices())
    for (const auto& v : b.vertices()) pts.push_back(add(u, v));
  return Polytope::from_vertices(std::move(pts));
}

Polytope dilate(const Polytope& p, const Rational& lambda) {
  if (lambda <= 0) throw InputError("dilation factor must be positive");
  std::vector<RationalVector> pts;
  for (const auto& v : p.vertices()) pts.push_back(scale(v, lambda));
  return Polytope::from_vertices(std::move(pts));
}

Polytope translate(const Polytope& p, const RationalVector& x) {
  if (x.size() != p.ambient_dim()) throw InputError("translation dimension mismatch");
  std::vector<RationalVector> pts;
  for (const auto& v : p.vertices()) pts.push_back(add(v, x));
  return Polytope::from_vertices(std::move(pts));
}

Polytope product(const Polytope& a, const Polytope& b) {
  std::vector<RationalVector> pts;
  for (const auto& u : a.vertices())
    for (const auto& v : b.vertices()) {
      RationalVector w = u;
      w.insert(w.end(), v.begin(), v.end());
      pts.push_back(std::move(w));
    }
  return Polytope::from_vertices(std::move(pts));
}

Polytope project(const Polytope& p, const IntegerMatrix& pi) {
  if (pi.cols() != p.ambient_dim()) throw InputError("projection matrix has the wrong width");
  if (pi.rows() == 0) throw InputError("projection to the zero lattice");
  std::vector<LatticeVector> rows = pi.row_vectors();
  if (rank(rows, pi.cols()) != pi.rows() || lattice_basis(rows, pi.cols()) != saturate(rows, pi.cols()))
    throw InputError("projection is not surjective onto the target lattice");
  std::vector<RationalVector> pts;
  for (const auto& v : p.vertices()) {
    RationalVector w;
    for (const auto& r : rows) w.push_back(dot(v, r));
    pts.push_back(std::move(w));
  }
  return Polytope::from_vertices(std::move(pts));
}

namespace {

void bounding_box(const Polytope& p, LatticeVector& lo, LatticeVector& hi) {
  const std::size_t d = p.ambient_dim();
  lo.assign(d, Integer(0));
  hi.assign(d, Integer(0));
  for (std::size_t i = 0; i < d; ++i) {
    Rational mn = p.vertices().front()[i], mx = mn;
    for (const auto& v : p.vertices()) {
      mn = std::min(mn, v[i]);
      mx = std::max(mx, v[i]);
    }
    lo[i] = ceil_to_integer(mn);
    hi[i] = floor_to_integer(mx);
  }
}

}  // namespace

std::vector<LatticeVector> lattice_points(const Polytope& p) {
  IntegerInequalities ineq;
  for (const auto& e : p.equations()) {
    if (e.value.get_den() != 1) return {};
    ineq.normals.push_back(e.normal);
    ineq.offsets.push_back(e.value.get_num());
    ineq.normals.push_back(negate(e.normal));
    ineq.offsets.push_back(-e.value.get_num());
  }
  for (const auto& h : p.halfspaces()) {
    ineq.normals.push_back(h.normal);
    ineq.offsets.push_back(ceil_to_integer(h.offset));
  }
  LatticeVector lo, hi;
  bounding_box(p, lo, hi);
  return box_lattice_points(ineq, lo, hi);
}

std::vector<LatticeVector> interior_lattice_points(const Polytope& p) {
  if (!p.full_dimensional()) throw InputError("interior points need a full-dimensional polytope");
  IntegerInequalities ineq;
  for (const auto& h : p.halfspaces()) {
    ineq.normals.push_back(h.normal);
    ineq.offsets.push_back(floor_to_integer(h.offset) + 1);
  }
  LatticeVector lo, hi;
  bounding_box(p, lo, hi);
  return box_lattice_points(ineq, lo, hi);
}

namespace {

// Volume of a polytope that is full-dimensional in Z^k, by pyramids over the
// facets not containing the first vertex.
Rational full_volume(const Polytope& q) {
  const std::size_t k = q.ambient_dim();
  const RationalVector& apex = q.vertices().front();
  if (k == 1) return q.vertices().back()[0] - apex[0];
  Rational total = 0;
  for (const auto& h : q.halfspaces()) {
    Rational height = dot(apex, h.normal) - h.offset;
    if (height == 0) continue;
    std::vector<RationalVector> base;
    for (const auto& v : q.vertices())
      if (dot(v, h.normal) == h.offset) base.push_back(v);
    total += height * normalized_volume(Polytope::from_vertices(std::move(base)), static_cast<int>(k) - 1);
  }
  return total;
}

}  // namespace

Rational normalized_volume(const Polytope& p, int k) {
  if (k != p.affine_dim()) throw InputError("normalized_volume: k differs from the affine dimension");
  if (k == 0) return 1;
  const std::size_t d = p.ambient_dim();
  if (p.full_dimensional()) return full_volume(p);

  const RationalVector& v0 = p.vertices().front();
  std::vector<LatticeVector> dirs;
  for (std::size_t i = 1; i < p.vertices().size(); ++i) dirs.push_back(clear_denominators(sub(p.vertices()[i], v0)));
  std::vector<LatticeVector> basis = saturate(dirs, d);
  // coordinates w.r.t. the basis, solved on columns where the basis is invertible
  std::vector<RationalVector> brows;
  for (const auto& b : basis) brows.push_back(to_rational(b));
  std::vector<std::size_t> cols = rref(brows, d).pivots;
  std::vector<RationalVector> system(cols.size(), RationalVector(basis.size()));
  for (std::size_t r = 0; r < cols.size(); ++r)
    for (std::size_t j = 0; j < basis.size(); ++j) system[r][j] = Rational(basis[j][cols[r]]);
  std::vector<RationalVector> coords;
  for (const auto& v : p.vertices()) {
    RationalVector diff = sub(v, v0);
    RationalVector rhs;
    for (auto c : cols) rhs.push_back(diff[c]);
    coords.push_back(solve(system, rhs));
  }
  return full_volume(Polytope::from_vertices(std::move(coords)));
}

RationalVector vertex_barycenter(const Polytope& p) {
  RationalVector sum(p.ambient_dim(), Rational(0));
  for (const auto& v : p.vertices()) sum = add(sum, v);
  return scale(sum, Rational(1, static_cast<unsigned long>(p.vertices().size())));
}

}  // namespace finepoly
