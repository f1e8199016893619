#include "finepoly/fine_interior.hpp"

#include <algorithm>

#include "finepoly/double_description.hpp"
#include "finepoly/kernels.hpp"
#include "finepoly/lp.hpp"

namespace finepoly {

namespace {

// Candidates added per round of cutting planes.
std::size_t batch_size(std::size_t d) { return 4 * d; }

// Incremental intersection of half-spaces <x,nu> >= b, homogenized with t >= 0.
class CuttingPlanes {
 public:
  explicit CuttingPlanes(std::size_t d) : d_(d), dd_(d + 1) {
    LatticeVector t(d + 1, Integer(0));
    t[d] = 1;
    dd_.add_constraint(t);
  }

  void add(const LatticeVector& nu, const Rational& bound) { dd_.add_constraint(homogenize(nu, bound)); }

  std::vector<RationalVector> vertices() const {
    std::vector<RationalVector> out;
    for (const auto& r : dd_.rays()) {
      if (r[d_] == 0) {
        // only happens before the region is bounded
        throw InternalError("cutting-plane region is unbounded");
      }
      RationalVector v(d_);
      for (std::size_t i = 0; i < d_; ++i) {
        v[i] = Rational(r[i], r[d_]);
        v[i].canonicalize();
      }
      out.push_back(std::move(v));
    }
    if (!dd_.lines().empty()) throw InternalError("cutting-plane region is unbounded");
    return out;
  }

 private:
  std::size_t d_;
  DoubleDescription dd_;
};

std::vector<Rational> shifted(std::vector<Rational> ords) {
  for (auto& o : ords) o += 1;
  return ords;
}

bool is_origin(const Polytope& f) { return f.vertices().size() == 1 && is_zero(f.vertices().front()); }

}  // namespace

std::vector<LatticeVector> candidate_normals(const Polytope& p) {
  std::vector<LatticeVector> normals = facet_normals(p);
  normals.push_back(LatticeVector(p.ambient_dim(), Integer(0)));
  std::vector<LatticeVector> out;
  for (auto& v : lattice_points(Polytope::from_lattice_points(normals)))
    if (!is_zero(v)) out.push_back(std::move(v));
  return out;
}

std::int64_t candidate_radius(const Polytope& p) {
  Integer best = 0;
  for (const auto& n : facet_normals(p))
    for (const auto& c : n) best = std::max<Integer>(best, abs(c));
  return to_int64(best);
}

std::optional<Polytope> fine_interior(const Polytope& p) {
  std::vector<LatticeVector> cands = candidate_normals(p);
  return fine_interior(p, cands);
}

std::optional<Polytope> fine_interior(const Polytope& p, std::span<const LatticeVector> candidates) {
  if (!p.full_dimensional()) throw InputError("Fine interior needs a full-dimensional polytope");
  const std::size_t d = p.ambient_dim();
  std::vector<Rational> thresholds = shifted(min_pairings(p.vertices(), candidates));

  CuttingPlanes region(d);
  for (const auto& h : p.halfspaces()) region.add(h.normal, h.offset + 1);
  while (true) {
    std::vector<RationalVector> verts = region.vertices();
    if (verts.empty()) return std::nullopt;
    std::vector<std::size_t> violated = most_violated(verts, candidates, thresholds, batch_size(d));
    if (violated.empty()) return Polytope::from_vertices(std::move(verts));
    for (auto i : violated) region.add(candidates[i], thresholds[i]);
  }
}

std::vector<LatticeVector> support_set(const Polytope& p, const Polytope& fine) {
  std::vector<LatticeVector> cands = candidate_normals(p);
  return support_set(p, fine, cands);
}

std::vector<LatticeVector> support_set(const Polytope& p, const Polytope& fine,
                                       std::span<const LatticeVector> candidates) {
  std::vector<Rational> ord_p = min_pairings(p.vertices(), candidates);
  std::vector<Rational> ord_f = min_pairings(fine.vertices(), candidates);
  std::vector<LatticeVector> out;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (ord_f[i] == ord_p[i] + 1) out.push_back(candidates[i]);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

Polytope hull_from_support(const Polytope& p, const std::vector<LatticeVector>& support) {
  std::vector<Rational> ords = min_pairings(p.vertices(), support);
  std::vector<HalfSpace> hs;
  for (std::size_t i = 0; i < support.size(); ++i) hs.push_back({support[i], ords[i]});
  try {
    return Polytope::from_halfspaces(hs, p.ambient_dim());
  } catch (const UnboundedError&) {
    throw InternalError("canonical hull is unbounded");
  } catch (const EmptyPolyhedronError&) {
    throw InternalError("canonical hull is empty");
  }
}

}  // namespace

Polytope canonical_hull(const Polytope& p) {
  FineInteriorData data = compute_fine_interior_data(p);
  if (data.empty()) throw InputError("canonical hull of a polytope with empty Fine interior");
  return *data.canonical_hull;
}

FineInteriorData compute_fine_interior_data(const Polytope& p) {
  FineInteriorData data;
  data.input = p;
  data.candidates = candidate_normals(p);
  data.fine = fine_interior(p, data.candidates);
  if (data.fine) {
    data.support = support_set(p, *data.fine, data.candidates);
    data.canonical_hull = hull_from_support(p, data.support);
  }
  return data;
}

DeltaFunction::DeltaFunction(const Polytope& p, const Polytope& fine)
    : p_vertices_(p.vertices()), f_vertices_(fine.vertices()) {}

Rational DeltaFunction::operator()(const LatticeVector& y) {
  auto it = cache_.find(y);
  if (it != cache_.end()) return it->second;
  std::vector<LatticeVector> one{y};
  Rational value = min_pairings(f_vertices_, one)[0] - min_pairings(p_vertices_, one)[0];
  cache_.emplace(y, value);
  return value;
}

Rational delta(const Polytope& p, const LatticeVector& nu) {
  std::optional<Polytope> f = fine_interior(p);
  if (!f) throw InputError("delta needs a nonempty Fine interior");
  return support_value(*f, nu) - support_value(p, nu);
}

ClosednessFlags closedness_flags(const Polytope& p) { return closedness_flags(compute_fine_interior_data(p)); }

ClosednessFlags closedness_flags(const FineInteriorData& data) {
  ClosednessFlags flags;
  if (data.empty()) {
    flags.no_fine_interior = true;
    return flags;
  }
  const Polytope& p = data.input;
  const Polytope& c = *data.canonical_hull;
  flags.canonically_closed = true;
  for (const auto& n : facet_normals(p))
    if (!std::binary_search(data.support.begin(), data.support.end(), n)) flags.canonically_closed = false;

  std::vector<LatticeVector> c_points = lattice_points(c);
  flags.integrally_closed = !c_points.empty() && Polytope::from_lattice_points(c_points) == p;

  const bool origin = is_origin(*data.fine);
  flags.reflexive = origin && p.is_lattice() && c == p;
  if (origin && c.is_lattice()) {
    if (c == p) {
      flags.almost_reflexive = flags.reflexive;
    } else {
      FineInteriorData cd = compute_fine_interior_data(c);
      flags.almost_reflexive = cd.fine && is_origin(*cd.fine) && *cd.canonical_hull == c;
    }
  }
  flags.pseudoreflexive = flags.integrally_closed && origin;
  return flags;
}

bool canonically_closed(const Polytope& p) {
  FineInteriorData data = compute_fine_interior_data(p);
  if (data.empty()) return false;
  for (const auto& n : facet_normals(p))
    if (!std::binary_search(data.support.begin(), data.support.end(), n)) return false;
  return true;
}

Rational lambda_min(const Polytope& p) {
  if (!p.full_dimensional()) throw InputError("lambda_min needs a full-dimensional polytope");
  const std::size_t d = p.ambient_dim();
  // With the origin in the interior every ord value is negative, which makes
  // the problem bounded; emptiness of F(lambda P) is translation invariant.
  RationalVector center = vertex_barycenter(p);
  Polytope q = translate(p, scale(center, Rational(-1)));
  std::vector<LatticeVector> cands = candidate_normals(q);
  std::vector<Rational> ords = min_pairings(q.vertices(), cands);

  LpProblem lp;
  lp.dim = d + 1;
  lp.objective.assign(d + 1, Rational(0));
  lp.objective[d] = 1;
  auto add_row = [&](const LatticeVector& nu, const Rational& ord) {
    RationalVector row = to_rational(nu);
    row.push_back(-ord);
    lp.add_at_least(std::move(row), Rational(1));
  };
  for (const auto& h : q.halfspaces()) add_row(h.normal, h.offset);

  while (true) {
    LpResult result = lp_solve(lp);
    auto* opt = std::get_if<LpOptimal>(&result);
    if (!opt) throw InternalError("lambda_min: parametric LP is not bounded and feasible");
    RationalVector x(opt->witness.begin(), opt->witness.begin() + static_cast<std::ptrdiff_t>(d));
    const Rational& lambda = opt->witness[d];
    std::vector<Rational> thresholds;
    thresholds.reserve(ords.size());
    for (const auto& o : ords) thresholds.push_back(lambda * o + 1);
    std::vector<RationalVector> point{x};
    std::vector<std::size_t> violated = most_violated(point, cands, thresholds, batch_size(d));
    if (violated.empty()) return lambda;
    for (auto i : violated) add_row(cands[i], ords[i]);
  }
}

std::pair<Rational, Rational> lambda_closed(const Polytope& p, const Rational& precision) {
  if (precision <= 0) throw InputError("precision must be positive");
  const Rational lambda0 = lambda_min(p);
  auto closed_at = [&](const Rational& lambda) { return canonically_closed(dilate(p, lambda)); };
  Rational lo = lambda0;
  if (closed_at(lo)) return {lo, lo};

  // Multiples k*(D P) with k >= d are canonically closed once F is nonempty.
  Integer den = 1;
  for (const auto& v : p.vertices()) {
    Integer l = lcm_of_denominators(v);
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), l.get_mpz_t());
  }
  Integer k = std::max<Integer>(Integer(static_cast<unsigned long>(p.ambient_dim())), ceil_to_integer(lambda0 / den));
  Rational hi = Rational(den * k);
  if (!closed_at(hi)) throw InternalError("lambda_closed: upper seed is not canonically closed");
  while (hi - lo > precision) {
    Rational mid = (lo + hi) / 2;
    if (closed_at(mid))
      hi = mid;
    else
      lo = mid;
  }
  return {lo, hi};
}

std::optional<Polytope> oracle_fine_interior(const Polytope& p, std::int64_t radius) {
  if (radius < 1) throw InputError("oracle radius must be at least 1");
  if (!p.full_dimensional()) throw InputError("oracle needs a full-dimensional polytope");
  const std::size_t d = p.ambient_dim();
  CuttingPlanes region(d);
  // the unit directions keep the region bounded from the start
  for (std::size_t i = 0; i < d; ++i)
    for (int s : {1, -1}) {
      LatticeVector e(d, Integer(0));
      e[i] = s;
      region.add(e, support_value(p, e) + 1);
    }
  for (const auto& h : p.halfspaces()) {
    bool in_box = true;
    for (const auto& c : h.normal)
      if (abs(c) > radius) in_box = false;
    if (in_box) region.add(h.normal, h.offset + 1);
  }
  while (true) {
    std::vector<RationalVector> verts = region.vertices();
    if (verts.empty()) return std::nullopt;
    std::vector<LatticeVector> violated = box_violations(p.vertices(), verts, radius, 4 * batch_size(d));
    if (violated.empty()) return Polytope::from_vertices(std::move(verts));
    for (const auto& nu : violated) region.add(nu, support_value(p, nu) + 1);
  }
}

}  // namespace finepoly
