#include "finepoly/canonical_model.hpp"

#include <algorithm>

#include "finepoly/double_description.hpp"
#include "finepoly/kernels.hpp"
#include "finepoly/lp.hpp"
#include "finepoly/matrix.hpp"

namespace finepoly {

Fan tilde_fan(const FineInteriorData& data) {
  if (data.empty()) throw InputError("tilde fan needs a nonempty Fine interior");
  return normal_fan(minkowski_sum(*data.canonical_hull, *data.fine));
}

Fan tilde_fan(const Polytope& p) { return tilde_fan(compute_fine_interior_data(p)); }

CanonicalConeData canonical_refinement(const Cone& cone) {
  if (cone.rays.empty()) throw InputError("canonical refinement of the zero cone");
  const std::size_t d = cone.rays.front().size();
  if (rank(cone.rays, d) != d) throw InputError("canonical refinement needs a full-dimensional cone");
  if (!cone_strictly_convex(cone.rays, d)) throw InputError("canonical refinement needs a strictly convex cone");

  CanonicalConeData out;
  out.cone = cone;
  out.cone.dim = static_cast<int>(d);
  std::vector<LatticeVector> hull = cone.rays;
  hull.push_back(LatticeVector(d, Integer(0)));
  for (auto& v : lattice_points(Polytope::from_lattice_points(hull)))
    if (!is_zero(v)) out.candidates.push_back(std::move(v));

  // Theta* is unbounded; homogenize and read vertices (t > 0) and recession
  // rays (t = 0) off the extreme rays.
  DoubleDescription dd(d + 1);
  LatticeVector t(d + 1, Integer(0));
  t[d] = 1;
  dd.add_constraint(t);
  for (const auto& nu : out.candidates) dd.add_constraint(homogenize(nu, Rational(1)));
  if (!dd.lines().empty()) throw InternalError("Theta* has lines for a strictly convex cone");
  for (const auto& r : dd.rays()) {
    if (r[d] == 0) {
      out.recession.push_back(primitive(LatticeVector(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(d))));
      continue;
    }
    RationalVector v(d);
    for (std::size_t i = 0; i < d; ++i) {
      v[i] = Rational(r[i], r[d]);
      v[i].canonicalize();
    }
    out.theta_vertices.push_back(std::move(v));
  }
  std::sort(out.theta_vertices.begin(), out.theta_vertices.end());
  std::sort(out.recession.begin(), out.recession.end());

  for (const auto& mu : out.theta_vertices) {
    std::vector<LatticeVector> tight;
    for (const auto& nu : out.candidates)
      if (dot(mu, nu) == 1) tight.push_back(nu);
    out.refinement.push_back(cone_extreme_rays(tight, d));
  }
  return out;
}

Fan canonical_refinement_fan(const Polytope& p) {
  if (!p.full_dimensional()) throw InputError("canonical refinement needs a full-dimensional polytope");
  std::vector<std::vector<LatticeVector>> cones;
  Fan sigma = normal_fan(p);
  for (std::size_t c = 0; c < sigma.cones().size(); ++c) {
    CanonicalConeData data = canonical_refinement(sigma.cone(c));
    for (auto& sub : data.refinement) cones.push_back(std::move(sub));
  }
  return Fan(p.ambient_dim(), cones);
}

Fan canonical_refinement_fan_by_dilation(const Polytope& p) {
  Integer den = 1;
  for (const auto& v : p.vertices()) {
    Integer l = lcm_of_denominators(v);
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), l.get_mpz_t());
  }
  Rational lambda0 = lambda_min(p);
  Integer k = den * std::max<Integer>(Integer(static_cast<unsigned long>(p.ambient_dim())), ceil_to_integer(lambda0 / den));
  Polytope kp = dilate(p, Rational(k));
  if (!canonically_closed(kp)) throw InternalError("dilated polytope is not canonically closed");
  std::optional<Polytope> f = fine_interior(dilate(kp, Rational(2)));
  if (!f) throw InternalError("F(2kP) is empty");
  return normal_fan(*f);
}

std::optional<Polytope> coneswise_fine_interior(const Polytope& p) {
  if (!p.full_dimensional()) throw InputError("coneswise Fine interior needs a full-dimensional polytope");
  std::vector<HalfSpace> hs;
  for (std::size_t v = 0; v < p.vertices().size(); ++v) {
    Cone cone;
    for (auto h : p.tight_halfspaces(v)) cone.rays.push_back(p.halfspaces()[h].normal);
    CanonicalConeData data = canonical_refinement(cone);
    // p_sigma + Theta*: <x - p_sigma, nu> >= 1 for the cone's candidates
    for (const auto& nu : data.candidates) hs.push_back({nu, dot(p.vertices()[v], nu) + 1});
  }
  std::sort(hs.begin(), hs.end());
  hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
  try {
    return Polytope::from_halfspaces(hs, p.ambient_dim());
  } catch (const EmptyPolyhedronError&) {
    return std::nullopt;
  }
}

Rational discrepancy(const FineInteriorData& data, const LatticeVector& nu) {
  if (data.empty()) throw InputError("discrepancy needs a nonempty Fine interior");
  if (is_zero(nu)) throw InputError("discrepancy of the zero vector");
  return support_value(*data.fine, nu) - support_value(data.input, nu) - 1;
}

Rational discrepancy(const Polytope& p, const LatticeVector& nu) {
  return discrepancy(compute_fine_interior_data(p), nu);
}

std::vector<Codim2Entry> verify_codim2(const FineInteriorData& data, const Fan& tilde) {
  if (data.empty()) throw InputError("codimension-2 check needs a nonempty Fine interior");
  const Polytope& p = data.input;
  const Polytope& f = *data.fine;
  const std::size_t d = p.ambient_dim();
  std::vector<Codim2Entry> out;
  for (const auto& [i, j] : two_cones(tilde)) {
    Codim2Entry e;
    e.nu_i = tilde.rays()[i];
    e.nu_j = tilde.rays()[j];
    Rational ord_i = support_value(p, e.nu_i), ord_j = support_value(p, e.nu_j);

    std::vector<LinearConstraint> rows;
    for (const auto& h : f.halfspaces()) rows.push_back({to_rational(h.normal), h.offset});
    auto equal = [&](const LatticeVector& n, const Rational& value) {
      rows.push_back({to_rational(n), value});
      rows.push_back({scale(to_rational(n), Rational(-1)), -value});
    };
    for (const auto& eq : f.equations()) equal(eq.normal, eq.value);
    equal(e.nu_i, ord_i + 1);
    equal(e.nu_j, ord_j + 1);
    e.meets_fine_interior = lp_feasible(d, rows);

    for (const auto& v : p.vertices())
      if (dot(v, e.nu_i) == ord_i && dot(v, e.nu_j) == ord_j) {
        e.contains_vertex = true;
        break;
      }
    out.push_back(std::move(e));
  }
  return out;
}

CrepantRefinement crepant_simplicial_refinement(const FineInteriorData& data, const Fan& tilde) {
  if (data.empty()) throw InputError("crepant refinement needs a nonempty Fine interior");
  Fan fan = tilde;
  for (const auto& nu : data.support) fan = stellar_subdivision(fan, nu);
  if (!is_simplicial(fan)) fan = pulling_triangulation(fan);

  CrepantRefinement out;
  out.simplicial = is_simplicial(fan);
  out.complete = is_complete(fan);
  out.rays_equal_support = fan.rays() == data.support;
  out.terminal = true;
  for (std::size_t c = 0; c < fan.cones().size() && out.terminal; ++c) {
    std::vector<LatticeVector> rays = fan.cone_rays(c);
    for (const auto& nu : data.support) {
      if (!cone_contains(rays, nu)) continue;
      if (!std::binary_search(rays.begin(), rays.end(), nu)) {
        out.terminal = false;
        break;
      }
    }
  }
  out.fan = std::move(fan);
  return out;
}

bool koelman_check(const FineInteriorData& data, const Fan& tilde) {
  if (tilde.dim() != 2) throw InputError("Koelman check is two-dimensional");
  for (const auto& [i, j] : two_cones(tilde)) {
    const LatticeVector& a = tilde.rays()[i];
    const LatticeVector& b = tilde.rays()[j];
    Integer det = abs(a[0] * b[1] - a[1] * b[0]);
    Integer inside = 0;
    std::vector<LatticeVector> rays{a, b};
    for (const auto& nu : data.support)
      if (nu != a && nu != b && cone_contains(rays, nu)) ++inside;
    if (det != inside + 1) return false;
  }
  return true;
}

CanonicalModelData canonical_model(const FineInteriorData& data) {
  CanonicalModelData out;
  out.tilde = tilde_fan(data);
  out.tilde_rays = out.tilde.rays();
  out.tilde_rays_in_support = std::includes(data.support.begin(), data.support.end(), out.tilde_rays.begin(),
                                            out.tilde_rays.end());
  out.hat = crepant_simplicial_refinement(data, out.tilde);
  out.codim2 = verify_codim2(data, out.tilde);
  out.codim2_ok = std::all_of(out.codim2.begin(), out.codim2.end(), [](const Codim2Entry& e) { return e.ok(); });
  return out;
}

}  // namespace finepoly
