#include "finepoly/fan.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "finepoly/double_description.hpp"
#include "finepoly/matrix.hpp"

namespace finepoly {

namespace {

// Dual cone {m : <r, m> >= 0 for all rays}: its lines are the orthogonal of
// the span, its rays (modulo lines) are the facet normals.
DoubleDescription dual_cone(const std::vector<LatticeVector>& rays, std::size_t ambient) {
  DoubleDescription dd(ambient);
  for (const auto& r : rays) {
    if (r.size() != ambient) throw InputError("ray dimension mismatch");
    dd.add_constraint(r);
  }
  return dd;
}

std::size_t span_dim(const std::vector<LatticeVector>& rays, std::size_t ambient) {
  if (rays.empty()) return 0;
  return rank(rays, ambient);
}

}  // namespace

std::vector<ConeFacet> cone_facets(const std::vector<LatticeVector>& rays, std::size_t ambient) {
  DoubleDescription dd = dual_cone(rays, ambient);
  std::vector<ConeFacet> out;
  for (std::size_t i = 0; i < dd.rays().size(); ++i) out.push_back({dd.rays()[i], dd.zero_set(i)});
  return out;
}

std::vector<LatticeVector> cone_extreme_rays(const std::vector<LatticeVector>& gens, std::size_t ambient) {
  std::set<LatticeVector> unique;
  for (const auto& g : gens)
    if (!is_zero(g)) unique.insert(primitive(g));
  std::vector<LatticeVector> cand(unique.begin(), unique.end());
  DoubleDescription dd = dual_cone(cand, ambient);
  std::vector<LatticeVector> out;
  for (const auto& g : cand) {
    // extreme iff the facets through g cut the span down to the line R g
    std::vector<LatticeVector> tight = dd.lines();
    for (const auto& m : dd.rays())
      if (dot(m, g) == 0) tight.push_back(m);
    if (span_dim(tight, ambient) == ambient - 1) out.push_back(g);
  }
  return out;
}

bool cone_contains(const std::vector<LatticeVector>& rays, const LatticeVector& y) {
  const std::size_t ambient = y.size();
  if (rays.empty()) return is_zero(y);
  DoubleDescription dd = dual_cone(rays, ambient);
  for (const auto& l : dd.lines())
    if (dot(l, y) != 0) return false;
  for (const auto& m : dd.rays())
    if (dot(m, y) < 0) return false;
  return true;
}

bool cone_strictly_convex(const std::vector<LatticeVector>& rays, std::size_t ambient) {
  DoubleDescription dd = dual_cone(rays, ambient);
  std::vector<LatticeVector> gens = dd.lines();
  gens.insert(gens.end(), dd.rays().begin(), dd.rays().end());
  return span_dim(gens, ambient) == ambient;
}

Fan::Fan(std::size_t dim, const std::vector<std::vector<LatticeVector>>& maximal_cones) : dim_(dim) {
  std::set<LatticeVector> all;
  for (const auto& c : maximal_cones)
    for (const auto& r : c) {
      if (r.size() != dim) throw InputError("fan ray dimension mismatch");
      all.insert(primitive(r));
    }
  rays_.assign(all.begin(), all.end());
  for (const auto& c : maximal_cones) {
    std::vector<std::size_t> idx;
    for (const auto& r : c) {
      auto it = std::lower_bound(rays_.begin(), rays_.end(), primitive(r));
      idx.push_back(static_cast<std::size_t>(it - rays_.begin()));
    }
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    cones_.push_back(std::move(idx));
  }
  std::sort(cones_.begin(), cones_.end());
  cones_.erase(std::unique(cones_.begin(), cones_.end()), cones_.end());
}

std::vector<LatticeVector> Fan::cone_rays(std::size_t i) const {
  std::vector<LatticeVector> out;
  for (auto r : cones_[i]) out.push_back(rays_[r]);
  return out;
}

Cone Fan::cone(std::size_t i) const {
  Cone c;
  c.rays = cone_rays(i);
  c.dim = static_cast<int>(span_dim(c.rays, dim_));
  return c;
}

Fan normal_fan(const Polytope& p) {
  if (!p.full_dimensional()) throw InputError("normal fan of a lower-dimensional polytope");
  std::vector<std::vector<LatticeVector>> cones;
  for (std::size_t v = 0; v < p.vertices().size(); ++v) {
    std::vector<LatticeVector> rays;
    for (auto h : p.tight_halfspaces(v)) rays.push_back(p.halfspaces()[h].normal);
    cones.push_back(std::move(rays));
  }
  return Fan(p.ambient_dim(), cones);
}

bool is_complete(const Fan& fan) {
  std::map<std::vector<std::size_t>, int> facet_count;
  for (std::size_t c = 0; c < fan.cones().size(); ++c) {
    std::vector<LatticeVector> rays = fan.cone_rays(c);
    if (span_dim(rays, fan.dim()) != fan.dim()) return false;
    if (!cone_strictly_convex(rays, fan.dim())) return false;
    for (const auto& f : cone_facets(rays, fan.dim())) {
      std::vector<std::size_t> key;
      for (auto r : f.rays) key.push_back(fan.cones()[c][r]);
      ++facet_count[key];
    }
  }
  if (facet_count.empty()) return false;
  for (const auto& [key, n] : facet_count)
    if (n != 2) return false;
  return true;
}

bool is_simplicial(const Fan& fan) {
  for (std::size_t c = 0; c < fan.cones().size(); ++c)
    if (span_dim(fan.cone_rays(c), fan.dim()) != fan.cones()[c].size()) return false;
  return true;
}

std::vector<std::pair<std::size_t, std::size_t>> two_cones(const Fan& fan) {
  std::set<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t c = 0; c < fan.cones().size(); ++c) {
    const auto& idx = fan.cones()[c];
    std::vector<LatticeVector> rays = fan.cone_rays(c);
    std::vector<ConeFacet> facets = cone_facets(rays, fan.dim());
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = a + 1; b < idx.size(); ++b) {
        // smallest face containing both rays: intersection of the facets
        // through both
        std::vector<bool> in_face(idx.size(), true);
        for (const auto& f : facets) {
          bool has_a = std::binary_search(f.rays.begin(), f.rays.end(), a);
          bool has_b = std::binary_search(f.rays.begin(), f.rays.end(), b);
          if (!has_a || !has_b) continue;
          std::vector<bool> on(idx.size(), false);
          for (auto r : f.rays) on[r] = true;
          for (std::size_t r = 0; r < idx.size(); ++r) in_face[r] = in_face[r] && on[r];
        }
        std::size_t count = static_cast<std::size_t>(std::count(in_face.begin(), in_face.end(), true));
        if (count == 2 && span_dim({rays[a], rays[b]}, fan.dim()) == 2) out.insert({idx[a], idx[b]});
      }
  }
  return {out.begin(), out.end()};
}

bool refines(const Fan& fine, const Fan& coarse) {
  std::vector<DoubleDescription> duals;
  for (std::size_t c = 0; c < coarse.cones().size(); ++c) duals.push_back(dual_cone(coarse.cone_rays(c), coarse.dim()));
  for (std::size_t c = 0; c < fine.cones().size(); ++c) {
    bool found = false;
    for (const auto& dd : duals) {
      bool inside = true;
      for (auto r : fine.cones()[c]) {
        const LatticeVector& y = fine.rays()[r];
        for (const auto& l : dd.lines())
          if (dot(l, y) != 0) inside = false;
        for (const auto& m : dd.rays())
          if (dot(m, y) < 0) inside = false;
        if (!inside) break;
      }
      if (inside) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

Fan stellar_subdivision(const Fan& fan, const LatticeVector& y) {
  LatticeVector ray = primitive(y);
  std::vector<std::vector<LatticeVector>> cones;
  bool already = std::binary_search(fan.rays().begin(), fan.rays().end(), ray);
  for (std::size_t c = 0; c < fan.cones().size(); ++c) {
    std::vector<LatticeVector> rays = fan.cone_rays(c);
    if (already || !cone_contains(rays, ray)) {
      cones.push_back(std::move(rays));
      continue;
    }
    for (const auto& f : cone_facets(rays, fan.dim())) {
      if (dot(f.normal, ray) == 0) continue;
      std::vector<LatticeVector> sub;
      for (auto r : f.rays) sub.push_back(rays[r]);
      sub.push_back(ray);
      cones.push_back(std::move(sub));
    }
  }
  return Fan(fan.dim(), cones);
}

namespace {

// Pulling triangulation of cone(rays[idx]) in the given global index order.
void pull(const Fan& fan, const std::vector<std::size_t>& idx, std::vector<std::vector<std::size_t>>& out) {
  std::vector<LatticeVector> rays;
  for (auto i : idx) rays.push_back(fan.rays()[i]);
  const std::size_t k = span_dim(rays, fan.dim());
  if (idx.size() == k) {
    out.push_back(idx);
    return;
  }
  // idx is sorted, so idx[0] is the first ray in the global order
  const std::size_t apex = 0;
  for (const auto& f : cone_facets(rays, fan.dim())) {
    if (std::binary_search(f.rays.begin(), f.rays.end(), apex)) continue;
    std::vector<std::size_t> sub;
    for (auto r : f.rays) sub.push_back(idx[r]);
    std::vector<std::vector<std::size_t>> parts;
    pull(fan, sub, parts);
    for (auto& part : parts) {
      part.insert(part.begin(), idx[apex]);
      out.push_back(std::move(part));
    }
  }
}

}  // namespace

Fan pulling_triangulation(const Fan& fan) {
  std::vector<std::vector<LatticeVector>> cones;
  for (std::size_t c = 0; c < fan.cones().size(); ++c) {
    std::vector<std::vector<std::size_t>> parts;
    pull(fan, fan.cones()[c], parts);
    for (const auto& part : parts) {
      std::vector<LatticeVector> rays;
      for (auto i : part) rays.push_back(fan.rays()[i]);
      cones.push_back(std::move(rays));
    }
  }
  return Fan(fan.dim(), cones);
}

}  // namespace finepoly
