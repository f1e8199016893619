#include "finepoly/invariants.hpp"

#include <algorithm>
#include <cstdio>

namespace finepoly {

std::optional<int> kodaira_dimension(const FineInteriorData& data) {
  if (data.empty()) return std::nullopt;
  return std::min(data.fine_dim(), static_cast<int>(data.input.ambient_dim()) - 1);
}

std::optional<int> kodaira_dimension(const Polytope& p) { return kodaira_dimension(compute_fine_interior_data(p)); }

Rational canonical_degree(const FineInteriorData& data) {
  if (data.empty()) throw InputError("K^{d-1} needs a nonempty Fine interior");
  const Polytope& f = *data.fine;
  const int d = static_cast<int>(data.input.ambient_dim());
  const int k = f.affine_dim();
  if (k < d - 1) return 0;
  if (k == d - 1) return 2 * normalized_volume(f, k);
  Rational total = normalized_volume(f, d);
  for (std::size_t i = 0; i < f.halfspaces().size(); ++i) {
    std::vector<RationalVector> pts;
    for (const auto& v : f.vertices())
      if (dot(v, f.halfspaces()[i].normal) == f.halfspaces()[i].offset) pts.push_back(v);
    total += normalized_volume(Polytope::from_vertices(std::move(pts)), d - 1);
  }
  return total;
}

Rational canonical_degree(const Polytope& p) { return canonical_degree(compute_fine_interior_data(p)); }

SurfaceInvariants surface_invariants(const FineInteriorData& data) {
  if (data.input.ambient_dim() != 3) throw InputError("surface invariants need d = 3");
  if (data.empty()) throw InputError("surface invariants need a nonempty Fine interior");
  SurfaceInvariants s;
  s.c1sq = canonical_degree(data);
  s.chi = 1 + Integer(static_cast<unsigned long>(lattice_points(*data.fine).size()));
  s.c2 = 12 * Rational(s.chi) - s.c1sq;
  return s;
}

SurfaceInvariants surface_invariants(const Polytope& p) { return surface_invariants(compute_fine_interior_data(p)); }

namespace {

// Coordinates of y in the given lattice basis, if y lies in its span.
std::optional<LatticeVector> coordinates(const std::vector<LatticeVector>& basis, const LatticeVector& y) {
  const std::size_t d = y.size(), r = basis.size();
  std::vector<RationalVector> rows;
  for (std::size_t i = 0; i < d; ++i) {
    RationalVector row(r + 1);
    for (std::size_t j = 0; j < r; ++j) row[j] = Rational(basis[j][i]);
    row[r] = Rational(y[i]);
    rows.push_back(std::move(row));
  }
  RowEchelon e = rref(rows, r + 1);
  if (!e.pivots.empty() && e.pivots.back() == r) return std::nullopt;
  LatticeVector c(r, Integer(0));
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    const Rational& v = e.rows[i][r];
    if (v.get_den() != 1) return std::nullopt;
    c[e.pivots[i]] = v.get_num();
  }
  return c;
}

}  // namespace

FibrationData fibration_data(const FineInteriorData& data) {
  if (data.empty()) throw InputError("fibration needs a nonempty Fine interior");
  const Polytope& p = data.input;
  const Polytope& f = *data.fine;
  const std::size_t d = p.ambient_dim();
  if (f.affine_dim() == static_cast<int>(d)) throw InputError("no fibration: F(P) is full-dimensional");

  FibrationData out;
  std::vector<LatticeVector> dirs;
  for (std::size_t i = 1; i < f.vertices().size(); ++i) dirs.push_back(clear_denominators(sub(f.vertices()[i], f.vertices()[0])));
  out.nf_basis = integer_kernel(dirs, d);
  out.mf_basis = integer_kernel(out.nf_basis, d);
  out.projection = IntegerMatrix::from_rows(out.nf_basis, d);
  out.pf = project(p, out.projection);
  for (const auto& n : out.nf_basis) out.fine_image.push_back(dot(f.vertices().front(), n));

  FineInteriorData pf_data = compute_fine_interior_data(out.pf);
  out.pf_fine = pf_data.fine;
  out.check_a = pf_data.fine && pf_data.fine->vertices().size() == 1 && pf_data.fine->vertices().front() == out.fine_image;

  for (const auto& nu : data.support)
    if (auto c = coordinates(out.nf_basis, nu)) out.support_in_nf.push_back(std::move(*c));
  std::sort(out.support_in_nf.begin(), out.support_in_nf.end());
  out.check_b = pf_data.fine && pf_data.support == out.support_in_nf;

  if (!out.support_in_nf.empty()) {
    out.phif = Polytope::from_lattice_points(out.support_in_nf);
    out.check_c = out.phif.full_dimensional();
    if (out.check_c) {
      std::vector<LatticeVector> inner = interior_lattice_points(out.phif);
      out.check_c = inner.size() == 1 && is_zero(inner.front());
    }
  }
  return out;
}

bool AnalysisReport::operator==(const AnalysisReport& o) const {
  auto same_surface = [](const std::optional<SurfaceInvariants>& a, const std::optional<SurfaceInvariants>& b) {
    if (a.has_value() != b.has_value()) return false;
    return !a || (a->c1sq == b->c1sq && a->chi == b->chi && a->c2 == b->c2);
  };
  auto same_flags = [](const ClosednessFlags& a, const ClosednessFlags& b) {
    return a.no_fine_interior == b.no_fine_interior && a.canonically_closed == b.canonically_closed &&
           a.integrally_closed == b.integrally_closed && a.reflexive == b.reflexive &&
           a.almost_reflexive == b.almost_reflexive && a.pseudoreflexive == b.pseudoreflexive;
  };
  return name == o.name && input_hash == o.input_hash && input_vertices == o.input_vertices && dim == o.dim &&
         fine_dim == o.fine_dim && fine_vertices == o.fine_vertices && support == o.support &&
         hull_vertices == o.hull_vertices && hull_extra_vertices == o.hull_extra_vertices &&
         same_flags(flags, o.flags) && kodaira == o.kodaira && canonical_degree == o.canonical_degree &&
         same_surface(surface, o.surface) && fibration == o.fibration && codim2_ok == o.codim2_ok &&
         lambda0 == o.lambda0 && lambda_closed_interval == o.lambda_closed_interval;
}

std::string polytope_hash(const Polytope& p) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  auto feed = [&](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 0x100000001b3ull;
    }
  };
  feed(std::to_string(p.ambient_dim()));
  for (const auto& v : p.vertices()) feed(to_string(v));
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

AnalysisReport analyze(const Polytope& p, const std::string& name, const AnalyzeOptions& options) {
  if (!p.full_dimensional()) throw InputError("analysis needs a full-dimensional polytope");
  AnalysisReport r;
  r.name = name;
  r.input_hash = polytope_hash(p);
  r.input_vertices = p.vertices();
  r.dim = p.ambient_dim();

  FineInteriorData data = compute_fine_interior_data(p);
  r.fine_dim = data.fine_dim();
  r.flags = closedness_flags(data);
  r.kodaira = kodaira_dimension(data);
  r.lambda0 = lambda_min(p);
  if (!data.empty()) {
    r.fine_vertices = data.fine->vertices();
    r.support = data.support;
    r.hull_vertices = data.canonical_hull->vertices();
    for (const auto& v : r.hull_vertices)
      if (!std::binary_search(p.vertices().begin(), p.vertices().end(), v)) r.hull_extra_vertices.push_back(v);
    r.canonical_degree = canonical_degree(data);
    if (r.dim == 3) r.surface = surface_invariants(data);
    if (r.fine_dim < static_cast<int>(r.dim)) {
      FibrationData fib = fibration_data(data);
      AnalysisReport::Fibration s;
      s.nf_basis = fib.nf_basis;
      s.pf_vertices = fib.pf.vertices();
      s.phif_vertices = fib.phif.vertices();
      s.check_a = fib.check_a;
      s.check_b = fib.check_b;
      s.check_c = fib.check_c;
      r.fibration = std::move(s);
    }
    // the codimension-2 certificate is only guaranteed for lattice inputs
    if (p.is_lattice()) r.codim2_ok = canonical_model(data).codim2_ok;
  }
  if (options.thresholds) r.lambda_closed_interval = lambda_closed(p, options.precision);
  return r;
}

}  // namespace finepoly
