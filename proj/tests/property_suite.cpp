#include "property_suite.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>

#include "finepoly/canonical_model.hpp"
#include "finepoly/invariants.hpp"
#include "finepoly/matrix.hpp"
#include "support.hpp"

namespace testing {

namespace {

struct Context {
  PropertyReport& report;
  std::string name;

  // Runs one check; exceptions count as failures.
  void check(const std::string& property, const std::function<std::string()>& body) {
    ++report.checked[property];
    std::string problem;
    auto start = std::chrono::steady_clock::now();
    try {
      problem = body();
    } catch (const std::exception& e) {
      problem = std::string("exception: ") + e.what();
    }
    report.seconds[property] += std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!problem.empty()) report.failures.push_back({property, name, problem});
  }
};

std::string show(const std::optional<Polytope>& p) { return p ? describe(*p) : std::string("empty"); }

bool same(const std::optional<Polytope>& a, const std::optional<Polytope>& b) {
  return a.has_value() == b.has_value() && (!a || *a == *b);
}

// Lattice coordinates of a facet: x -> coefficients in a Z-basis of the
// direction lattice of the facet hyperplane.
Polytope facet_in_own_lattice(const Polytope& p, const HalfSpace& h) {
  const std::size_t d = p.ambient_dim();
  std::vector<RationalVector> on;
  for (const auto& v : p.vertices())
    if (dot(v, h.normal) == h.offset) on.push_back(v);
  std::vector<LatticeVector> normal_row{h.normal};
  std::vector<LatticeVector> basis = integer_kernel(normal_row, d);
  std::vector<RationalVector> a(d, RationalVector(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j + 1 < d; ++j) a[i][j] = Rational(basis[j][i]);
    a[i][d - 1] = Rational(h.normal[i]);
  }
  std::vector<RationalVector> pts;
  for (const auto& v : on) {
    RationalVector y = solve(a, sub(v, on.front()));
    y.pop_back();
    pts.push_back(y);
  }
  return Polytope::from_vertices(pts);
}

std::vector<LatticeVector> embed_support(const std::vector<LatticeVector>& s, std::size_t offset, std::size_t d) {
  std::vector<LatticeVector> out;
  for (const auto& nu : s) {
    LatticeVector e(d, Integer(0));
    for (std::size_t i = 0; i < nu.size(); ++i) e[offset + i] = nu[i];
    out.push_back(e);
  }
  return out;
}

void check_polytope(PropertyReport& report, const std::string& name, const Polytope& p, std::mt19937_64& rng,
                    const Polytope* partner) {
  Context ctx{report, name + " " + describe(p)};
  const std::size_t d = p.ambient_dim();
  FineInteriorData data = compute_fine_interior_data(p);
  const bool lattice = p.is_lattice();

  ctx.check("shift equivariance", [&]() -> std::string {
    std::uniform_int_distribution<long> c(-3, 3), den(1, 3);
    RationalVector x;
    for (std::size_t i = 0; i < d; ++i) x.push_back(Rational(c(rng), den(rng)));
    for (auto& q : x) q.canonicalize();
    std::optional<Polytope> lhs = fine_interior(translate(p, x));
    std::optional<Polytope> rhs;
    if (data.fine) rhs = translate(*data.fine, x);
    if (!same(lhs, rhs)) return "F(P+x) = " + show(lhs) + " but F(P)+x = " + show(rhs) + " for x = " + to_string(x);
    return {};
  });

  ctx.check("monotonicity", [&]() -> std::string {
    std::uniform_int_distribution<long> c(-5, 5);
    std::vector<RationalVector> pts = p.vertices();
    RationalVector extra;
    for (std::size_t i = 0; i < d; ++i) extra.emplace_back(c(rng));
    pts.push_back(extra);
    Polytope bigger = Polytope::from_vertices(pts);
    std::optional<Polytope> f2 = fine_interior(bigger);
    if (!data.fine) return {};
    if (!f2 || !f2->contains(*data.fine)) return "F(P) = " + show(data.fine) + " not inside F(P') = " + show(f2);
    return {};
  });

  if (d == 2 && lattice) {
    ctx.check("2D interior rule", [&]() -> std::string {
      std::vector<LatticeVector> inner = brute_interior_points(p);
      std::optional<Polytope> expect;
      if (!inner.empty()) expect = Polytope::from_lattice_points(inner);
      if (!same(data.fine, expect)) return "F(P) = " + show(data.fine) + ", Conv(P° ∩ M) = " + show(expect);
      return {};
    });
  }

  ctx.check("oracle at candidate radius", [&]() -> std::string {
    std::optional<Polytope> o = oracle_fine_interior(p, candidate_radius(p));
    if (!same(o, data.fine)) return "oracle " + show(o) + " vs " + show(data.fine);
    return {};
  });

  // the facet criterion presupposes F(P) nonempty
  if (lattice && data.fine) {
    for (const auto& h : p.halfspaces()) {
      ctx.check("facet criterion", [&]() -> std::string {
        Polytope q = facet_in_own_lattice(p, h);
        if (!q.full_dimensional()) return "facet has wrong dimension";
        if (!fine_interior(q)) return {};
        if (!std::binary_search(data.support.begin(), data.support.end(), h.normal))
          return "facet normal " + to_string(h.normal) + " has F(Q) nonempty but is not in S_F(P)";
        return {};
      });
    }
  }

  if (data.empty()) return;
  const Polytope& f = *data.fine;
  const Polytope& c = *data.canonical_hull;

  ctx.check("support matches brute force", [&]() -> std::string {
    long radius = 0;
    for (const auto& nu : data.candidates)
      for (const auto& x : nu) radius = std::max(radius, Integer(abs(x)).get_si());
    if (radius > 12) return {};  // the box scan is cubic in the radius
    std::vector<LatticeVector> brute = brute_support(p, f, radius);
    if (brute != data.support) return "brute-force S_F has " + std::to_string(brute.size()) + " elements";
    return {};
  });

  ctx.check("C(C(P)) = C(P), F(C(P)) = F(P), S_F(C(P)) = S_F(P)", [&]() -> std::string {
    FineInteriorData cd = compute_fine_interior_data(c);
    if (!cd.fine || !(*cd.fine == f)) return "F(C(P)) = " + show(cd.fine);
    if (cd.support != data.support) return "S_F(C(P)) differs";
    if (!(*cd.canonical_hull == c)) return "C(C(P)) = " + describe(*cd.canonical_hull);
    return {};
  });

  ctx.check("C(P) contains P", [&]() -> std::string { return c.contains(p) ? "" : "C(P) misses P"; });

  if (partner) {
    ctx.check("product formula", [&]() -> std::string {
      std::optional<Polytope> fq = fine_interior(*partner);
      if (!fq) return {};
      Polytope prod = product(p, *partner);
      FineInteriorData pd = compute_fine_interior_data(prod);
      Polytope expect = product(f, *fq);
      if (!pd.fine || !(*pd.fine == expect)) return "F(P x Q) = " + show(pd.fine) + ", expected " + describe(expect);
      std::vector<LatticeVector> s = embed_support(data.support, 0, d + partner->ambient_dim());
      std::vector<LatticeVector> t = embed_support(support_set(*partner, *fq), d, d + partner->ambient_dim());
      s.insert(s.end(), t.begin(), t.end());
      std::sort(s.begin(), s.end());
      if (s != pd.support) return "S_F(P x Q) is not the embedded union";
      return {};
    });
  }

  const bool closed = canonically_closed(p);
  if (closed) {
    ctx.check("F(2P) = F(P) + P", [&]() -> std::string {
      std::optional<Polytope> lhs = fine_interior(dilate(p, Rational(2)));
      Polytope rhs = minkowski_sum(f, p);
      if (!lhs || !(*lhs == rhs)) return "F(2P) = " + show(lhs) + ", F(P)+P = " + describe(rhs);
      return {};
    });
  }

  if (lattice) {
    ctx.check("kP canonically closed for k = d", [&]() -> std::string {
      return canonically_closed(dilate(p, Rational(static_cast<long>(d)))) ? "" : "dP is not canonically closed";
    });
  }

  CanonicalModelData model = canonical_model(data);

  ctx.check("tilde rays inside S_F", [&]() -> std::string {
    return model.tilde_rays_in_support ? "" : "a ray of the fan of C(P)+F(P) is not in S_F(P)";
  });

  ctx.check("discrepancy nonnegative", [&]() -> std::string {
    for (std::size_t k = 0; k < model.hat.fan.cones().size(); ++k) {
      std::vector<LatticeVector> gens = model.hat.fan.cone_rays(k);
      gens.push_back(LatticeVector(d, Integer(0)));
      for (const auto& nu : lattice_points(Polytope::from_lattice_points(gens))) {
        if (is_zero(nu)) continue;
        Rational a = discrepancy(data, nu);
        bool in_support = std::binary_search(data.support.begin(), data.support.end(), nu);
        if (a < 0) return "a(" + to_string(nu) + ") = " + to_string(a);
        if ((a == 0) != in_support) return "a(" + to_string(nu) + ") = 0 disagrees with S_F membership";
      }
    }
    std::uniform_int_distribution<long> c3(-3, 3);
    for (int i = 0; i < 20; ++i) {
      LatticeVector nu;
      for (std::size_t j = 0; j < d; ++j) nu.emplace_back(c3(rng));
      if (is_zero(nu)) continue;
      if (discrepancy(data, nu) < 0) return "a(" + to_string(nu) + ") < 0";
    }
    return {};
  });

  // the codimension-2 statement is about lattice polytopes
  if (lattice) ctx.check("codimension-2 certificate", [&]() -> std::string {
    for (const auto& e : model.codim2)
      if (!e.ok())
        return "2-cone " + to_string(e.nu_i) + "," + to_string(e.nu_j) + (e.meets_fine_interior ? "" : " misses F(P)") +
               (e.contains_vertex ? "" : " has no vertex of P");
    return {};
  });

  ctx.check("C(P) + F(P) = F(2C(P))", [&]() -> std::string {
    Polytope lhs = minkowski_sum(c, f);
    std::optional<Polytope> rhs = fine_interior(dilate(c, Rational(2)));
    if (!rhs || !(*rhs == lhs)) return "F(2C(P)) = " + show(rhs) + ", C(P)+F(P) = " + describe(lhs);
    return {};
  });

  ctx.check("crepant simplicial refinement", [&]() -> std::string {
    const CrepantRefinement& h = model.hat;
    if (!h.simplicial) return "not simplicial";
    if (!h.complete) return "not complete";
    if (!h.rays_equal_support) return "rays differ from S_F(P)";
    if (!h.terminal) return "terminality certificate fails";
    if (!refines(h.fan, model.tilde)) return "does not refine the fan of C(P)+F(P)";
    return {};
  });

  ctx.check("coneswise Fine interior", [&]() -> std::string {
    std::optional<Polytope> cw = coneswise_fine_interior(p);
    return same(cw, data.fine) ? "" : "intersection of p_sigma + Theta* is " + show(cw);
  });

  if (d == 2) {
    ctx.check("2D index rule", [&]() -> std::string { return koelman_check(data, model.tilde) ? "" : "fails"; });
  }

  if (data.fine_dim() < static_cast<int>(d)) {
    ctx.check("fibration (a)-(c)", [&]() -> std::string {
      FibrationData fib = fibration_data(data);
      if (!fib.check_a) return "F(P^F) is not the image of F(P)";
      if (!fib.check_b) return "S_F(P^F) differs from N^F ∩ S_F(P)";
      if (!fib.check_c) return "Phi^F is not canonical Fano";
      return {};
    });
  }
}

}  // namespace

PropertyReport run_property_suite(int per_dim, std::uint64_t seed, bool include_examples) {
  PropertyReport report;
  std::mt19937_64 rng(seed);
  if (include_examples) {
    for (const auto& ex : worked_examples(false)) {
      check_polytope(report, ex.name, ex.p, rng, nullptr);
      ++report.polytopes;
    }
  }
  for (std::size_t d : {std::size_t{2}, std::size_t{3}}) {
    std::vector<Polytope> ps;
    for (int i = 0; i < per_dim; ++i) ps.push_back(random_lattice_polytope(rng, d, -4, 4));
    for (int i = 0; i < per_dim; ++i) {
      // 2D polytopes are paired with their successor for the product check
      const Polytope* partner = (d == 2 && i + 1 < per_dim) ? &ps[static_cast<std::size_t>(i + 1)] : nullptr;
      check_polytope(report, "random d=" + std::to_string(d) + " #" + std::to_string(i), ps[static_cast<std::size_t>(i)],
                     rng, partner);
      ++report.polytopes;
    }
  }
  return report;
}

}  // namespace testing
