#include "support.hpp"

#include <algorithm>

#include "finepoly/matrix.hpp"

namespace testing {

LatticeVector lv(std::initializer_list<long> xs) {
  LatticeVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

RationalVector rv(std::initializer_list<const char*> xs) {
  RationalVector v;
  for (const char* x : xs) v.push_back(parse_rational(x));
  return v;
}

RationalVector rv(std::initializer_list<long> xs) {
  RationalVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

std::vector<LatticeVector> lattice_list(std::initializer_list<std::initializer_list<long>> pts) {
  std::vector<LatticeVector> out;
  for (auto p : pts) out.push_back(lv(p));
  return out;
}

std::vector<RationalVector> rational_list(std::initializer_list<std::initializer_list<const char*>> pts) {
  std::vector<RationalVector> out;
  for (auto p : pts) out.push_back(rv(p));
  return out;
}

Polytope lattice_polytope(std::initializer_list<std::initializer_list<long>> pts) {
  return Polytope::from_lattice_points(lattice_list(pts));
}

Polytope parallelepiped() {
  return lattice_polytope(
      {{0, 0, 0}, {-1, 1, 1}, {1, -1, 1}, {1, 1, -1}, {0, 0, 2}, {2, 0, 0}, {0, 2, 0}, {1, 1, 1}});
}

Polytope five_dim() {
  std::vector<HalfSpace> hs;
  for (int i = 0; i < 5; ++i) {
    LatticeVector e(5, Integer(0));
    e[i] = 1;
    hs.push_back({e, Rational(0)});
  }
  hs.push_back({lv({-1, -1, -1, -1, -2}), Rational(-7)});
  hs.push_back({lv({0, 0, 0, 0, -1}), Rational(-3)});
  return Polytope::from_halfspaces(hs, 5);
}

Polytope simplex_not_closed() { return lattice_polytope({{-1, -1, -1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}}); }

Polytope rational_triangle() { return Polytope::from_vertices({rv({"-1", "0"}), rv({"0", "3/2"}), rv({"4", "-5/2"})}); }

Polytope elliptic_simplex() { return lattice_polytope({{0, 0, 0}, {3, 0, 0}, {1, 3, 0}, {2, 0, 3}}); }

Polytope four_dim() {
  return lattice_polytope({{0, 0, 0, 0},
                           {1, 1, 1, 1},
                           {2, 0, 0, 0},
                           {0, 2, 0, 0},
                           {0, 0, 2, 0},
                           {0, 0, 0, 2},
                           {-1, 1, 1, 1},
                           {1, -1, 1, 1},
                           {1, 1, -1, 1},
                           {1, 1, 1, -1}});
}

Polytope standard_simplex(std::size_t d, long k) {
  std::vector<LatticeVector> pts{LatticeVector(d, Integer(0))};
  for (std::size_t i = 0; i < d; ++i) {
    LatticeVector e(d, Integer(0));
    e[i] = k;
    pts.push_back(e);
  }
  return Polytope::from_lattice_points(pts);
}

Polytope unit_cube(std::size_t d) {
  std::vector<LatticeVector> pts;
  for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
    LatticeVector v;
    for (std::size_t i = 0; i < d; ++i) v.emplace_back((mask >> i) & 1);
    pts.push_back(v);
  }
  return Polytope::from_lattice_points(pts);
}

Polytope diamond() { return lattice_polytope({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}); }

std::vector<NamedPolytope> worked_examples(bool large) {
  std::vector<NamedPolytope> out{
      {"parallelepiped", parallelepiped()},
      {"simplex-not-closed", simplex_not_closed()},
      {"rational-triangle", rational_triangle()},
      {"elliptic-simplex", elliptic_simplex()},
      {"3-simplex-2d", standard_simplex(2, 3)},
      {"4-simplex-3d", standard_simplex(3, 4)},
      {"5-simplex-3d", standard_simplex(3, 5)},
      {"genus-two", lattice_polytope({{0, 0}, {6, 0}, {0, 2}})},
      {"diamond", diamond()},
      {"unit-cube", unit_cube(3)},
  };
  if (large) {
    out.push_back({"four-dimensional", four_dim()});
    out.push_back({"five-dimensional", five_dim()});
  }
  return out;
}

Polytope random_lattice_polytope(std::mt19937_64& rng, std::size_t d, long lo, long hi) {
  std::uniform_int_distribution<long> coord(lo, hi);
  std::uniform_int_distribution<std::size_t> count(d + 1, d + 5);
  while (true) {
    std::vector<LatticeVector> pts(count(rng));
    for (auto& p : pts)
      for (std::size_t i = 0; i < d; ++i) p.emplace_back(coord(rng));
    Polytope p = Polytope::from_lattice_points(pts);
    if (p.full_dimensional()) return p;
  }
}

IntegerMatrix random_unimodular(std::mt19937_64& rng, std::size_t d) {
  IntegerMatrix u = IntegerMatrix::identity(d);
  std::uniform_int_distribution<std::size_t> pick(0, d - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int step = 0; step < 4 * static_cast<int>(d); ++step) {
    std::size_t a = pick(rng), b = pick(rng);
    if (a == b) continue;
    int c = coef(rng);
    for (std::size_t j = 0; j < d; ++j) u(a, j) += c * u(b, j);
  }
  if (coef(rng) < 0) u.swap_rows(0, d - 1);
  return u;
}

Polytope transform(const Polytope& p, const IntegerMatrix& u) {
  std::vector<RationalVector> pts;
  for (const auto& v : p.vertices()) {
    RationalVector w(u.rows(), Rational(0));
    for (std::size_t i = 0; i < u.rows(); ++i)
      for (std::size_t j = 0; j < u.cols(); ++j) w[i] += Rational(u(i, j)) * v[j];
    pts.push_back(w);
  }
  return Polytope::from_vertices(pts);
}

namespace {

template <class Keep>
std::vector<LatticeVector> scan_box(const Polytope& p, Keep keep) {
  const std::size_t d = p.ambient_dim();
  LatticeVector lo(d), hi(d);
  for (std::size_t i = 0; i < d; ++i) {
    Rational mn = p.vertices().front()[i], mx = mn;
    for (const auto& v : p.vertices()) {
      mn = std::min(mn, v[i]);
      mx = std::max(mx, v[i]);
    }
    lo[i] = ceil_to_integer(mn);
    hi[i] = floor_to_integer(mx);
    if (lo[i] > hi[i]) return {};
  }
  std::vector<LatticeVector> out;
  LatticeVector x = lo;
  while (true) {
    if (keep(x)) out.push_back(x);
    std::size_t i = d;
    while (i > 0) {
      --i;
      if (x[i] < hi[i]) {
        ++x[i];
        for (std::size_t j = i + 1; j < d; ++j) x[j] = lo[j];
        break;
      }
      if (i == 0) return out;
    }
  }
}

}  // namespace

std::vector<LatticeVector> brute_lattice_points(const Polytope& p) {
  return scan_box(p, [&](const LatticeVector& x) { return p.contains(to_rational(x)); });
}

std::vector<LatticeVector> brute_interior_points(const Polytope& p) {
  return scan_box(p, [&](const LatticeVector& x) {
    RationalVector q = to_rational(x);
    for (const auto& h : p.halfspaces())
      if (dot(q, h.normal) <= h.offset) return false;
    return true;
  });
}

std::vector<LatticeVector> brute_support(const Polytope& p, const Polytope& fine, long radius) {
  const std::size_t d = p.ambient_dim();
  auto min_over = [](const std::vector<RationalVector>& pts, const LatticeVector& nu) {
    Rational m = dot(pts.front(), nu);
    for (const auto& x : pts) m = std::min(m, dot(x, nu));
    return m;
  };
  std::vector<LatticeVector> out;
  LatticeVector nu(d, Integer(-radius));
  while (true) {
    if (!is_zero(nu) && min_over(fine.vertices(), nu) == min_over(p.vertices(), nu) + 1) out.push_back(nu);
    std::size_t i = d;
    bool done = true;
    while (i > 0) {
      --i;
      if (nu[i] < radius) {
        ++nu[i];
        for (std::size_t j = i + 1; j < d; ++j) nu[j] = -radius;
        done = false;
        break;
      }
    }
    if (done) return out;
  }
}

Integer pick_area2(const Polytope& polygon) {
  const auto all = brute_lattice_points(polygon).size();
  const auto inner = brute_interior_points(polygon).size();
  const auto boundary = all - inner;
  return Integer(static_cast<unsigned long>(2 * inner + boundary)) - 2;
}

std::string describe(const Polytope& p) {
  std::string s = "Conv{";
  for (std::size_t i = 0; i < p.vertices().size(); ++i) s += (i ? " " : "") + to_string(p.vertices()[i]);
  return s + "}";
}

}  // namespace testing
