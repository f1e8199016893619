#include <doctest.h>

#include <random>

#include "finepoly/fine_interior.hpp"
#include "support.hpp"

using namespace finepoly;
using testing::lattice_list;
using testing::lattice_polytope;
using testing::lv;
using testing::rational_list;
using testing::rv;

namespace {

std::vector<LatticeVector> sorted(std::vector<LatticeVector> v) {
  std::sort(v.begin(), v.end());
  return v;
}

Polytope vpoly(std::vector<RationalVector> pts) { return Polytope::from_vertices(std::move(pts)); }

const Polytope& parallelepiped() {
  static const Polytope p = testing::parallelepiped();
  return p;
}

}  // namespace

TEST_SUITE("fine_interior") {
  TEST_CASE("candidates") {
    CHECK(candidate_normals(testing::unit_cube(2)) == lattice_list({{-1, 0}, {0, -1}, {0, 1}, {1, 0}}));
    CHECK(candidate_normals(testing::standard_simplex(2)) == lattice_list({{-1, -1}, {0, 1}, {1, 0}}));
    auto c = candidate_normals(testing::four_dim());
    for (const auto& n : facet_normals(testing::four_dim()))
      CHECK(std::binary_search(c.begin(), c.end(), n));
  }

  TEST_CASE("parallelepiped") {
    auto f = fine_interior(parallelepiped());
    REQUIRE(f);
    CHECK(f->vertices() == rational_list({{"1/2", "1/2", "1/2"}}));
    CHECK(support_set(parallelepiped(), *f) ==
          sorted(lattice_list({{0, 1, 1}, {0, -1, -1}, {1, 0, 1}, {-1, 0, -1}, {1, 1, 0}, {-1, -1, 0}})));
    CHECK(delta(parallelepiped(), lv({1, 1, 0})) == 1);
    CHECK(delta(parallelepiped(), lv({1, 0, 0})) == Rational(3, 2));
    CHECK(delta(parallelepiped(), lv({0, 0, 0})) == 0);
  }

  TEST_CASE("five-dimensional example") {
    Polytope p = testing::five_dim();
    CHECK(p.halfspaces().size() == 7);
    CHECK(std::binary_search(p.vertices().begin(), p.vertices().end(), rv({0, 0, 0, 0, 3})));
    CHECK(support_value(p, lv({-1, -1, -1, -1, -2})) == -7);
    FineInteriorData d = compute_fine_interior_data(p);
    REQUIRE(d.fine);
    CHECK(d.fine->vertices() == rational_list({{"1", "1", "1", "1", "1"}}));
    CHECK(d.support == sorted(lattice_list({{1, 0, 0, 0, 0},
                                            {0, 1, 0, 0, 0},
                                            {0, 0, 1, 0, 0},
                                            {0, 0, 0, 1, 0},
                                            {0, 0, 0, 0, 1},
                                            {-1, -1, -1, -1, -2}})));
    CHECK_FALSE(std::binary_search(d.support.begin(), d.support.end(), lv({0, 0, 0, 0, -1})));
    REQUIRE(d.canonical_hull);
    CHECK(d.canonical_hull->vertices().size() == 6);
    CHECK(std::binary_search(d.canonical_hull->vertices().begin(), d.canonical_hull->vertices().end(),
                             rv({"0", "0", "0", "0", "7/2"})));
    CHECK_FALSE(closedness_flags(d).canonically_closed);
  }

  TEST_CASE("simplex that is not canonically closed") {
    Polytope p = testing::simplex_not_closed();
    FineInteriorData d = compute_fine_interior_data(p);
    REQUIRE(d.fine);
    CHECK(d.fine->vertices() == rational_list({{"0", "0", "0"}}));
    Polytope expected = lattice_polytope({{-1, -1, -1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}});
    CHECK(*d.canonical_hull == expected);
    ClosednessFlags f = closedness_flags(d);
    CHECK_FALSE(f.canonically_closed);
    CHECK_FALSE(f.reflexive);
    CHECK(f.almost_reflexive);
    CHECK(closedness_flags(expected).reflexive);
  }

  TEST_CASE("rational triangle") {
    Polytope p = testing::rational_triangle();
    FineInteriorData d = compute_fine_interior_data(p);
    REQUIRE(d.fine);
    CHECK(*d.fine == vpoly(rational_list({{"0", "0"}, {"0", "1/2"}, {"1", "-1/2"}})));
    CHECK(d.canonical_hull->vertices().size() == 4);
    CHECK(std::binary_search(d.canonical_hull->vertices().begin(), d.canonical_hull->vertices().end(),
                             rv({"-1", "1/2"})));
  }

  TEST_CASE("elliptic simplex") {
    FineInteriorData d = compute_fine_interior_data(testing::elliptic_simplex());
    REQUIRE(d.fine);
    CHECK(*d.fine == vpoly(rational_list({{"4/3", "1", "1"}, {"5/3", "1", "1"}})));
    CHECK(d.support == sorted(lattice_list({{0, 1, 0}, {0, 0, 1}, {0, -1, -1}, {3, -1, -2}, {-3, -2, -1}})));
  }

  TEST_CASE("four-dimensional example") {
    auto f = fine_interior(testing::four_dim());
    REQUIRE(f);
    CHECK(f->vertices() == rational_list({{"1/2", "1/2", "1/2", "1/2"}}));
    CHECK(lattice_points(*f).empty());
  }

  TEST_CASE("empty Fine interiors") {
    CHECK_FALSE(fine_interior(testing::unit_cube(3)));
    CHECK_FALSE(fine_interior(testing::standard_simplex(3)));
    FineInteriorData d = compute_fine_interior_data(testing::unit_cube(2));
    CHECK(d.empty());
    CHECK(d.fine_dim() == -1);
    CHECK(d.support.empty());
    ClosednessFlags f = closedness_flags(d);
    CHECK(f.no_fine_interior);
    CHECK_FALSE(f.canonically_closed);
    CHECK_FALSE(f.reflexive);
    CHECK_THROWS_AS(canonical_hull(testing::unit_cube(2)), InputError);
  }

  TEST_CASE("two-dimensional interior rule") {
    auto f = fine_interior(dilate(testing::unit_cube(2), Rational(3)));
    REQUIRE(f);
    CHECK(*f == lattice_polytope({{1, 1}, {1, 2}, {2, 1}, {2, 2}}));
    auto g = fine_interior(lattice_polytope({{0, 0}, {6, 0}, {0, 2}}));
    REQUIRE(g);
    CHECK(*g == lattice_polytope({{1, 1}, {2, 1}}));
  }

  TEST_CASE("flags") {
    ClosednessFlags d = closedness_flags(testing::diamond());
    CHECK(d.reflexive);
    CHECK(d.canonically_closed);
    CHECK(d.integrally_closed);
    // reflexivity is taken literally: F(P) = {0}
    CHECK_FALSE(closedness_flags(testing::standard_simplex(3, 4)).reflexive);
    CHECK(closedness_flags(translate(testing::standard_simplex(3, 4), rv({-1, -1, -1}))).reflexive);
    ClosednessFlags par = closedness_flags(parallelepiped());
    CHECK(par.canonically_closed);
    CHECK_FALSE(par.reflexive);
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 20; ++trial) {
      Polytope p = testing::random_lattice_polytope(rng, 2, -4, 4);
      if (interior_lattice_points(p).empty()) continue;
      CHECK(canonically_closed(p));
    }
  }

  TEST_CASE("lambda thresholds") {
    CHECK(lambda_min(testing::unit_cube(3)) == 2);
    CHECK(lambda_min(testing::standard_simplex(2)) == 3);
    CHECK(lambda_min(testing::standard_simplex(3)) == 4);
    CHECK(lambda_min(parallelepiped()) <= 1);
    auto [lo, hi] = lambda_closed(testing::unit_cube(3), Rational(1, 64));
    CHECK(lo <= 2);
    CHECK(2 <= hi);
    CHECK(hi - lo <= Rational(1, 64));
    auto [rlo, rhi] = lambda_closed(testing::diamond(), Rational(1, 64));
    CHECK(rhi - rlo <= Rational(1, 64));
    CHECK(rhi <= 1);
    CHECK(canonically_closed(testing::diamond()));
    CHECK_FALSE(canonically_closed(testing::simplex_not_closed()));
  }

  TEST_CASE("oracle") {
    auto o = oracle_fine_interior(parallelepiped(), 2);
    REQUIRE(o);
    CHECK(*o == *fine_interior(parallelepiped()));
    auto sq = oracle_fine_interior(dilate(testing::unit_cube(2), Rational(3)), 3);
    REQUIRE(sq);
    CHECK(*sq == lattice_polytope({{1, 1}, {1, 2}, {2, 1}, {2, 2}}));
    // radius 1 misses the essential normals of norm 3 and can only be larger
    Polytope e = testing::elliptic_simplex();
    auto small = oracle_fine_interior(e, 1);
    REQUIRE(small);
    CHECK(small->contains(*fine_interior(e)));
    CHECK(*oracle_fine_interior(e, candidate_radius(e)) == *fine_interior(e));
  }

  TEST_CASE("delta function") {
    Polytope e = testing::elliptic_simplex();
    auto f = fine_interior(e);
    REQUIRE(f);
    DeltaFunction dp(e, *f);
    for (const auto& nu : support_set(e, *f)) {
      CHECK(dp(nu) == 1);
      CHECK(dp.in_delta_region(nu));
    }
    // delta is positively homogeneous and at least 1 away from the origin
    for (const auto& nu : lattice_list({{1, 0, 0}, {1, 1, 1}, {-2, 1, 3}})) {
      CHECK(dp(nu) >= 1);
      CHECK(dp(testing::lv({0, 0, 0})) == 0);
      LatticeVector twice = add(nu, nu);
      CHECK(dp(twice) == 2 * dp(nu));
    }
  }
}
