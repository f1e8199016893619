#pragma once

// Shared helpers for the test binaries: literal polytopes, the worked
// examples, random generators and brute-force oracles that avoid the code
// paths they check.

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "finepoly/fan.hpp"
#include "finepoly/fine_interior.hpp"
#include "finepoly/polytope.hpp"

namespace testing {

using namespace finepoly;

LatticeVector lv(std::initializer_list<long> xs);
RationalVector rv(std::initializer_list<const char*> xs);
RationalVector rv(std::initializer_list<long> xs);
Polytope lattice_polytope(std::initializer_list<std::initializer_list<long>> pts);
std::vector<LatticeVector> lattice_list(std::initializer_list<std::initializer_list<long>> pts);
std::vector<RationalVector> rational_list(std::initializer_list<std::initializer_list<const char*>> pts);

struct NamedPolytope {
  std::string name;
  Polytope p;
};

Polytope parallelepiped();
Polytope five_dim();                // x_i >= 0, x1+..+x4+2x5 <= 7, x5 <= 3
Polytope simplex_not_closed();      // Conv(-1-1-1, 110, 101, 011)
Polytope rational_triangle();       // (-1,0), (0,3/2), (4,-5/2)
Polytope elliptic_simplex();        // Conv(000, 300, 130, 203)
Polytope four_dim();                // ten vertices, F = {(1/2,...)}
Polytope standard_simplex(std::size_t d, long k = 1);
Polytope unit_cube(std::size_t d);
Polytope diamond();                 // Conv(+-e1, +-e2)

/// The worked examples of dimension <= 3 plus the 4D and 5D ones when
/// `large` is set.
std::vector<NamedPolytope> worked_examples(bool large);

/// Full-dimensional lattice polytope with d+1..d+5 random points in
/// [lo, hi]^d.
Polytope random_lattice_polytope(std::mt19937_64& rng, std::size_t d, long lo, long hi);

/// Unimodular matrix product of random elementary moves.
IntegerMatrix random_unimodular(std::mt19937_64& rng, std::size_t d);
Polytope transform(const Polytope& p, const IntegerMatrix& u);

// Brute-force oracles.

/// Integer points of P found by scanning the bounding box with contains().
std::vector<LatticeVector> brute_lattice_points(const Polytope& p);

/// Integer points x with <x, a> > b for every facet (strict).
std::vector<LatticeVector> brute_interior_points(const Polytope& p);

/// Nonzero nu, |nu|_inf <= radius, with min_F <.,nu> = min_P <.,nu> + 1,
/// evaluated on vertex lists only.
std::vector<LatticeVector> brute_support(const Polytope& p, const Polytope& fine, long radius);

/// Normalized area (twice the Euclidean area) of a lattice polygon from
/// Pick's formula and brute-force point counts.
Integer pick_area2(const Polytope& polygon);

std::string describe(const Polytope& p);

}  // namespace testing
