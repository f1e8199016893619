#pragma once

// Hot loops of the geometry code: pairing minima over point sets, ranked
// violation scans over candidate normals, and lattice-point enumeration in
// a box. The entry points in namespace finepoly take exact data, run the
// fixed-width OpenMP kernels when every intermediate provably fits in
// 128 bits, and fall back to the serial GMP reference otherwise.
//
// The reference versions in namespace finepoly::reference are kept callable
// for tests and the benchmark.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "finepoly/exact.hpp"

namespace finepoly {

/// Rows a_i with offsets b_i, meaning <x, a_i> >= b_i.
struct IntegerInequalities {
  std::vector<LatticeVector> normals;
  std::vector<Integer> offsets;
};

/// min over points of <x, nu>, one value per normal.
std::vector<Rational> min_pairings(std::span<const RationalVector> points, std::span<const LatticeVector> normals);

/// Indices of normals with min_x <x, nu_i> < threshold_i, ranked by the
/// size of the violation (largest first, then by index); at most `limit`.
std::vector<std::size_t> most_violated(std::span<const RationalVector> points,
                                       std::span<const LatticeVector> normals,
                                       std::span<const Rational> thresholds, std::size_t limit);

/// Integer points of the box [lo, hi] satisfying every inequality, in
/// lexicographic order.
std::vector<LatticeVector> box_lattice_points(const IntegerInequalities& ineq, const LatticeVector& lo,
                                              const LatticeVector& hi);

/// Scans every nonzero nu with |nu|_inf <= radius and returns those with
/// min_{x in x_points} <x, nu> < min_{v in p_points} <v, nu> + 1, ranked as
/// in most_violated (index = lexicographic position in the box); at most
/// `limit`. This is the brute-force side of the Fine interior oracle.
std::vector<LatticeVector> box_violations(std::span<const RationalVector> p_points,
                                          std::span<const RationalVector> x_points, std::int64_t radius,
                                          std::size_t limit);

namespace kernels {

/// Points multiplied by a common denominator, stored row-major.
struct ScaledPoints {
  std::size_t dim = 0;
  std::int64_t den = 1;
  std::vector<std::int64_t> coords;

  std::size_t size() const { return dim == 0 ? 0 : coords.size() / dim; }
  const std::int64_t* point(std::size_t i) const { return coords.data() + i * dim; }
};

/// Points each multiplied by their own denominator.
struct PointwiseScaled {
  std::size_t dim = 0;
  std::vector<std::int64_t> dens;
  std::vector<std::int64_t> coords;

  std::size_t size() const { return dens.size(); }
  const std::int64_t* point(std::size_t i) const { return coords.data() + i * dim; }
};

struct IntRows {
  std::size_t dim = 0;
  std::vector<std::int64_t> coeffs;

  std::size_t size() const { return dim == 0 ? 0 : coeffs.size() / dim; }
  const std::int64_t* row(std::size_t i) const { return coeffs.data() + i * dim; }
};

// Magnitude bounds under which every kernel below is overflow free for
// dim <= 16: products stay below 2^100 inside __int128.
inline constexpr std::int64_t kMaxScaledCoord = std::int64_t{1} << 40;
inline constexpr std::int64_t kMaxRowCoeff = std::int64_t{1} << 20;

std::optional<ScaledPoints> scale_points(std::span<const RationalVector> points, std::size_t dim);
std::optional<PointwiseScaled> scale_points_each(std::span<const RationalVector> points, std::size_t dim);
std::optional<IntRows> to_int_rows(std::span<const LatticeVector> rows, std::size_t dim);

/// den * min_j <p_j, nu_i>.
std::vector<__int128> min_pairings(const ScaledPoints& p, const IntRows& normals);

/// Violation of row i in units of 1/(x.den * threshold_den); <= 0 means
/// satisfied. thresholds[i] is threshold_i * threshold_den.
std::vector<__int128> violations(const ScaledPoints& x, const IntRows& normals,
                                 std::span<const __int128> thresholds, std::int64_t threshold_den);

std::vector<std::vector<std::int64_t>> box_points(const IntRows& a, std::span<const std::int64_t> b,
                                                  std::span<const std::int64_t> lo,
                                                  std::span<const std::int64_t> hi);

/// A violated nu of the box scan: the violation is num / (den * p.den).
struct BoxViolation {
  __int128 num;
  std::int64_t den;
  std::uint64_t index;  ///< lexicographic position in the box
};

/// Box oracle scan over every violated nu, unsorted. The x points keep
/// their own denominators: cutting-plane vertices rarely share one, and a
/// common denominator overflows quickly. The caller bounds the magnitudes.
std::vector<BoxViolation> box_violations(const ScaledPoints& p, const PointwiseScaled& x, std::int64_t radius);

/// Ranks (amount, index) pairs: positive amounts only, largest first.
std::vector<std::size_t> top_indices(std::span<const __int128> amounts, std::size_t limit);

}  // namespace kernels

namespace reference {

std::vector<Rational> min_pairings(std::span<const RationalVector> points, std::span<const LatticeVector> normals);

std::vector<std::size_t> most_violated(std::span<const RationalVector> points,
                                       std::span<const LatticeVector> normals,
                                       std::span<const Rational> thresholds, std::size_t limit);

std::vector<LatticeVector> box_lattice_points(const IntegerInequalities& ineq, const LatticeVector& lo,
                                              const LatticeVector& hi);

std::vector<LatticeVector> box_violations(std::span<const RationalVector> p_points,
                                          std::span<const RationalVector> x_points, std::int64_t radius,
                                          std::size_t limit);

}  // namespace reference

}  // namespace finepoly
