#include "finepoly/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <limits>

namespace finepoly {

namespace kernels {

namespace {

using i128 = __int128;

i128 floor_div(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

i128 ceil_div(i128 a, i128 b) { return -floor_div(-a, b); }

}  // namespace

std::optional<ScaledPoints> scale_points(std::span<const RationalVector> points, std::size_t dim) {
  ScaledPoints out;
  out.dim = dim;
  Integer den = 1;
  for (const auto& p : points) {
    if (p.size() != dim) throw InputError("point dimension mismatch");
    Integer l = lcm_of_denominators(p);
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), l.get_mpz_t());
  }
  if (!fits_int64(den) || den > kMaxScaledCoord) return std::nullopt;
  out.den = to_int64(den);
  out.coords.reserve(points.size() * dim);
  for (const auto& p : points)
    for (const auto& c : p) {
      Integer v = c.get_num() * (den / c.get_den());
      if (abs(v) > kMaxScaledCoord) return std::nullopt;
      out.coords.push_back(to_int64(v));
    }
  return out;
}

std::optional<PointwiseScaled> scale_points_each(std::span<const RationalVector> points, std::size_t dim) {
  PointwiseScaled out;
  out.dim = dim;
  out.coords.reserve(points.size() * dim);
  for (const auto& p : points) {
    if (p.size() != dim) throw InputError("point dimension mismatch");
    Integer den = lcm_of_denominators(p);
    if (den > kMaxScaledCoord) return std::nullopt;
    out.dens.push_back(to_int64(den));
    for (const auto& c : p) {
      Integer v = c.get_num() * (den / c.get_den());
      if (abs(v) > kMaxScaledCoord) return std::nullopt;
      out.coords.push_back(to_int64(v));
    }
  }
  return out;
}

std::optional<IntRows> to_int_rows(std::span<const LatticeVector> rows, std::size_t dim) {
  IntRows out;
  out.dim = dim;
  out.coeffs.reserve(rows.size() * dim);
  for (const auto& r : rows) {
    if (r.size() != dim) throw InputError("row dimension mismatch");
    for (const auto& c : r) {
      if (abs(c) > kMaxRowCoeff) return std::nullopt;
      out.coeffs.push_back(to_int64(c));
    }
  }
  return out;
}

std::vector<i128> min_pairings(const ScaledPoints& p, const IntRows& normals) {
  const std::size_t n = normals.size(), m = p.size(), d = p.dim;
  std::vector<i128> out(n);
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t* nu = normals.row(i);
    i128 best = std::numeric_limits<i128>::max();
    for (std::size_t j = 0; j < m; ++j) {
      const std::int64_t* x = p.point(j);
      i128 s = 0;
      for (std::size_t k = 0; k < d; ++k) s += static_cast<i128>(x[k]) * nu[k];
      best = std::min(best, s);
    }
    out[i] = best;
  }
  return out;
}

std::vector<i128> violations(const ScaledPoints& x, const IntRows& normals, std::span<const i128> thresholds,
                             std::int64_t threshold_den) {
  std::vector<i128> mins = min_pairings(x, normals);
  const std::size_t n = normals.size();
  std::vector<i128> out(n);
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < n; ++i) out[i] = thresholds[i] * x.den - mins[i] * threshold_den;
  return out;
}

std::vector<std::size_t> top_indices(std::span<const i128> amounts, std::size_t limit) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < amounts.size(); ++i)
    if (amounts[i] > 0) idx.push_back(i);
  auto better = [&](std::size_t a, std::size_t b) {
    if (amounts[a] != amounts[b]) return amounts[a] > amounts[b];
    return a < b;
  };
  if (idx.size() > limit) {
    std::partial_sort(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(limit), idx.end(), better);
    idx.resize(limit);
  } else {
    std::sort(idx.begin(), idx.end(), better);
  }
  return idx;
}

std::vector<std::vector<std::int64_t>> box_points(const IntRows& a, std::span<const std::int64_t> b,
                                                  std::span<const std::int64_t> lo,
                                                  std::span<const std::int64_t> hi) {
  const std::size_t d = lo.size();
  std::vector<std::vector<std::int64_t>> out;
  if (d == 0) return out;
  for (std::size_t i = 0; i < d; ++i)
    if (lo[i] > hi[i]) return out;
  const std::size_t rows = a.size();
  const std::int64_t outer_lo = lo[0];
  // with d == 1 the only coordinate is the swept one
  const std::int64_t outer_n = d == 1 ? 1 : hi[0] - lo[0] + 1;
  std::vector<std::vector<std::vector<std::int64_t>>> slabs(static_cast<std::size_t>(outer_n));

  // Each slab fixes the first coordinate. The last coordinate's feasible
  // range is solved from the inequalities directly rather than scanned.
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t s = 0; s < outer_n; ++s) {
    auto& slab = slabs[static_cast<std::size_t>(s)];
    std::vector<std::int64_t> x(lo.begin(), lo.end());
    if (d > 1) x[0] = outer_lo + s;
    while (true) {
      i128 lo_last = lo[d - 1], hi_last = hi[d - 1];
      bool feasible = true;
      for (std::size_t r = 0; r < rows && feasible; ++r) {
        const std::int64_t* row = a.row(r);
        i128 base = 0;
        for (std::size_t k = 0; k + 1 < d; ++k) base += static_cast<i128>(row[k]) * x[k];
        i128 rest = static_cast<i128>(b[r]) - base;
        std::int64_t c = row[d - 1];
        if (c > 0)
          lo_last = std::max(lo_last, ceil_div(rest, c));
        else if (c < 0)
          hi_last = std::min(hi_last, floor_div(rest, c));
        else if (rest > 0)
          feasible = false;
        if (lo_last > hi_last) feasible = false;
      }
      if (feasible) {
        for (i128 t = lo_last; t <= hi_last; ++t) {
          x[d - 1] = static_cast<std::int64_t>(t);
          slab.push_back(x);
        }
      }
      // advance coordinates 1 .. d-2
      std::size_t k = d - 1;
      bool more = false;
      while (k-- > 1) {
        if (x[k] < hi[k]) {
          ++x[k];
          more = true;
          break;
        }
        x[k] = lo[k];
      }
      if (!more) break;
    }
  }
  for (auto& slab : slabs)
    for (auto& p : slab) out.push_back(std::move(p));
  return out;
}

std::vector<BoxViolation> box_violations(const ScaledPoints& p, const PointwiseScaled& x, std::int64_t radius) {
  const std::size_t d = p.dim;
  const std::int64_t side = 2 * radius + 1;
  const std::int64_t outer_n = d == 1 ? 1 : side;
  const std::size_t np = p.size(), nx = x.size();
  std::vector<std::vector<BoxViolation>> slabs(static_cast<std::size_t>(outer_n));

#pragma omp parallel for schedule(dynamic)
  for (std::int64_t s = 0; s < outer_n; ++s) {
    auto& slab = slabs[static_cast<std::size_t>(s)];
    std::vector<std::int64_t> nu(d, -radius);
    if (d > 1) nu[0] = s - radius;
    std::vector<i128> base_p(np), base_x(nx);
    while (true) {
      // pairings with the first d-1 coordinates, reused along the last one
      for (std::size_t j = 0; j < np; ++j) {
        i128 acc = 0;
        for (std::size_t k = 0; k + 1 < d; ++k) acc += static_cast<i128>(p.point(j)[k]) * nu[k];
        base_p[j] = acc;
      }
      for (std::size_t j = 0; j < nx; ++j) {
        i128 acc = 0;
        for (std::size_t k = 0; k + 1 < d; ++k) acc += static_cast<i128>(x.point(j)[k]) * nu[k];
        base_x[j] = acc;
      }
      std::uint64_t prefix = 0;
      for (std::size_t k = 0; k + 1 < d; ++k)
        prefix = prefix * static_cast<std::uint64_t>(side) + static_cast<std::uint64_t>(nu[k] + radius);
      bool prefix_zero = true;
      for (std::size_t k = 0; k + 1 < d; ++k)
        if (nu[k] != 0) prefix_zero = false;
      for (std::int64_t t = -radius; t <= radius; ++t) {
        if (prefix_zero && t == 0) continue;
        i128 ord_p = std::numeric_limits<i128>::max();
        for (std::size_t j = 0; j < np; ++j)
          ord_p = std::min(ord_p, base_p[j] + static_cast<i128>(p.point(j)[d - 1]) * t);
        // min over x of a_j / den_j by cross multiplication
        i128 best_a = base_x[0] + static_cast<i128>(x.point(0)[d - 1]) * t;
        std::int64_t best_den = x.dens[0];
        for (std::size_t j = 1; j < nx; ++j) {
          i128 a = base_x[j] + static_cast<i128>(x.point(j)[d - 1]) * t;
          if (a * best_den < best_a * x.dens[j]) {
            best_a = a;
            best_den = x.dens[j];
          }
        }
        // ord_P(nu) + 1 - min_x <x,nu>, over p.den * best_den
        i128 num = (ord_p + p.den) * best_den - best_a * p.den;
        if (num > 0)
          slab.push_back({num, best_den, prefix * static_cast<std::uint64_t>(side) + static_cast<std::uint64_t>(t + radius)});
      }
      std::size_t k = d - 1;
      bool more = false;
      while (k-- > 1) {
        if (nu[k] < radius) {
          ++nu[k];
          more = true;
          break;
        }
        nu[k] = -radius;
      }
      if (!more) break;
    }
  }
  std::vector<BoxViolation> out;
  for (auto& slab : slabs) out.insert(out.end(), slab.begin(), slab.end());
  return out;
}

}  // namespace kernels

namespace {

bool small_radius(std::int64_t radius, std::size_t d) {
  if (radius < 0 || radius > kernels::kMaxRowCoeff) return false;
  // lexicographic box index must fit in 64 bits
  long double cells = 1;
  for (std::size_t i = 0; i < d; ++i) cells *= static_cast<long double>(2 * radius + 1);
  return cells < 1e18L;
}

}  // namespace

std::vector<Rational> min_pairings(std::span<const RationalVector> points, std::span<const LatticeVector> normals) {
  if (points.empty()) throw InputError("min_pairings over an empty point set");
  const std::size_t d = points.front().size();
  auto p = kernels::scale_points(points, d);
  auto rows = kernels::to_int_rows(normals, d);
  if (!p || !rows || d > 16) return reference::min_pairings(points, normals);
  auto mins = kernels::min_pairings(*p, *rows);
  std::vector<Rational> out;
  out.reserve(mins.size());
  Integer den(static_cast<long>(p->den));
  for (auto v : mins) {
    // |v| < 2^65 by the magnitude bounds
    Integer hi = static_cast<long>(static_cast<std::int64_t>(v >> 32));
    Integer lo = static_cast<unsigned long>(static_cast<std::uint64_t>(v & 0xffffffffu));
    Integer num = hi * Integer(4294967296ul) + lo;
    out.push_back(make_rational(num, den));
  }
  return out;
}

std::vector<std::size_t> most_violated(std::span<const RationalVector> points,
                                       std::span<const LatticeVector> normals,
                                       std::span<const Rational> thresholds, std::size_t limit) {
  if (points.empty()) throw InputError("most_violated over an empty point set");
  const std::size_t d = points.front().size();
  auto x = kernels::scale_points(points, d);
  auto rows = kernels::to_int_rows(normals, d);
  std::optional<kernels::ScaledPoints> t;
  if (!thresholds.empty()) {
    // thresholds share one denominator; pack them as 1-d points
    std::vector<RationalVector> as_points;
    as_points.reserve(thresholds.size());
    for (const auto& q : thresholds) as_points.push_back({q});
    t = kernels::scale_points(as_points, 1);
  }
  if (!x || !rows || (!thresholds.empty() && !t) || d > 16)
    return reference::most_violated(points, normals, thresholds, limit);
  std::vector<__int128> th;
  std::int64_t th_den = 1;
  if (t) {
    th.assign(t->coords.begin(), t->coords.end());
    th_den = t->den;
  }
  auto amounts = kernels::violations(*x, *rows, th, th_den);
  return kernels::top_indices(amounts, limit);
}

std::vector<LatticeVector> box_lattice_points(const IntegerInequalities& ineq, const LatticeVector& lo,
                                              const LatticeVector& hi) {
  const std::size_t d = lo.size();
  bool fits = d > 0 && d <= 16;
  for (std::size_t i = 0; i < d && fits; ++i)
    fits = abs(lo[i]) <= kernels::kMaxRowCoeff && abs(hi[i]) <= kernels::kMaxRowCoeff;
  for (const auto& b : ineq.offsets)
    if (abs(b) > kernels::kMaxScaledCoord) fits = false;
  std::optional<kernels::IntRows> rows;
  if (fits) {
    // row coefficients may be as large as offsets here; box coordinates are small
    kernels::IntRows r;
    r.dim = d;
    for (const auto& n : ineq.normals)
      for (const auto& c : n) {
        if (abs(c) > kernels::kMaxScaledCoord) fits = false;
        else r.coeffs.push_back(to_int64(c));
      }
    if (fits) rows = std::move(r);
  }
  if (!rows) return reference::box_lattice_points(ineq, lo, hi);
  std::vector<std::int64_t> b, l, h;
  for (const auto& v : ineq.offsets) b.push_back(to_int64(v));
  for (std::size_t i = 0; i < d; ++i) {
    l.push_back(to_int64(lo[i]));
    h.push_back(to_int64(hi[i]));
  }
  auto pts = kernels::box_points(*rows, b, l, h);
  std::vector<LatticeVector> out;
  out.reserve(pts.size());
  for (const auto& p : pts) {
    LatticeVector v;
    v.reserve(d);
    for (auto c : p) v.emplace_back(static_cast<long>(c));
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<LatticeVector> box_violations(std::span<const RationalVector> p_points,
                                          std::span<const RationalVector> x_points, std::int64_t radius,
                                          std::size_t limit) {
  if (p_points.empty() || x_points.empty()) throw InputError("box_violations over an empty point set");
  const std::size_t d = p_points.front().size();
  auto p = kernels::scale_points(p_points, d);
  auto x = kernels::scale_points_each(x_points, d);
  if (!p || !x || d < 1 || d > 16 || !small_radius(radius, d))
    return reference::box_violations(p_points, x_points, radius, limit);

  // Bound the numerators and the cross products of the ranking; fall back
  // to exact arithmetic when 128 bits might not be enough.
  auto max_abs = [](const std::vector<std::int64_t>& v) {
    std::int64_t m = 1;
    for (auto c : v) m = std::max(m, c < 0 ? -c : c);
    return Integer(static_cast<long>(m));
  };
  const Integer r(static_cast<long>(radius)), dd(static_cast<unsigned long>(d));
  const Integer max_den = max_abs(x->dens), dp(static_cast<long>(p->den));
  const Integer pair_p = max_abs(p->coords) * r * dd, pair_x = max_abs(x->coords) * r * dd;
  const Integer num_bound = (pair_p + dp) * max_den + pair_x * dp;
  const Integer limit128 = Integer(1) << 125;
  if (num_bound * max_den >= limit128 || pair_x * max_den >= limit128)
    return reference::box_violations(p_points, x_points, radius, limit);

  auto found = kernels::box_violations(*p, *x, radius);
  std::sort(found.begin(), found.end(), [](const kernels::BoxViolation& a, const kernels::BoxViolation& b) {
    __int128 lhs = a.num * b.den, rhs = b.num * a.den;
    if (lhs != rhs) return lhs > rhs;
    return a.index < b.index;
  });
  if (found.size() > limit) found.resize(limit);
  const std::uint64_t side = static_cast<std::uint64_t>(2 * radius + 1);
  std::vector<LatticeVector> out;
  for (const auto& v : found) {
    LatticeVector nu(d);
    std::uint64_t rest = v.index;
    for (std::size_t k = d; k-- > 0;) {
      nu[k] = static_cast<long>(rest % side) - radius;
      rest /= side;
    }
    out.push_back(std::move(nu));
  }
  return out;
}

}  // namespace finepoly
