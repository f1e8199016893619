// Serial GMP versions of the scan kernels. Slow, obviously correct, and the
// fallback whenever fixed-width arithmetic could overflow.

#include <algorithm>

#include "finepoly/kernels.hpp"

namespace finepoly::reference {

namespace {

struct Ranked {
  Rational amount;
  std::size_t index;
};

std::vector<std::size_t> take_top(std::vector<Ranked> ranked, std::size_t limit) {
  std::sort(ranked.begin(), ranked.end(), [](const Ranked& a, const Ranked& b) {
    if (a.amount != b.amount) return a.amount > b.amount;
    return a.index < b.index;
  });
  if (ranked.size() > limit) ranked.resize(limit);
  std::vector<std::size_t> out;
  for (const auto& r : ranked) out.push_back(r.index);
  return out;
}

Rational min_over(std::span<const RationalVector> points, const LatticeVector& nu) {
  Rational best = dot(points[0], nu);
  for (std::size_t j = 1; j < points.size(); ++j) {
    Rational v = dot(points[j], nu);
    if (v < best) best = v;
  }
  return best;
}

bool next_in_box(LatticeVector& x, const LatticeVector& lo, const LatticeVector& hi) {
  for (std::size_t i = x.size(); i-- > 0;) {
    if (x[i] < hi[i]) {
      ++x[i];
      return true;
    }
    x[i] = lo[i];
  }
  return false;
}

}  // namespace

std::vector<Rational> min_pairings(std::span<const RationalVector> points, std::span<const LatticeVector> normals) {
  if (points.empty()) throw InputError("min_pairings over an empty point set");
  std::vector<Rational> out;
  out.reserve(normals.size());
  for (const auto& nu : normals) out.push_back(min_over(points, nu));
  return out;
}

std::vector<std::size_t> most_violated(std::span<const RationalVector> points,
                                       std::span<const LatticeVector> normals,
                                       std::span<const Rational> thresholds, std::size_t limit) {
  std::vector<Ranked> ranked;
  for (std::size_t i = 0; i < normals.size(); ++i) {
    Rational gap = thresholds[i] - min_over(points, normals[i]);
    if (gap > 0) ranked.push_back({gap, i});
  }
  return take_top(std::move(ranked), limit);
}

std::vector<LatticeVector> box_lattice_points(const IntegerInequalities& ineq, const LatticeVector& lo,
                                              const LatticeVector& hi) {
  std::vector<LatticeVector> out;
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (lo[i] > hi[i]) return out;
  LatticeVector x = lo;
  do {
    bool inside = true;
    for (std::size_t r = 0; r < ineq.normals.size() && inside; ++r)
      if (dot(x, ineq.normals[r]) < ineq.offsets[r]) inside = false;
    if (inside) out.push_back(x);
  } while (next_in_box(x, lo, hi));
  return out;
}

std::vector<LatticeVector> box_violations(std::span<const RationalVector> p_points,
                                          std::span<const RationalVector> x_points, std::int64_t radius,
                                          std::size_t limit) {
  const std::size_t d = p_points.front().size();
  LatticeVector lo(d, Integer(-radius)), hi(d, Integer(radius));
  std::vector<LatticeVector> box;
  std::vector<Ranked> ranked;
  LatticeVector nu = lo;
  do {
    if (is_zero(nu)) continue;
    Rational gap = min_over(p_points, nu) + 1 - min_over(x_points, nu);
    if (gap > 0) {
      ranked.push_back({gap, box.size()});
      box.push_back(nu);
    }
  } while (next_in_box(nu, lo, hi));
  std::vector<LatticeVector> out;
  for (auto i : take_top(std::move(ranked), limit)) out.push_back(box[i]);
  return out;
}

}  // namespace finepoly::reference
