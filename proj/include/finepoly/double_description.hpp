#pragma once

// Incremental double description (Motzkin) for integer cone systems.
//
// Maintains the extreme rays and lineality space of { x : A x >= 0 } while
// rows of A are added one at a time. Rays are kept as primitive integer
// vectors; adjacency uses the combinatorial zero-set test, which is exact
// because every stored ray is extreme for the rows seen so far.

#include <cstdint>
#include <span>
#include <vector>

#include "finepoly/exact.hpp"

namespace finepoly {

class DoubleDescription {
 public:
  explicit DoubleDescription(std::size_t dim);

  void add_constraint(const LatticeVector& row);
  void add_constraints(std::span<const LatticeVector> rows);

  std::size_t dim() const { return dim_; }
  std::size_t num_constraints() const { return rows_.size(); }
  const std::vector<LatticeVector>& rays() const { return rays_; }
  const std::vector<LatticeVector>& lines() const { return lines_; }

  /// Indices of constraints that vanish on ray i.
  std::vector<std::size_t> zero_set(std::size_t ray) const;

 private:
  using Bits = std::vector<std::uint64_t>;

  void set_bit(Bits& b, std::size_t i) const;
  bool test_bit(const Bits& b, std::size_t i) const;
  void grow_bits();

  std::size_t dim_;
  std::vector<LatticeVector> rows_;
  std::vector<LatticeVector> rays_;
  std::vector<Bits> zeros_;
  std::vector<LatticeVector> lines_;
};

/// Homogenized extreme-ray computation for { x : <a_i, x> >= b_i } with
/// rational data. Returns integer rows (q*a_i, -p_i) for b_i = p_i / q_i,
/// acting on (x, t).
LatticeVector homogenize(std::span<const Integer> normal, const Rational& offset);

}  // namespace finepoly
