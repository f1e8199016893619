#pragma once

// Exact rational linear programming.
//
// Dense two-phase primal simplex with Bland's anti-cycling rule. Variables are
// free; constraints are <a, x> >= b. An optimal answer is purified to a
// vertex of the feasible region whenever the region has one, so the witness
// is tight on `dim` linearly independent constraints.

#include <variant>
#include <vector>

#include "finepoly/exact.hpp"

namespace finepoly {

struct LinearConstraint {
  RationalVector normal;
  Rational offset;  ///< <normal, x> >= offset
};

struct LpProblem {
  std::size_t dim = 0;
  RationalVector objective;  ///< minimized
  std::vector<LinearConstraint> constraints;

  void add_at_least(RationalVector normal, Rational offset);
  void add_at_least(const LatticeVector& normal, Rational offset);
  void add_equal(RationalVector normal, const Rational& value);
};

struct LpOptimal {
  Rational value;
  RationalVector witness;
};
struct LpInfeasible {};
struct LpUnbounded {};

using LpResult = std::variant<LpOptimal, LpInfeasible, LpUnbounded>;

LpResult lp_solve(const LpProblem& problem);

/// Convenience: true iff the constraint system has a solution.
bool lp_feasible(std::size_t dim, const std::vector<LinearConstraint>& constraints);

}  // namespace finepoly
