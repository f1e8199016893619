#include "finepoly/lp.hpp"

#include <optional>

#include "finepoly/matrix.hpp"

namespace finepoly {

void LpProblem::add_at_least(RationalVector normal, Rational offset) {
  constraints.push_back({std::move(normal), std::move(offset)});
}

void LpProblem::add_at_least(const LatticeVector& normal, Rational offset) {
  constraints.push_back({to_rational(normal), std::move(offset)});
}

void LpProblem::add_equal(RationalVector normal, const Rational& value) {
  RationalVector neg = scale(normal, Rational(-1));
  constraints.push_back({std::move(normal), value});
  constraints.push_back({std::move(neg), -value});
}

namespace {

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : a_(rows, RationalVector(cols + 1, Rational(0))), basis_(rows) {}

  std::size_t rows() const { return a_.size(); }
  std::size_t cols() const { return a_.empty() ? 0 : a_[0].size() - 1; }
  Rational& at(std::size_t r, std::size_t c) { return a_[r][c]; }
  Rational& rhs(std::size_t r) { return a_[r].back(); }
  std::vector<std::size_t>& basis() { return basis_; }

  void pivot(std::size_t r, std::size_t c) {
    Rational inv = 1 / a_[r][c];
    for (auto& x : a_[r]) x *= inv;
    for (std::size_t i = 0; i < a_.size(); ++i) {
      if (i == r || a_[i][c] == 0) continue;
      Rational f = a_[i][c];
      for (std::size_t j = 0; j < a_[i].size(); ++j)
        if (a_[r][j] != 0) a_[i][j] -= f * a_[r][j];
    }
    basis_[r] = c;
  }

  void drop_row(std::size_t r) {
    a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

  /// Minimizes cost over columns [0, usable); returns false if unbounded.
  bool optimize(const RationalVector& cost, std::size_t usable) {
    while (true) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < usable && !entering; ++j) {
        if (is_basic(j)) continue;
        if (reduced_cost(cost, j) < 0) entering = j;
      }
      if (!entering) return true;
      std::optional<std::size_t> leaving;
      Rational best_ratio;
      for (std::size_t i = 0; i < rows(); ++i) {
        if (a_[i][*entering] <= 0) continue;
        Rational ratio = a_[i].back() / a_[i][*entering];
        if (!leaving || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[*leaving])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      if (!leaving) return false;
      pivot(*leaving, *entering);
    }
  }

  Rational objective(const RationalVector& cost) const {
    Rational v = 0;
    for (std::size_t i = 0; i < a_.size(); ++i) v += cost[basis_[i]] * a_[i].back();
    return v;
  }

 private:
  bool is_basic(std::size_t j) const {
    for (auto b : basis_)
      if (b == j) return true;
    return false;
  }

  Rational reduced_cost(const RationalVector& cost, std::size_t j) const {
    Rational r = cost[j];
    for (std::size_t i = 0; i < a_.size(); ++i)
      if (a_[i][j] != 0) r -= cost[basis_[i]] * a_[i][j];
    return r;
  }

  std::vector<RationalVector> a_;
  std::vector<std::size_t> basis_;
};

// Moves an optimal point along directions that keep every active constraint
// tight until `dim` independent constraints are active. Objective is constant
// along such directions at an optimum.
RationalVector purify_to_vertex(const LpProblem& p, RationalVector x) {
  const std::size_t n = p.dim;
  while (true) {
    std::vector<RationalVector> active;
    for (const auto& c : p.constraints)
      if (dot(x, c.normal) == c.offset) active.push_back(c.normal);
    auto kernel = nullspace(active, n);
    if (kernel.empty()) return x;
    const RationalVector& dir = kernel.front();
    std::optional<Rational> best_step;
    bool moved = false;
    for (int sign : {1, -1}) {
      RationalVector d = scale(dir, Rational(sign));
      best_step.reset();
      for (const auto& c : p.constraints) {
        Rational rate = dot(d, c.normal);
        if (rate >= 0) continue;
        Rational step = (dot(x, c.normal) - c.offset) / (-rate);
        if (!best_step || step < *best_step) best_step = step;
      }
      if (best_step) {
        x = add(x, scale(d, *best_step));
        moved = true;
        break;
      }
    }
    // A line through x lies in the region: no vertex exists.
    if (!moved) return x;
  }
}

}  // namespace

LpResult lp_solve(const LpProblem& problem) {
  const std::size_t n = problem.dim;
  if (problem.objective.size() != n) throw InputError("objective dimension mismatch");
  for (const auto& c : problem.constraints)
    if (c.normal.size() != n) throw InputError("constraint dimension mismatch");

  const std::size_t m = problem.constraints.size();
  if (m == 0) {
    if (is_zero(problem.objective)) return LpOptimal{0, RationalVector(n, Rational(0))};
    return LpUnbounded{};
  }

  // Columns: x+ (n), x- (n), surplus (m), artificial (m).
  const std::size_t art0 = 2 * n + m;
  Tableau t(m, art0 + m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = problem.constraints[i];
    int s = c.offset < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) {
      t.at(i, j) = s * c.normal[j];
      t.at(i, n + j) = -s * c.normal[j];
    }
    t.at(i, 2 * n + i) = -s;
    t.at(i, art0 + i) = 1;
    t.rhs(i) = s * c.offset;
    t.basis()[i] = art0 + i;
  }

  RationalVector phase1(art0 + m, Rational(0));
  for (std::size_t i = 0; i < m; ++i) phase1[art0 + i] = 1;
  t.optimize(phase1, art0 + m);
  if (t.objective(phase1) != 0) return LpInfeasible{};

  for (std::size_t i = 0; i < t.rows();) {
    if (t.basis()[i] < art0) {
      ++i;
      continue;
    }
    std::optional<std::size_t> col;
    for (std::size_t j = 0; j < art0 && !col; ++j)
      if (t.at(i, j) != 0) col = j;
    if (col) {
      t.pivot(i, *col);
      ++i;
    } else {
      t.drop_row(i);
    }
  }

  RationalVector phase2(art0 + m, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    phase2[j] = problem.objective[j];
    phase2[n + j] = -problem.objective[j];
  }
  if (!t.optimize(phase2, art0)) return LpUnbounded{};

  RationalVector x(n, Rational(0));
  for (std::size_t i = 0; i < t.rows(); ++i) {
    std::size_t b = t.basis()[i];
    if (b < n)
      x[b] += t.rhs(i);
    else if (b < 2 * n)
      x[b - n] -= t.rhs(i);
  }
  x = purify_to_vertex(problem, std::move(x));
  return LpOptimal{dot(x, problem.objective), std::move(x)};
}

bool lp_feasible(std::size_t dim, const std::vector<LinearConstraint>& constraints) {
  LpProblem p;
  p.dim = dim;
  p.objective = RationalVector(dim, Rational(0));
  p.constraints = constraints;
  return !std::holds_alternative<LpInfeasible>(lp_solve(p));
}

}  // namespace finepoly
