#include "finepoly/matrix.hpp"

namespace finepoly {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::from_rows(std::span<const LatticeVector> rows, std::size_t cols) {
  IntegerMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InputError("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

LatticeVector IntegerMatrix::row(std::size_t r) const {
  return LatticeVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                       data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

std::vector<LatticeVector> IntegerMatrix::row_vectors() const {
  std::vector<LatticeVector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

IntegerMatrix IntegerMatrix::transposed() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& other) const {
  if (cols_ != other.rows_) throw InputError("matrix shape mismatch");
  IntegerMatrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      if ((*this)(r, k) == 0) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) out(r, c) += (*this)(r, k) * other(k, c);
    }
  return out;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

namespace {

// rows (a, b) <- (s*a + t*b, x*a + y*b) on both matrices.
void combine_rows(IntegerMatrix& m, std::size_t a, std::size_t b, const Integer& s, const Integer& t,
                  const Integer& x, const Integer& y) {
  for (std::size_t c = 0; c < m.cols(); ++c) {
    Integer va = m(a, c);
    Integer vb = m(b, c);
    m(a, c) = s * va + t * vb;
    m(b, c) = x * va + y * vb;
  }
}

void add_multiple(IntegerMatrix& m, std::size_t target, std::size_t source, const Integer& q) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(target, c) -= q * m(source, c);
}

void negate_row(IntegerMatrix& m, std::size_t r) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = -m(r, c);
}

}  // namespace

HermiteResult hnf(const IntegerMatrix& m) {
  IntegerMatrix h = m;
  IntegerMatrix u = IntegerMatrix::identity(m.rows());
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < h.cols() && pivot_row < h.rows(); ++col) {
    for (std::size_t i = pivot_row + 1; i < h.rows(); ++i) {
      if (h(i, col) == 0) continue;
      if (h(pivot_row, col) == 0) {
        h.swap_rows(pivot_row, i);
        u.swap_rows(pivot_row, i);
        continue;
      }
      Integer a = h(pivot_row, col);
      Integer b = h(i, col);
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      Integer x = -b / g;
      Integer y = a / g;
      combine_rows(h, pivot_row, i, s, t, x, y);
      combine_rows(u, pivot_row, i, s, t, x, y);
    }
    if (h(pivot_row, col) == 0) continue;
    if (h(pivot_row, col) < 0) {
      negate_row(h, pivot_row);
      negate_row(u, pivot_row);
    }
    for (std::size_t i = 0; i < pivot_row; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, col).get_mpz_t(), h(pivot_row, col).get_mpz_t());
      if (q == 0) continue;
      add_multiple(h, i, pivot_row, q);
      add_multiple(u, i, pivot_row, q);
    }
    ++pivot_row;
  }
  return {std::move(h), std::move(u)};
}

Integer determinant(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntegerMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::vector<LatticeVector> lattice_basis(std::span<const LatticeVector> vectors, std::size_t n) {
  if (vectors.empty()) return {};
  auto [h, u] = hnf(IntegerMatrix::from_rows(vectors, n));
  std::vector<LatticeVector> out;
  for (std::size_t r = 0; r < h.rows(); ++r) {
    LatticeVector row = h.row(r);
    if (!is_zero(row)) out.push_back(std::move(row));
  }
  return out;
}

std::vector<LatticeVector> integer_kernel(std::span<const LatticeVector> rows, std::size_t n) {
  if (rows.empty()) return IntegerMatrix::identity(n).row_vectors();
  // h = u * A^T; rows of u hitting zero rows of h span the kernel of A.
  IntegerMatrix at = IntegerMatrix::from_rows(rows, n).transposed();
  auto [h, u] = hnf(at);
  std::vector<LatticeVector> kernel;
  for (std::size_t r = 0; r < h.rows(); ++r)
    if (is_zero(h.row(r))) kernel.push_back(u.row(r));
  return lattice_basis(kernel, n);
}

std::vector<LatticeVector> saturate(std::span<const LatticeVector> vectors, std::size_t n) {
  std::vector<LatticeVector> nonzero;
  for (const auto& v : vectors)
    if (!is_zero(v)) nonzero.push_back(v);
  if (nonzero.empty()) return {};
  auto complement = integer_kernel(nonzero, n);
  return integer_kernel(complement, n);
}

RowEchelon rref(std::span<const RationalVector> rows, std::size_t n) {
  std::vector<RationalVector> a(rows.begin(), rows.end());
  RowEchelon out;
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < a.size(); ++col) {
    std::size_t p = r;
    while (p < a.size() && a[p][col] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[r], a[p]);
    Rational inv = 1 / a[r][col];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][col] == 0) continue;
      Rational f = a[i][col];
      for (std::size_t c = col; c < n; ++c) a[i][c] -= f * a[r][c];
    }
    out.pivots.push_back(col);
    ++r;
  }
  a.resize(r);
  out.rows = std::move(a);
  return out;
}

std::size_t rank(std::span<const RationalVector> rows, std::size_t n) { return rref(rows, n).pivots.size(); }

std::size_t rank(std::span<const LatticeVector> rows, std::size_t n) {
  if (rows.empty()) return 0;
  return lattice_basis(rows, n).size();
}

std::vector<RationalVector> nullspace(std::span<const RationalVector> rows, std::size_t n) {
  RowEchelon e = rref(rows, n);
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(n, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.rows[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

RationalVector solve(std::span<const RationalVector> a, const RationalVector& b) {
  std::size_t n = b.size();
  if (a.size() != n) throw InputError("solve() needs a square system");
  std::vector<RationalVector> aug;
  aug.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    RationalVector row = a[i];
    row.push_back(b[i]);
    aug.push_back(std::move(row));
  }
  RowEchelon e = rref(aug, n + 1);
  if (e.pivots.size() != n || e.pivots.back() != n - 1) throw InputError("singular linear system");
  RationalVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = e.rows[i][n];
  return x;
}

}  // namespace finepoly
