#include "finepoly/double_description.hpp"

#include <bit>

namespace finepoly {

namespace {

void make_primitive(LatticeVector& v) {
  Integer g = gcd_of(v);
  if (g == 0 || g == 1) return;
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

// a*u - b*w, made primitive.
LatticeVector combine(const Integer& a, const LatticeVector& u, const Integer& b, const LatticeVector& w) {
  LatticeVector out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = a * u[i] - b * w[i];
  make_primitive(out);
  return out;
}

}  // namespace

LatticeVector homogenize(std::span<const Integer> normal, const Rational& offset) {
  LatticeVector row;
  row.reserve(normal.size() + 1);
  for (const auto& x : normal) row.push_back(x * offset.get_den());
  row.push_back(-offset.get_num());
  return row;
}

DoubleDescription::DoubleDescription(std::size_t dim) : dim_(dim) {
  for (std::size_t i = 0; i < dim; ++i) {
    LatticeVector e(dim, Integer(0));
    e[i] = 1;
    lines_.push_back(std::move(e));
  }
}

void DoubleDescription::set_bit(Bits& b, std::size_t i) const { b[i / 64] |= (std::uint64_t{1} << (i % 64)); }

bool DoubleDescription::test_bit(const Bits& b, std::size_t i) const {
  return (b[i / 64] >> (i % 64)) & std::uint64_t{1};
}

void DoubleDescription::grow_bits() {
  std::size_t words = (rows_.size() + 63) / 64;
  for (auto& z : zeros_) z.resize(words, 0);
}

std::vector<std::size_t> DoubleDescription::zero_set(std::size_t ray) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (test_bit(zeros_[ray], i)) out.push_back(i);
  return out;
}

void DoubleDescription::add_constraints(std::span<const LatticeVector> rows) {
  for (const auto& r : rows) add_constraint(r);
}

void DoubleDescription::add_constraint(const LatticeVector& row) {
  if (row.size() != dim_) throw InputError("constraint dimension mismatch");
  const std::size_t idx = rows_.size();
  rows_.push_back(row);
  grow_bits();
  const std::size_t words = (rows_.size() + 63) / 64;

  // A line not orthogonal to the row becomes a ray; the remaining lines and
  // all rays are shifted along it into the hyperplane row = 0.
  for (std::size_t li = 0; li < lines_.size(); ++li) {
    Integer v = dot(row, lines_[li]);
    if (v == 0) continue;
    LatticeVector pivot = lines_[li];
    if (v < 0) {
      pivot = negate(pivot);
      v = -v;
    }
    lines_.erase(lines_.begin() + static_cast<std::ptrdiff_t>(li));
    for (auto& l : lines_) {
      Integer w = dot(row, l);
      if (w != 0) l = combine(v, l, w, pivot);
    }
    for (std::size_t r = 0; r < rays_.size(); ++r) {
      Integer w = dot(row, rays_[r]);
      if (w != 0) rays_[r] = combine(v, rays_[r], w, pivot);
      set_bit(zeros_[r], idx);
    }
    Bits z(words, 0);
    for (std::size_t i = 0; i < idx; ++i) set_bit(z, i);
    rays_.push_back(std::move(pivot));
    zeros_.push_back(std::move(z));
    return;
  }

  std::vector<Integer> value(rays_.size());
  std::vector<std::size_t> pos, neg;
  for (std::size_t r = 0; r < rays_.size(); ++r) {
    value[r] = dot(row, rays_[r]);
    if (value[r] > 0)
      pos.push_back(r);
    else if (value[r] < 0)
      neg.push_back(r);
  }

  std::vector<LatticeVector> new_rays;
  std::vector<Bits> new_zeros;
  for (std::size_t r = 0; r < rays_.size(); ++r) {
    if (value[r] < 0) continue;
    new_rays.push_back(rays_[r]);
    new_zeros.push_back(zeros_[r]);
    if (value[r] == 0) set_bit(new_zeros.back(), idx);
  }

  if (!neg.empty() && !pos.empty()) {
    const std::size_t pointed_dim = dim_ - lines_.size();
    const std::size_t need = pointed_dim >= 2 ? pointed_dim - 2 : 0;
    Bits common(words, 0);
    for (auto p : pos) {
      for (auto n : neg) {
        std::size_t count = 0;
        for (std::size_t w = 0; w < words; ++w) {
          common[w] = zeros_[p][w] & zeros_[n][w];
          count += static_cast<std::size_t>(std::popcount(common[w]));
        }
        if (count < need) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays_.size() && adjacent; ++r) {
          if (r == p || r == n) continue;
          bool contains = true;
          for (std::size_t w = 0; w < words && contains; ++w)
            if ((zeros_[r][w] & common[w]) != common[w]) contains = false;
          if (contains) adjacent = false;
        }
        if (!adjacent) continue;
        new_rays.push_back(combine(value[p], rays_[n], value[n], rays_[p]));
        Bits z = common;
        set_bit(z, idx);
        new_zeros.push_back(std::move(z));
      }
    }
  }
  rays_ = std::move(new_rays);
  zeros_ = std::move(new_zeros);
}

}  // namespace finepoly
