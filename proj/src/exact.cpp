#include "finepoly/exact.hpp"

#include <cctype>

namespace finepoly {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw InputError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  std::string_view body = s;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  if (!all_digits(body)) throw InputError("not a rational number: '" + std::string(s) + "'");
  std::string text(s.front() == '+' ? s.substr(1) : s);
  return Integer(text, 10);
}

}  // namespace

Rational parse_rational(std::string_view token) {
  auto slash = token.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(token));
  std::string_view den = token.substr(slash + 1);
  if (!all_digits(den)) throw InputError("not a rational number: '" + std::string(token) + "'");
  return make_rational(parse_integer(token.substr(0, slash)), Integer(std::string(den), 10));
}

std::string to_string(const Rational& q) { return q.get_str(10); }
std::string to_string(const Integer& z) { return z.get_str(10); }

std::string to_string(const RationalVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += to_string(v[i]);
  }
  return s + ")";
}

std::string to_string(const LatticeVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += to_string(v[i]);
  }
  return s + ")";
}

Integer floor_to_integer(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil_to_integer(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational floor_rational(const Rational& q) { return Rational(floor_to_integer(q)); }

Integer gcd_of(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Integer lcm_of_denominators(std::span<const Rational> v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  return l;
}

LatticeVector primitive(const LatticeVector& v) {
  Integer g = gcd_of(v);
  if (g == 0) throw InputError("primitive() of the zero vector");
  LatticeVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) mpz_divexact(out[i].get_mpz_t(), v[i].get_mpz_t(), g.get_mpz_t());
  return out;
}

bool is_zero(std::span<const Integer> v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

bool is_zero(std::span<const Rational> v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

bool is_integral(std::span<const Rational> v) {
  for (const auto& x : v)
    if (x.get_den() != 1) return false;
  return true;
}

Rational dot(std::span<const Rational> x, std::span<const Integer> n) {
  if (x.size() != n.size()) throw InputError("dimension mismatch in pairing");
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * n[i];
  return s;
}

Rational dot(std::span<const Rational> x, std::span<const Rational> y) {
  if (x.size() != y.size()) throw InputError("dimension mismatch in pairing");
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
  if (a.size() != b.size()) throw InputError("dimension mismatch in pairing");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RationalVector to_rational(const LatticeVector& v) {
  RationalVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

LatticeVector to_lattice(const RationalVector& v) {
  LatticeVector out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (x.get_den() != 1) throw InputError("non-integral coordinate " + to_string(x));
    out.push_back(x.get_num());
  }
  return out;
}

LatticeVector clear_denominators(const RationalVector& v) {
  Integer l = lcm_of_denominators(v);
  LatticeVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(Rational(x * l).get_num());
  return primitive(out);
}

RationalVector add(const RationalVector& a, const RationalVector& b) {
  RationalVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RationalVector sub(const RationalVector& a, const RationalVector& b) {
  RationalVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

RationalVector scale(const RationalVector& a, const Rational& s) {
  RationalVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * s;
  return out;
}

LatticeVector add(const LatticeVector& a, const LatticeVector& b) {
  LatticeVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

LatticeVector negate(const LatticeVector& a) {
  LatticeVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

bool fits_int64(const Integer& z) { return mpz_fits_slong_p(z.get_mpz_t()) != 0 && sizeof(long) == 8; }

std::int64_t to_int64(const Integer& z) {
  if (!fits_int64(z)) throw InternalError("integer does not fit in 64 bits");
  return static_cast<std::int64_t>(z.get_si());
}

}  // namespace finepoly
