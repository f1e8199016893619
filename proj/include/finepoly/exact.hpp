#pragma once

// Exact scalar and vector types shared by every module.
//
// Integers and rationals are GMP-backed and arbitrary precision. Points of
// M_Q are RationalVector, elements of the dual lattice N are LatticeVector.
// Vectors are plain std::vector so they order lexicographically with the
// standard comparison operators, which is the tie-break used everywhere.

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace finepoly {

using Integer = mpz_class;
using Rational = mpq_class;

using LatticeVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;

/// Malformed or out-of-contract input supplied by a caller.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A result that theory guarantees was violated; signals a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p", "-p" or "p/q" (q > 0 after sign normalization).
Rational parse_rational(std::string_view token);

/// "p" for integers, "p/q" otherwise, always reduced.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);
std::string to_string(const RationalVector& v);
std::string to_string(const LatticeVector& v);

Rational floor_rational(const Rational& q);
Integer floor_to_integer(const Rational& q);
Integer ceil_to_integer(const Rational& q);

Integer gcd_of(std::span<const Integer> v);
Integer lcm_of_denominators(std::span<const Rational> v);

/// v / gcd(v). Throws InputError on the zero vector.
LatticeVector primitive(const LatticeVector& v);

bool is_zero(std::span<const Integer> v);
bool is_zero(std::span<const Rational> v);
bool is_integral(std::span<const Rational> v);

Rational dot(std::span<const Rational> x, std::span<const Integer> n);
Rational dot(std::span<const Rational> x, std::span<const Rational> y);
Integer dot(std::span<const Integer> a, std::span<const Integer> b);

RationalVector to_rational(const LatticeVector& v);
/// Requires every coordinate to be integral.
LatticeVector to_lattice(const RationalVector& v);

/// Smallest positive integer multiple of v that is integral, made primitive.
/// Used to turn rational directions into lattice directions.
LatticeVector clear_denominators(const RationalVector& v);

RationalVector add(const RationalVector& a, const RationalVector& b);
RationalVector sub(const RationalVector& a, const RationalVector& b);
RationalVector scale(const RationalVector& a, const Rational& s);
LatticeVector add(const LatticeVector& a, const LatticeVector& b);
LatticeVector negate(const LatticeVector& a);

/// Fits in a signed 64-bit integer.
bool fits_int64(const Integer& z);
std::int64_t to_int64(const Integer& z);

}  // namespace finepoly
