#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace relhom {

using Integer = boost::multiprecision::cpp_int;

/// Non-negative gcd; gcd(0, 0) == 0.
Integer gcd(const Integer& a, const Integer& b);

/// Extended gcd: returns g = gcd(a, b) >= 0 together with x, y such that
/// a*x + b*y == g.
struct GcdResult {
  Integer g;
  Integer x;
  Integer y;
};
GcdResult extended_gcd(const Integer& a, const Integer& b);

/// Representative of a in [0, m) for m > 0. For m == 0 returns a unchanged
/// ("mod 0" is equality in Z).
Integer reduce(const Integer& a, const Integer& m);

/// Inverse of a modulo m (m >= 1, gcd(a, m) == 1).
Integer inverse_mod(const Integer& a, const Integer& m);

/// Prime factorisation by trial division, primes ascending. n >= 1.
struct PrimePower {
  Integer prime;
  unsigned exponent = 0;
  Integer value;  // prime^exponent
};
std::vector<PrimePower> factorize(const Integer& n);

bool is_prime_power(const Integer& n);

std::string to_string(const Integer& a);
Integer parse_integer(const std::string& text);

}  // namespace relhom
