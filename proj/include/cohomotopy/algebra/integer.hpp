#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace cohomotopy::algebra {

/// Arbitrary-precision integer used for every matrix entry and group order.
using Integer = boost::multiprecision::cpp_int;
using IntVector = std::vector<Integer>;

inline Integer abs(const Integer& a) { return a < 0 ? Integer(-a) : a; }

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// Remainder in [0, |m|); m must be nonzero.
Integer mod(const Integer& a, const Integer& m);

/// Floor division.
Integer floor_div(const Integer& a, const Integer& b);

Integer pow(const Integer& base, unsigned exponent);

bool is_prime(const Integer& n);

/// Largest e with p^e | n (n != 0).
unsigned valuation(const Integer& n, const Integer& p);

/// If n = p^r for a prime p and r >= 1, returns true and fills p and r.
bool prime_power(const Integer& n, Integer& p, unsigned& r);

/// Prime factorisation by trial division, ascending primes with exponents.
std::vector<std::pair<Integer, unsigned>> factorize(Integer n);

std::string to_string(const Integer& a);

} // namespace cohomotopy::algebra
