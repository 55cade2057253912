#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace montesinos {

// Arbitrary-precision integer. Solver intermediates (lcm clearing, the
// realization families growing like 2n^2 q) can exceed 64 bits.
using BigInt = boost::multiprecision::cpp_int;

// gcd over nonnegative values; gcd(0,0) = 0.
inline BigInt gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(abs(a), abs(b));
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::lcm(abs(a), abs(b));
}

// Extended Euclid: returns g = gcd(a,b) and (u,v) with u*a + v*b = g.
struct ExtGcd {
    BigInt g, u, v;
};

ExtGcd ext_gcd(BigInt a, BigInt b);

// Inverse of a modulo m (m >= 2, gcd(a,m) = 1), in [1, m-1].
BigInt mod_inverse(const BigInt& a, const BigInt& m);

}  // namespace montesinos
