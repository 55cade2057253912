#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

#include "montesinos/bigint.hpp"

namespace montesinos {

/// Exact rational p/q, always stored reduced with q > 0.
///
/// The single point at infinity is 1/0; it orders above every finite
/// fraction and may be compared and tested for Farey adjacency, but it
/// does not participate in field arithmetic.
class Fraction {
public:
    Fraction() : num_(0), den_(1) {}
    Fraction(BigInt n) : num_(std::move(n)), den_(1) {}  // NOLINT: implicit by design
    Fraction(long long n) : num_(n), den_(1) {}          // NOLINT
    Fraction(BigInt n, BigInt d);

    static Fraction infinity() { return Fraction(BigInt(1), BigInt(0)); }

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    bool is_infinite() const { return den_ == 0; }
    bool is_zero() const { return num_ == 0 && den_ != 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_negative() const { return num_ < 0; }

    Fraction operator-() const;
    Fraction operator+(const Fraction& o) const;
    Fraction operator-(const Fraction& o) const;
    Fraction operator*(const Fraction& o) const;
    Fraction operator/(const Fraction& o) const;

    Fraction& operator+=(const Fraction& o) { return *this = *this + o; }
    Fraction& operator-=(const Fraction& o) { return *this = *this - o; }
    Fraction& operator*=(const Fraction& o) { return *this = *this * o; }
    Fraction& operator/=(const Fraction& o) { return *this = *this / o; }

    bool operator==(const Fraction& o) const { return num_ == o.num_ && den_ == o.den_; }
    std::strong_ordering operator<=>(const Fraction& o) const;

    Fraction abs() const { return num_ < 0 ? -*this : *this; }

    /// Largest integer <= value. Finite fractions only.
    BigInt floor() const;

    /// Serializes as "p/q" (reduced; "1/0" for infinity).
    std::string str() const;

    /// Parses "p/q" or a bare integer "p".
    static Fraction parse(const std::string& text);

private:
    BigInt num_;
    BigInt den_;  // > 0, or 0 for the infinite slope

    void reduce();
};

/// True iff |p*s - q*r| = 1 for a = p/q, b = r/s in reduced form (infinity = 1/0).
/// These pairs are exactly the pairs joined by an edge of the Farey diagram.
bool is_farey_neighbor(const Fraction& a, const Fraction& b);

/// Canonical (floor-based Euclid) continued fraction expansion.
/// Empty for zero; from_continued_fraction reproduces the input exactly.
std::vector<BigInt> continued_fraction(const Fraction& a);

Fraction from_continued_fraction(const std::vector<BigInt>& terms);

/// The two Stern-Brocot parents (the mediant ancestors) of a reduced fraction.
/// For q >= 2 these are the two Farey neighbors with smaller denominator.
/// For integers one parent is the neighboring integer toward zero and the
/// other is infinity; parents of 0/1 are -1/1 and 1/0.
std::pair<Fraction, Fraction> stern_brocot_parents(const Fraction& a);

}  // namespace montesinos
