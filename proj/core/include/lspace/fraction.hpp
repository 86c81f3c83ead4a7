#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>

namespace lspace {

/// Exact arbitrary-precision integer used everywhere instead of floating point.
using Int = boost::multiprecision::cpp_int;

/// Reduced rational number with positive denominator.
class Fraction {
public:
    Fraction() : num_(0), den_(1) {}
    Fraction(Int n) : num_(std::move(n)), den_(1) {} // NOLINT: implicit from integers is intended
    Fraction(long long n) : num_(n), den_(1) {}      // NOLINT
    Fraction(Int n, Int d);

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    /// Largest integer <= value (true floor, also for negatives).
    Int floor() const;

    Fraction reciprocal() const;

    Fraction operator-() const;
    Fraction operator+(const Fraction& o) const;
    Fraction operator-(const Fraction& o) const;
    Fraction operator*(const Fraction& o) const;
    Fraction operator/(const Fraction& o) const;

    bool operator==(const Fraction& o) const { return num_ == o.num_ && den_ == o.den_; }
    std::strong_ordering operator<=>(const Fraction& o) const;

    std::string str() const;

private:
    Int num_;
    Int den_; // > 0, gcd(|num|, den) == 1
};

std::ostream& operator<<(std::ostream& os, const Fraction& f);

/// Mediant (a+b)/(p+q) of two fractions; not reduced by construction but the
/// returned value is normalized.
Fraction mediant(const Fraction& a, const Fraction& b);

} // namespace lspace
