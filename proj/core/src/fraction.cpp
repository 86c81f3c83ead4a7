#include "lspace/fraction.hpp"

#include "lspace/errors.hpp"

#include <ostream>
#include <utility>

namespace lspace {

Fraction::Fraction(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_ == 0)
        throw domain_error("fraction with zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    Int g = boost::multiprecision::gcd(num_ < 0 ? Int(-num_) : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Int Fraction::floor() const {
    Int q = num_ / den_; // truncates toward zero
    if (num_ < 0 && q * den_ != num_)
        --q;
    return q;
}

Fraction Fraction::reciprocal() const {
    if (num_ == 0)
        throw domain_error("reciprocal of zero");
    return Fraction(den_, num_);
}

Fraction Fraction::operator-() const { return Fraction(-num_, den_); }

Fraction Fraction::operator+(const Fraction& o) const {
    return Fraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Fraction Fraction::operator-(const Fraction& o) const {
    return Fraction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Fraction Fraction::operator*(const Fraction& o) const {
    return Fraction(num_ * o.num_, den_ * o.den_);
}

Fraction Fraction::operator/(const Fraction& o) const {
    if (o.num_ == 0)
        throw domain_error("division by zero fraction");
    return Fraction(num_ * o.den_, den_ * o.num_);
}

std::strong_ordering Fraction::operator<=>(const Fraction& o) const {
    Int lhs = num_ * o.den_;
    Int rhs = o.num_ * den_;
    if (lhs < rhs)
        return std::strong_ordering::less;
    if (lhs > rhs)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Fraction::str() const {
    std::string s = num_.str();
    if (den_ != 1)
        s += "/" + den_.str();
    return s;
}

std::ostream& operator<<(std::ostream& os, const Fraction& f) { return os << f.str(); }

Fraction mediant(const Fraction& a, const Fraction& b) {
    return Fraction(a.num() + b.num(), a.den() + b.den());
}

} // namespace lspace
