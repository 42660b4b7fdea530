#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>
#include <string_view>

namespace intervar {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number. Always stored in lowest terms with a positive
/// denominator; every operation is exact, no floating point is involved.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long long value) : value_(value) {}
    Rational(const BigInt& value) : value_(value) {}
    Rational(long long numerator, long long denominator);
    Rational(const BigInt& numerator, const BigInt& denominator);

    /// Parses "3", "-7", "6/5", "-6/5", "3.9" or ".9". Decimal literals are
    /// read exactly (3.9 becomes 39/10). Throws std::invalid_argument on
    /// malformed input or a zero denominator.
    static Rational parse(std::string_view text);

    BigInt numerator() const { return boost::multiprecision::numerator(value_); }
    BigInt denominator() const { return boost::multiprecision::denominator(value_); }

    bool is_zero() const { return value_.is_zero(); }
    bool is_negative() const { return value_ < 0; }
    bool is_integer() const { return denominator() == 1; }

    int sign() const { return value_ < 0 ? -1 : value_.is_zero() ? 0 : 1; }

    /// Renders as "p" when the denominator is 1, otherwise "p/q".
    std::string str() const;

    Rational& operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
    Rational& operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
    Rational& operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const { Rational r; r.value_ = -value_; return r; }

    friend bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.value_ == rhs.value_; }
    friend bool operator!=(const Rational& lhs, const Rational& rhs) { return lhs.value_ != rhs.value_; }
    friend bool operator<(const Rational& lhs, const Rational& rhs) { return lhs.value_ < rhs.value_; }
    friend bool operator<=(const Rational& lhs, const Rational& rhs) { return lhs.value_ <= rhs.value_; }
    friend bool operator>(const Rational& lhs, const Rational& rhs) { return lhs.value_ > rhs.value_; }
    friend bool operator>=(const Rational& lhs, const Rational& rhs) { return lhs.value_ >= rhs.value_; }

private:
    boost::multiprecision::cpp_rational value_;
};

Rational abs(const Rational& value);

inline Rational midpoint(const Rational& lo, const Rational& hi) {
    return (lo + hi) / Rational(2);
}

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace intervar
