#include "intervar/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace intervar {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

[[noreturn]] void bad_literal(std::string_view text) {
    throw std::invalid_argument("not a rational literal: \"" + std::string(text) + "\"");
}

}  // namespace

Rational::Rational(long long numerator, long long denominator)
    : Rational(BigInt(numerator), BigInt(denominator)) {}

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
    if (denominator.is_zero()) throw std::domain_error("rational with zero denominator");
    if (denominator < 0) {
        value_ = boost::multiprecision::cpp_rational(-numerator, -denominator);
    } else {
        value_ = boost::multiprecision::cpp_rational(numerator, denominator);
    }
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("rational division by zero");
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::parse(std::string_view text) {
    std::string_view rest = text;
    bool negative = false;
    if (!rest.empty() && (rest.front() == '+' || rest.front() == '-')) {
        negative = rest.front() == '-';
        rest.remove_prefix(1);
    }
    if (rest.empty()) bad_literal(text);

    BigInt num;
    BigInt den = 1;
    if (auto slash = rest.find('/'); slash != std::string_view::npos) {
        std::string_view num_part = rest.substr(0, slash);
        std::string_view den_part = rest.substr(slash + 1);
        if (!all_digits(num_part) || !all_digits(den_part)) bad_literal(text);
        num = BigInt(std::string(num_part));
        den = BigInt(std::string(den_part));
        if (den.is_zero()) throw std::domain_error("rational with zero denominator");
    } else if (auto dot = rest.find('.'); dot != std::string_view::npos) {
        std::string_view int_part = rest.substr(0, dot);
        std::string_view frac_part = rest.substr(dot + 1);
        if (!frac_part.empty() && !all_digits(frac_part)) bad_literal(text);
        if (!int_part.empty() && !all_digits(int_part)) bad_literal(text);
        if (int_part.empty() && frac_part.empty()) bad_literal(text);
        num = int_part.empty() ? BigInt(0) : BigInt(std::string(int_part));
        for (char c : frac_part) {
            num *= 10;
            num += c - '0';
            den *= 10;
        }
    } else {
        if (!all_digits(rest)) bad_literal(text);
        num = BigInt(std::string(rest));
    }
    if (negative) num = -num;
    return Rational(num, den);
}

std::string Rational::str() const {
    std::string out = numerator().str();
    if (!is_integer()) {
        out += '/';
        out += denominator().str();
    }
    return out;
}

Rational abs(const Rational& value) {
    return value.is_negative() ? -value : value;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
    return os << value.str();
}

}  // namespace intervar
