#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace circparikh {

using BigInt = mpz_class;

/// Exact fraction over arbitrary-precision integers.
///
/// Values are always in lowest terms with a positive denominator, so zero is
/// stored as 0/1 and two equal values share one representation. The text
/// form is "p/q", or just "p" when the denominator is one.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}
    Rational(const BigInt& value) : value_(value) {}
    /// Throws std::domain_error when `denominator` is zero.
    Rational(const BigInt& numerator, const BigInt& denominator);

    /// Parses "p" or "p/q" (optional leading '-'); throws std::invalid_argument.
    static Rational parse(std::string_view text);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    std::string to_string() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    /// Throws std::domain_error on division by zero.
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.value_ == rhs.value_; }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

    friend std::ostream& operator<<(std::ostream& os, const Rational& value);

private:
    explicit Rational(mpq_class value);

    mpq_class value_;
};

}  // namespace circparikh
