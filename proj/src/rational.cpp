#include "circparikh/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace circparikh {

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (digits.empty()) throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    for (char c : digits) {
        if (c < '0' || c > '9') throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    }
    if (text.front() == '+') text.remove_prefix(1);
    return BigInt(std::string(text), 10);
}

}  // namespace

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
    if (denominator == 0) throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
    auto num = parse_integer(text.substr(0, slash), text);
    auto den_text = text.substr(slash + 1);
    if (!den_text.empty() && den_text.front() == '-') {
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    return Rational(num, parse_integer(den_text, text));
}

std::string Rational::to_string() const { return value_.get_str(10); }

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("rational division by zero");
    value_ /= rhs.value_;
    return *this;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    int c = cmp(lhs.value_, rhs.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.to_string(); }

}  // namespace circparikh
