#include "orbiheat/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace orbiheat {

namespace {

Rational::Integer parse_integer(std::string_view text, std::string_view whole) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        negative = text[i] == '-';
        ++i;
    }
    if (i == text.size()) {
        throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    }
    Rational::Integer value = 0;
    for (; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
            throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
        }
        value = value * 10 + (text[i] - '0');
    }
    return negative ? Rational::Integer(-value) : value;
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    value_ = boost::multiprecision::cpp_rational(num) / boost::multiprecision::cpp_rational(den);
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text, text));
    }
    return Rational(parse_integer(text.substr(0, slash), text),
                    parse_integer(text.substr(slash + 1), text));
}

Rational::Integer Rational::numerator() const { return boost::multiprecision::numerator(value_); }

Rational::Integer Rational::denominator() const { return boost::multiprecision::denominator(value_); }

bool Rational::is_integer() const { return denominator() == 1; }

int Rational::sign() const { return value_.sign(); }

Rational::Integer Rational::floor() const {
    const Integer num = numerator();
    const Integer den = denominator();
    Integer q = num / den;  // truncates toward zero
    if (num < 0 && q * den != num) {
        --q;
    }
    return q;
}

double Rational::to_double() const { return value_.convert_to<double>(); }

std::string Rational::str() const {
    if (is_integer()) {
        return numerator().str();
    }
    return numerator().str() + "/" + denominator().str();
}

Rational Rational::operator-() const {
    Rational r;
    r.value_ = -value_;
    return r;
}

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
    if (rhs.value_ == 0) {
        throw std::domain_error("rational division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

}  // namespace orbiheat
