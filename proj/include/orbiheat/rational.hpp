#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace orbiheat {

/// Exact fraction over arbitrary-precision integers. Always stored in lowest
/// terms with a positive denominator.
class Rational {
public:
    using Integer = boost::multiprecision::cpp_int;

    Rational() = default;

    template <std::integral T>
    Rational(T value) : value_(static_cast<std::int64_t>(value)) {}  // NOLINT(google-explicit-constructor)

    explicit Rational(const Integer& value) : value_(value) {}

    /// Throws std::domain_error when den == 0.
    Rational(const Integer& num, const Integer& den);

    /// Accepts "p", "-p", "p/q" (q may be negative; the result is normalized).
    static Rational parse(std::string_view text);

    Integer numerator() const;
    Integer denominator() const;

    bool is_integer() const;
    int sign() const;
    /// Greatest integer not exceeding the value.
    Integer floor() const;
    double to_double() const;

    /// "p" for integers, "p/q" otherwise.
    std::string str() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    boost::multiprecision::cpp_rational value_;
};

}  // namespace orbiheat
