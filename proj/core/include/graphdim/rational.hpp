#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace graphdim {

/// Exact rational number with arbitrary-precision numerator and denominator.
///
/// Values are kept in lowest terms with a positive denominator, so two
/// Rationals compare equal exactly when they denote the same number.
class Rational {
public:
    using Integer = boost::multiprecision::cpp_int;

    Rational() = default;
    Rational(std::int64_t value) : value_(value) {} // NOLINT(google-explicit-constructor)
    Rational(const Integer& num, const Integer& den);

    /// Accepts "p/q" or a plain integer "p"; surrounding spaces are not allowed.
    static Rational parse(std::string_view text);

    Integer numerator() const;
    Integer denominator() const;

    bool is_integer() const;
    bool is_zero() const { return value_ == 0; }
    int sign() const { return value_.sign(); }

    /// Display-only approximation.
    double to_double() const;

    /// "p" for integers, "p/q" otherwise.
    std::string str() const;

    Rational& operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
    Rational& operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
    Rational& operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    using Value = boost::multiprecision::cpp_rational;
    explicit Rational(Value v) : value_(std::move(v)) {}

    Value value_{0};
};

} // namespace graphdim
