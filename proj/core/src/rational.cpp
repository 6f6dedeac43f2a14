#include "graphdim/rational.hpp"

#include "graphdim/errors.hpp"

#include <cctype>
#include <ostream>

namespace graphdim {

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

Rational::Integer parse_integer(std::string_view s) {
    if (!is_integer_literal(s))
        throw InvalidInput("not a rational literal: '" + std::string(s) + "'");
    if (s.front() == '+')
        s.remove_prefix(1);
    return Rational::Integer(std::string(s));
}

} // namespace

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0)
        throw InvalidInput("rational with zero denominator");
    value_ = den < 0 ? Value(-num, -den) : Value(num, den);
}

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text), Integer(1));
    return Rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

Rational::Integer Rational::numerator() const {
    return boost::multiprecision::numerator(value_);
}

Rational::Integer Rational::denominator() const {
    return boost::multiprecision::denominator(value_);
}

bool Rational::is_integer() const {
    return denominator() == 1;
}

double Rational::to_double() const {
    return value_.convert_to<double>();
}

std::string Rational::str() const {
    if (is_integer())
        return numerator().str();
    return numerator().str() + "/" + denominator().str();
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.value_ == 0)
        throw InvalidInput("rational division by zero");
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::operator-() const {
    return Rational(Value(-value_));
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = a.value_.compare(b.value_);
    if (c < 0)
        return std::strong_ordering::less;
    if (c > 0)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace graphdim
