#include "cremona/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace cremona {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) {
        throw std::invalid_argument("make_rational: zero denominator");
    }
    // Division through Rational normalizes sign and reduces.
    return Rational(num) / Rational(den);
}

std::string to_string(const Rational& value) {
    return value.str();
}

std::string to_string(const Integer& value) {
    return value.str();
}

namespace {

bool valid_decimal(const std::string& s, size_t from, size_t to) {
    if (from >= to) return false;
    for (size_t i = from; i < to; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

Integer parse_integer(const std::string& text) {
    size_t start = 0;
    if (!text.empty() && (text[0] == '+' || text[0] == '-')) start = 1;
    if (!valid_decimal(text, start, text.size())) {
        throw std::invalid_argument("parse_integer: malformed integer '" + text + "'");
    }
    Integer v(text.substr(start));
    return text[0] == '-' ? Integer(-v) : v;
}

Rational parse_rational(const std::string& text) {
    const size_t slash = text.find('/');
    if (slash == std::string::npos) {
        return Rational(parse_integer(text));
    }
    const Integer num = parse_integer(text.substr(0, slash));
    const std::string den_text = text.substr(slash + 1);
    if (!valid_decimal(den_text, 0, den_text.size())) {
        throw std::invalid_argument("parse_rational: malformed denominator '" + text + "'");
    }
    const Integer den(den_text);
    if (den == 0) {
        throw std::invalid_argument("parse_rational: zero denominator '" + text + "'");
    }
    return make_rational(num, den);
}

Integer int_pow(const Integer& base, unsigned exponent) {
    return boost::multiprecision::pow(base, exponent);
}

Rational rational_pow(const Rational& base, unsigned exponent) {
    if (exponent == 0) return Rational(1);
    return make_rational(int_pow(numerator(base), exponent),
                         int_pow(denominator(base), exponent));
}

Integer to_integer(const Rational& value) {
    if (denominator(value) != 1) {
        throw std::invalid_argument("to_integer: " + to_string(value) + " is not an integer");
    }
    return numerator(value);
}

}  // namespace cremona
