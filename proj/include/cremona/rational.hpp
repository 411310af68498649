#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace cremona {

// Exact scalars. cpp_rational keeps every value reduced with a positive
// denominator, so equality of values is structural equality.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// num/den with any sign of den; den == 0 throws std::invalid_argument.
// (The two-argument cpp_rational constructor rejects negative denominators,
// so normalization happens here.)
Rational make_rational(const Integer& num, const Integer& den);

// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

// Inverse of to_string. Accepts an optional leading sign on the numerator
// only; rejects empty fields, zero denominators and stray characters.
Rational parse_rational(const std::string& text);
Integer parse_integer(const std::string& text);

Integer int_pow(const Integer& base, unsigned exponent);
Rational rational_pow(const Rational& base, unsigned exponent);

// Exact narrowing; throws std::invalid_argument on a non-integer value.
Integer to_integer(const Rational& value);

}  // namespace cremona
