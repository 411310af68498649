#pragma once

#include "cremona/rational.hpp"

#include <map>
#include <string>
#include <utility>

namespace cremona {

// Polynomial in two variables a, b with rational coefficients.
// Zero coefficients are never stored.
class BivariatePolynomial {
public:
    using ExponentPair = std::pair<int, int>;  // (i, j) for a^i b^j

    BivariatePolynomial() = default;

    static BivariatePolynomial monomial(int i, int j, const Rational& coeff);

    const std::map<ExponentPair, Rational>& terms() const { return terms_; }

    // Coefficient of a^i b^j, 0 when absent.
    Rational coefficient(int i, int j) const;

    // Accumulates coeff onto a^i b^j, dropping the term if it cancels.
    void add_term(int i, int j, const Rational& coeff);

    Rational evaluate(const Rational& a, const Rational& b) const;

    BivariatePolynomial operator+(const BivariatePolynomial& other) const;
    BivariatePolynomial operator-(const BivariatePolynomial& other) const;
    BivariatePolynomial operator*(const BivariatePolynomial& other) const;

    bool operator==(const BivariatePolynomial& other) const = default;

    std::string to_string() const;

private:
    std::map<ExponentPair, Rational> terms_;
};

}  // namespace cremona
