#include "cremona/bivariate_polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace cremona {

BivariatePolynomial BivariatePolynomial::monomial(int i, int j, const Rational& coeff) {
    if (i < 0 || j < 0) {
        throw std::invalid_argument("monomial: negative exponent");
    }
    BivariatePolynomial p;
    p.add_term(i, j, coeff);
    return p;
}

Rational BivariatePolynomial::coefficient(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Rational(0) : it->second;
}

void BivariatePolynomial::add_term(int i, int j, const Rational& coeff) {
    if (i < 0 || j < 0) {
        throw std::invalid_argument("add_term: negative exponent");
    }
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace({i, j}, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational BivariatePolynomial::evaluate(const Rational& a, const Rational& b) const {
    Rational value = 0;
    for (const auto& [exp, coeff] : terms_) {
        value += coeff * rational_pow(a, static_cast<unsigned>(exp.first)) *
                 rational_pow(b, static_cast<unsigned>(exp.second));
    }
    return value;
}

BivariatePolynomial BivariatePolynomial::operator+(const BivariatePolynomial& other) const {
    BivariatePolynomial result = *this;
    for (const auto& [exp, coeff] : other.terms_) {
        result.add_term(exp.first, exp.second, coeff);
    }
    return result;
}

BivariatePolynomial BivariatePolynomial::operator-(const BivariatePolynomial& other) const {
    BivariatePolynomial result = *this;
    for (const auto& [exp, coeff] : other.terms_) {
        result.add_term(exp.first, exp.second, -coeff);
    }
    return result;
}

BivariatePolynomial BivariatePolynomial::operator*(const BivariatePolynomial& other) const {
    BivariatePolynomial result;
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : other.terms_) {
            result.add_term(e1.first + e2.first, e1.second + e2.second, c1 * c2);
        }
    }
    return result;
}

std::string BivariatePolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [exp, coeff] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << cremona::to_string(coeff);
        if (exp.first > 0) out << "*a^" << exp.first;
        if (exp.second > 0) out << "*b^" << exp.second;
    }
    return out.str();
}

}  // namespace cremona
