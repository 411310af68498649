#include "cremona/combinatorics.hpp"

#include <stdexcept>

namespace cremona {

Integer binomial(int n, int k) {
    if (n < 0) {
        throw std::invalid_argument("binomial: n must be non-negative");
    }
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Integer result = 1;
    for (int i = 1; i <= k; ++i) {
        result *= n - i + 1;
        result /= i;  // exact: product of i consecutive integers is divisible by i!
    }
    return result;
}

Integer factorial(int n) {
    if (n < 0) {
        throw std::invalid_argument("factorial: n must be non-negative");
    }
    Integer result = 1;
    for (int i = 2; i <= n; ++i) result *= i;
    return result;
}

Rational hypergeom_terminating(long long a, long long b, long long c, const Rational& z) {
    if (a > 0) {
        throw std::invalid_argument("hypergeom_terminating: first parameter must be <= 0");
    }
    if (c <= 0) {
        throw std::invalid_argument("hypergeom_terminating: third parameter must be positive");
    }
    Rational sum = 1;
    Rational term = 1;
    for (long long j = 1; j <= -a; ++j) {
        term *= Rational(a + j - 1) * Rational(b + j - 1);
        term /= Rational(c + j - 1) * Rational(j);
        term *= z;
        sum += term;
    }
    return sum;
}

}  // namespace cremona
