#pragma once

#include "cremona/rational.hpp"

namespace cremona {

// C(n,k); 0 when k < 0 or k > n. Negative n rejected.
Integer binomial(int n, int k);

Integer factorial(int n);

// Terminating Gauss series sum_{j=0}^{-a} (a)_j (b)_j / ((c)_j j!) z^j with
// rising factorials (x)_0 = 1, (x)_j = x(x+1)...(x+j-1).
// Requires a <= 0 (termination) and c > 0 (no Pochhammer zero in the
// denominator within the summation range).
Rational hypergeom_terminating(long long a, long long b, long long c, const Rational& z);

}  // namespace cremona
