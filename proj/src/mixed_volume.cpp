#include "cremona/mixed_volume.hpp"

#include "cremona/combinatorics.hpp"

#include <bit>
#include <map>
#include <stdexcept>

namespace cremona {

namespace {

// Subset-sum volumes grouped by (picked plus-simplexes, picked minus-simplexes):
// C(k,p) C(n-k,m) subsets share the volume closed form at (p, m).
Rational coefficient_for_signed_simplexes(int n, int k) {
    Rational sum = 0;
    for (int p = 0; p <= k; ++p) {
        for (int m = 0; m <= n - k; ++m) {
            if (p + m == 0) continue;
            const Rational vol = volume_closed_form(Rational(p), Rational(m), n);
            const Integer ways = binomial(k, p) * binomial(n - k, m);
            const int sign = ((n - p - m) % 2 == 0) ? 1 : -1;
            sum += Rational(sign) * Rational(ways) * vol;
        }
    }
    return sum;
}

Rational coefficient_general(const MixedVolumeQuery& q) {
    const std::size_t n = q.dimension;
    if (n >= 32) {
        throw std::runtime_error(
            "mixed volume guard: general bodies limited to dimension < 32");
    }
    // Subset sums built incrementally: sum(S) = sum(S minus lowest bit) + body.
    std::map<std::uint32_t, VPolytope> sums;
    Rational total = 0;
    for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << n); ++mask) {
        const std::uint32_t low = mask & (mask - 1);
        const std::size_t low_index = [&] {
            std::uint32_t bit = mask & ~low;
            std::size_t i = 0;
            while (bit >>= 1) ++i;
            return i;
        }();
        const VPolytope& body = q.bodies[low_index];
        auto [it, inserted] = sums.try_emplace(
            mask, low == 0 ? body : minkowski_sum(sums.at(low), body));
        const int bits = std::popcount(mask);
        const int sign = ((static_cast<int>(n) - bits) % 2 == 0) ? 1 : -1;
        total += Rational(sign) * volume(it->second);
    }
    return total;
}

}  // namespace

Rational mixed_coefficient(const MixedVolumeQuery& q) {
    const std::size_t n = q.dimension;
    if (n == 0) {
        throw std::invalid_argument("mixed_coefficient: dimension must be positive");
    }
    if (q.bodies.size() != n) {
        throw std::invalid_argument("mixed_coefficient: dimension mismatch (need n bodies)");
    }
    for (const auto& body : q.bodies) {
        if (body.dimension() != n) {
            throw std::invalid_argument("mixed_coefficient: dimension mismatch (body)");
        }
    }
    const VPolytope simplex = standard_simplex(static_cast<int>(n));
    const VPolytope negated = negate(simplex);
    int plus_count = 0;
    bool all_signed_simplexes = true;
    for (const auto& body : q.bodies) {
        if (body == simplex) {
            ++plus_count;
        } else if (!(body == negated)) {
            all_signed_simplexes = false;
            break;
        }
    }
    if (all_signed_simplexes) {
        return coefficient_for_signed_simplexes(static_cast<int>(n), plus_count);
    }
    return coefficient_general(q);
}

Integer multidegree_by_mixed_volume(int n, int k) {
    if (n < 1) {
        throw std::invalid_argument("multidegree_by_mixed_volume: n must be positive");
    }
    if (k < 0 || k > n) {
        throw std::invalid_argument("multidegree_by_mixed_volume: k out of range");
    }
    return to_integer(coefficient_for_signed_simplexes(n, k));
}

Integer multidegree_by_coefficient_extraction(int n, int k) {
    if (n < 1) {
        throw std::invalid_argument("multidegree_by_coefficient_extraction: n must be positive");
    }
    if (k < 0 || k > n) {
        throw std::invalid_argument("multidegree_by_coefficient_extraction: k out of range");
    }
    const Rational coeff = volume_polynomial(n).coefficient(k, n - k);
    return to_integer(Rational(factorial(k) * factorial(n - k)) * coeff);
}

}  // namespace cremona
