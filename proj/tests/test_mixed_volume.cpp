#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cremona/combinatorics.hpp"
#include "cremona/mixed_volume.hpp"
#include "cremona/polytope.hpp"
#include "cremona/rational.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

using namespace cremona;

namespace {

MixedVolumeQuery query(std::vector<VPolytope> bodies) {
    MixedVolumeQuery q;
    q.dimension = bodies.empty() ? 0 : bodies.front().dimension();
    q.bodies = std::move(bodies);
    return q;
}

VPolytope hexagon() {
    return minkowski_sum(standard_simplex(2), negate(standard_simplex(2)));
}

}  // namespace

TEST_CASE("mixed coefficient reference values") {
    const VPolytope d2 = standard_simplex(2);
    const VPolytope n2 = negate(d2);
    CHECK(mixed_coefficient(query({d2, d2})) == 1);
    CHECK(mixed_coefficient(query({d2, n2})) == 2);

    const VPolytope d3 = standard_simplex(3);
    const VPolytope n3 = negate(d3);
    CHECK(mixed_coefficient(query({d3, d3, n3})) == 3);
}

TEST_CASE("mixed coefficient validates its query") {
    const VPolytope d2 = standard_simplex(2);
    CHECK_THROWS_AS(mixed_coefficient(query({d2})), std::invalid_argument);
    MixedVolumeQuery mismatched;
    mismatched.dimension = 2;
    mismatched.bodies = {d2, standard_simplex(3)};
    CHECK_THROWS_AS(mixed_coefficient(mismatched), std::invalid_argument);
}

TEST_CASE("mixed coefficient is symmetric in its bodies") {
    const VPolytope d3 = standard_simplex(3);
    const VPolytope n3 = negate(d3);
    const VPolytope box(3, {{0, 0, 0},
                            {0, 0, 1},
                            {0, 1, 0},
                            {0, 1, 1},
                            {1, 0, 0},
                            {1, 0, 1},
                            {1, 1, 0},
                            {1, 1, 1}});
    std::vector<VPolytope> bodies = {d3, n3, box};
    std::sort(bodies.begin(), bodies.end(), [](const VPolytope& a, const VPolytope& b) {
        return a.vertices() < b.vertices();
    });
    const Rational reference = mixed_coefficient(query(bodies));
    int permutations = 0;
    do {
        CHECK(mixed_coefficient(query(bodies)) == reference);
        ++permutations;
    } while (std::next_permutation(
        bodies.begin(), bodies.end(),
        [](const VPolytope& a, const VPolytope& b) { return a.vertices() < b.vertices(); }));
    CHECK(permutations == 6);
}

TEST_CASE("repeated-body queries reduce to n! times the volume") {
    for (int n = 1; n <= 3; ++n) {
        const VPolytope simplex = standard_simplex(n);
        CHECK(mixed_coefficient(query(std::vector<VPolytope>(n, simplex))) ==
              Rational(factorial(n) * volume(simplex)));
        const VPolytope doubled = dilate(simplex, 2);
        CHECK(mixed_coefficient(query(std::vector<VPolytope>(n, doubled))) ==
              Rational(factorial(n) * volume(doubled)));
    }
    const VPolytope hex = hexagon();
    CHECK(mixed_coefficient(query({hex, hex})) == Rational(factorial(2) * volume(hex)));
}

TEST_CASE("multilinearity in the first slot") {
    const VPolytope d2 = standard_simplex(2);
    const VPolytope doubled = minkowski_sum(d2, d2);
    for (const VPolytope& q : {d2, negate(d2)}) {
        CHECK(mixed_coefficient(query({doubled, q})) ==
              Rational(2 * mixed_coefficient(query({d2, q}))));
    }
}

TEST_CASE("multidegree reference values") {
    CHECK(multidegree_by_mixed_volume(4, 0) == 1);
    CHECK(multidegree_by_mixed_volume(4, 2) == 6);
    CHECK(multidegree_by_mixed_volume(6, 3) == 20);
    CHECK(multidegree_by_coefficient_extraction(4, 4) == 1);
    CHECK(multidegree_by_coefficient_extraction(2, 1) == 2);
    CHECK(multidegree_by_coefficient_extraction(8, 3) == 56);
}

TEST_CASE("multidegree paths agree with the binomial closed form") {
    for (int n = 2; n <= 8; ++n) {
        for (int k = 0; k <= n; ++k) {
            const Integer expected = binomial(n, k);
            CHECK(multidegree_by_mixed_volume(n, k) == expected);
            CHECK(multidegree_by_coefficient_extraction(n, k) == expected);
        }
    }
}

TEST_CASE("multidegree sequences are symmetric and log-concave") {
    for (int n = 2; n <= 8; ++n) {
        std::vector<Integer> d;
        for (int k = 0; k <= n; ++k) {
            d.push_back(multidegree_by_mixed_volume(n, k));
        }
        for (int k = 0; k <= n; ++k) {
            CHECK(d[k] == d[n - k]);
        }
        for (int k = 1; k <= n - 1; ++k) {
            CHECK(d[k] * d[k] >= d[k - 1] * d[k + 1]);
        }
    }
}

TEST_CASE("k out of range is rejected") {
    CHECK_THROWS_AS(multidegree_by_mixed_volume(3, -1), std::invalid_argument);
    CHECK_THROWS_AS(multidegree_by_mixed_volume(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(multidegree_by_coefficient_extraction(3, -1), std::invalid_argument);
    CHECK_THROWS_AS(multidegree_by_coefficient_extraction(3, 4), std::invalid_argument);
}

TEST_CASE("general bodies route through the triangulation oracle") {
    // Mixed coefficient of (hexagon, hexagon) already covered; mix a general
    // body with a simplex to leave the closed-form fast path.
    const VPolytope hex = hexagon();
    const VPolytope d2 = standard_simplex(2);
    // V(hex + d2) - V(hex) - V(d2) for the 2-body polarization.
    const Rational direct = Rational(volume(minkowski_sum(hex, d2)) - volume(hex) - volume(d2));
    CHECK(mixed_coefficient(query({hex, d2})) == direct);
    // hexagon = delta + (-delta), so multilinearity gives d_1 + d_1' where
    // both terms are mixed coefficients of signed simplexes.
    CHECK(mixed_coefficient(query({hex, d2})) ==
          Rational(mixed_coefficient(query({d2, d2})) +
                   mixed_coefficient(query({negate(d2), d2}))));
}
