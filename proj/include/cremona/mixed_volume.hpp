#pragma once

#include "cremona/polytope.hpp"
#include "cremona/rational.hpp"

#include <cstddef>
#include <vector>

namespace cremona {

// Exactly `dimension` bodies, each a polytope of that dimension.
struct MixedVolumeQuery {
    std::size_t dimension = 0;
    std::vector<VPolytope> bodies;
};

// Coefficient of v_1...v_n in Vol(v_1 P_1 + ... + v_n P_n), computed by
// inclusion-exclusion over subset sums:
//   sum over nonempty S of (-1)^(n-|S|) Vol(sum_{i in S} P_i).
// Queries whose bodies all equal delta_n or -delta_n use the closed-form
// volume (terms grouped by how many of each body a subset picks); general
// bodies go through the triangulation oracle and its desk guard.
Rational mixed_coefficient(const MixedVolumeQuery& q);

// The coefficient above with k copies of delta_n and n-k of -delta_n.
Integer multidegree_by_mixed_volume(int n, int k);

// k!(n-k)! times the a^k b^(n-k) coefficient of the volume polynomial.
Integer multidegree_by_coefficient_extraction(int n, int k);

}  // namespace cremona
