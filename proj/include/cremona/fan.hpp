#pragma once

#include "cremona/hpolyhedron.hpp"
#include "cremona/rational.hpp"

#include <utility>
#include <vector>

namespace cremona {

// Maximal cone of the fan of P^n: sigma_i is generated by {e_j : j != i}
// where e_0 = -(e_1 + ... + e_n). The h_rep has one homogeneous inequality
// per omitted generator, oriented so the cone satisfies it.
struct SimplicialCone {
    int dimension = 0;
    std::vector<std::vector<Integer>> generators;
    HPolyhedron h_rep;
};

// Full-dimensional cell sigma_i intersect (-sigma_j) of the common
// refinement of the fan and its negation.
struct RefinementCell {
    int source_delta = 0;
    int source_negative = 0;
    HPolyhedron cell;
};

// The n+1 maximal cones sigma_0..sigma_n. n >= 1.
std::vector<SimplicialCone> fan_delta(int n);

// All pairs (i, j) whose intersection is full-dimensional, in lexicographic
// order. Guarded to 2 <= n <= 4 by default.
std::vector<RefinementCell> common_refinement(int n);

// Clips every refinement cell to [-1,1]^n and returns (sum of clipped cell
// volumes, box volume 2^n); equality certifies that the cells cover the box
// with disjoint interiors. Guarded to 2 <= n <= 3 by default.
std::pair<Rational, Rational> covering_check(int n);

}  // namespace cremona
