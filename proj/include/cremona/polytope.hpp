#pragma once

#include "cremona/bivariate_polynomial.hpp"
#include "cremona/hpolyhedron.hpp"
#include "cremona/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace cremona {

// Polytope by vertices. Canonical form: the list is lexicographically sorted,
// duplicate-free, and every stored point is extreme among the stored points.
class VPolytope {
public:
    // Canonicalizes: deduplicates, drops non-extreme points (LP check), sorts.
    VPolytope(std::size_t dimension, std::vector<Point> points);

    // Caller guarantees the points are distinct and extreme; they are only
    // sorted. Used where canonical form is preserved by construction.
    static VPolytope from_extreme_points(std::size_t dimension, std::vector<Point> points);

    std::size_t dimension() const { return dimension_; }
    const std::vector<Point>& vertices() const { return vertices_; }

    bool operator==(const VPolytope& other) const = default;

private:
    struct Unchecked {};
    VPolytope(Unchecked, std::size_t dimension, std::vector<Point> vertices);

    std::size_t dimension_;
    std::vector<Point> vertices_;
};

// One orthant piece of a*delta_n + b*(-delta_n): the cell with sign vector
// `signs` ('+'/'-' per coordinate) and j = simplex_split plus entries is the
// product a*delta_j x b*delta_{n-j} with volume a^j b^{n-j} / (j!(n-j)!).
struct OrthantCell {
    std::string signs;
    int simplex_split = 0;
    Rational cell_volume;
};

// delta_n: origin and the n standard basis points.
VPolytope standard_simplex(int n);

VPolytope negate(const VPolytope& p);

// c >= 0; c = 0 collapses to the single origin point.
VPolytope dilate(const VPolytope& p, const Rational& c);

VPolytope translate(const VPolytope& p, const Point& t);

// Convex hull of all pairwise vertex sums; only extreme points retained.
VPolytope minkowski_sum(const VPolytope& p, const VPolytope& q);

// Euclidean n-volume by pulling triangulation: apex = lexicographically least
// vertex, facets found by exhaustive search over affinely independent
// n-subsets of vertices whose supporting hyperplane has all vertices on one
// side, facets triangulated recursively. Polytopes of affine dimension < n
// have volume 0. Vertex count is guarded (default cap 200).
Rational volume(const VPolytope& p);

// sum_{j=0}^{n} C(n,j) a^j b^{n-j} / (j!(n-j)!), the volume of
// a*delta_n + b*(-delta_n). Requires a, b >= 0.
Rational volume_closed_form(const Rational& a, const Rational& b, int n);

// The polynomial in (a, b) whose evaluation equals volume_closed_form.
BivariatePolynomial volume_polynomial(int n);

// The 2^n orthant cells of a*delta_n + b*(-delta_n), one per sign vector,
// in mask order (coordinate t is '+' when bit t of the cell index is set).
std::vector<OrthantCell> orthant_decomposition(const Rational& a, const Rational& b, int n);

}  // namespace cremona
