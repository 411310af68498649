#pragma once

#include "cremona/rational.hpp"

#include <cstddef>
#include <vector>

namespace cremona {

using Point = std::vector<Rational>;

// normal . x <= offset
struct LinearConstraint {
    std::vector<Rational> normal;
    Rational offset;

    bool operator==(const LinearConstraint& other) const = default;
};

// Intersection of finitely many closed half-spaces of R^dimension.
// Normals are nonzero and have length = dimension.
class HPolyhedron {
public:
    HPolyhedron(std::size_t dimension, std::vector<LinearConstraint> constraints);

    std::size_t dimension() const { return dimension_; }
    const std::vector<LinearConstraint>& constraints() const { return constraints_; }

    bool contains(const Point& x) const;

private:
    std::size_t dimension_;
    std::vector<LinearConstraint> constraints_;
};

}  // namespace cremona
