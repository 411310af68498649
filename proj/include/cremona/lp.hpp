#pragma once

#include "cremona/hpolyhedron.hpp"
#include "cremona/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace cremona {

// maximize objective . x subject to normal . x <= offset for every
// constraint, x free over Q^dimension.
struct LinearProgram {
    std::size_t dimension = 0;
    std::vector<Rational> objective;
    std::vector<LinearConstraint> constraints;
};

enum class LpStatus { optimal, unbounded, infeasible };

struct LpOutcome {
    LpStatus status;
    std::optional<Point> witness;  // present iff status == optimal
};

// Two-phase primal simplex with Bland's least-index rule; exact throughout.
// Free variables are split into differences of non-negative pairs.
LpOutcome solve(const LinearProgram& lp);

// True iff p is not a convex combination of `others` (feasibility LP over
// barycentric weights). Empty `others` gives true.
bool is_extreme(const Point& p, const std::vector<Point>& others);

// True iff h contains an interior point: maximizes t subject to
// normal . x + t*|normal|_1 <= offset and t <= 1, then tests t > 0.
bool is_full_dimensional(const HPolyhedron& h);

// All basic feasible solutions of a bounded h: every invertible n-subset of
// constraints is solved exactly and solutions violating nothing are kept.
// Result is deduplicated and lexicographically sorted. Unbounded input is an
// error; an empty polyhedron gives an empty list.
std::vector<Point> vertex_enumeration(const HPolyhedron& h);

}  // namespace cremona
