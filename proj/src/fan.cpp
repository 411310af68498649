#include "cremona/fan.hpp"

#include "cremona/desk_guard.hpp"
#include "cremona/lp.hpp"
#include "cremona/polytope.hpp"
#include "cremona/rational_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace cremona {

namespace {

// Primitive integer vector in the direction of v.
std::vector<Integer> primitive(const std::vector<Rational>& v) {
    Integer common_den = 1;
    for (const auto& x : v) common_den = lcm(common_den, denominator(x));
    std::vector<Integer> scaled(v.size());
    Integer common_gcd = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        scaled[i] = numerator(v[i]) * (common_den / denominator(v[i]));
        common_gcd = gcd(common_gcd, scaled[i]);
    }
    if (common_gcd == 0) {
        throw std::invalid_argument("primitive: zero vector");
    }
    for (auto& x : scaled) x /= common_gcd;
    return scaled;
}

}  // namespace

std::vector<SimplicialCone> fan_delta(int n) {
    if (n < 1) {
        throw std::invalid_argument("fan_delta: n must be positive");
    }
    std::vector<std::vector<Integer>> rays(n + 1, std::vector<Integer>(n, Integer(0)));
    for (int j = 0; j < n; ++j) rays[0][j] = -1;  // e_0 = -(e_1 + ... + e_n)
    for (int i = 1; i <= n; ++i) rays[i][i - 1] = 1;

    std::vector<SimplicialCone> cones;
    cones.reserve(n + 1);
    for (int i = 0; i <= n; ++i) {
        std::vector<std::vector<Integer>> generators;
        generators.reserve(n);
        for (int j = 0; j <= n; ++j) {
            if (j != i) generators.push_back(rays[j]);
        }
        std::vector<LinearConstraint> constraints;
        constraints.reserve(n);
        for (int omit = 0; omit < n; ++omit) {
            std::vector<Rational> direction;
            if (n == 1) {
                direction = {Rational(1)};
            } else {
                RationalMatrix others(n - 1, n);
                int row = 0;
                for (int t = 0; t < n; ++t) {
                    if (t == omit) continue;
                    for (int c = 0; c < n; ++c) others.at(row, c) = Rational(generators[t][c]);
                    ++row;
                }
                const auto basis = kernel_basis(std::move(others));
                if (basis.size() != 1) {
                    throw std::logic_error("fan_delta: generators must be linearly independent");
                }
                direction = basis[0];
            }
            std::vector<Integer> normal = primitive(direction);
            Integer side = 0;
            for (int c = 0; c < n; ++c) side += normal[c] * generators[omit][c];
            if (side > 0) {
                for (auto& x : normal) x = -x;
            } else if (side == 0) {
                throw std::logic_error("fan_delta: facet normal orthogonal to omitted ray");
            }
            LinearConstraint constraint;
            constraint.normal.reserve(n);
            for (const auto& x : normal) constraint.normal.emplace_back(x);
            constraint.offset = 0;
            constraints.push_back(std::move(constraint));
        }
        cones.push_back(SimplicialCone{n, std::move(generators),
                                       HPolyhedron(n, std::move(constraints))});
    }
    return cones;
}

std::vector<RefinementCell> common_refinement(int n) {
    if (n < 2) {
        throw std::invalid_argument("common_refinement: n must be at least 2");
    }
    const int cap = guard_cap(4);
    if (n > cap) {
        std::ostringstream msg;
        msg << "refinement guard: pairwise cone LP out of desk range (n = " << n
            << " > cap " << cap << ")";
        throw std::runtime_error(msg.str());
    }
    const auto cones = fan_delta(n);
    std::vector<RefinementCell> cells;
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= n; ++j) {
            std::vector<LinearConstraint> combined = cones[i].h_rep.constraints();
            for (LinearConstraint c : cones[j].h_rep.constraints()) {
                for (auto& x : c.normal) x = -x;  // x in -sigma_j iff -x in sigma_j
                combined.push_back(std::move(c));
            }
            HPolyhedron cell(n, std::move(combined));
            if (is_full_dimensional(cell)) {
                cells.push_back(RefinementCell{i, j, std::move(cell)});
            }
        }
    }
    return cells;
}

std::pair<Rational, Rational> covering_check(int n) {
    if (n < 2) {
        throw std::invalid_argument("covering_check: n must be at least 2");
    }
    const int cap = guard_cap(3);
    if (n > cap) {
        std::ostringstream msg;
        msg << "covering guard: clipped-cell volumes out of desk range (n = " << n
            << " > cap " << cap << ")";
        throw std::runtime_error(msg.str());
    }
    Rational total = 0;
    for (const auto& cell : common_refinement(n)) {
        std::vector<LinearConstraint> clipped = cell.cell.constraints();
        for (int t = 0; t < n; ++t) {
            LinearConstraint upper;
            upper.normal.assign(n, Rational(0));
            upper.normal[t] = 1;
            upper.offset = 1;
            clipped.push_back(std::move(upper));
            LinearConstraint lower;
            lower.normal.assign(n, Rational(0));
            lower.normal[t] = -1;
            lower.offset = 1;
            clipped.push_back(std::move(lower));
        }
        const auto vertices = vertex_enumeration(HPolyhedron(n, std::move(clipped)));
        total += volume(VPolytope::from_extreme_points(n, vertices));
    }
    return {total, rational_pow(Rational(2), static_cast<unsigned>(n))};
}

}  // namespace cremona
