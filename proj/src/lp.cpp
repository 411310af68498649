#include "cremona/lp.hpp"

#include "cremona/rational_matrix.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace cremona {

HPolyhedron::HPolyhedron(std::size_t dimension, std::vector<LinearConstraint> constraints)
    : dimension_(dimension), constraints_(std::move(constraints)) {
    if (dimension_ == 0) {
        throw std::invalid_argument("HPolyhedron: dimension must be positive");
    }
    for (const auto& c : constraints_) {
        if (c.normal.size() != dimension_) {
            throw std::invalid_argument("HPolyhedron: normal dimension mismatch");
        }
        if (std::all_of(c.normal.begin(), c.normal.end(),
                        [](const Rational& v) { return v == 0; })) {
            throw std::invalid_argument("HPolyhedron: zero normal vector");
        }
    }
}

bool HPolyhedron::contains(const Point& x) const {
    if (x.size() != dimension_) {
        throw std::invalid_argument("HPolyhedron::contains: dimension mismatch");
    }
    for (const auto& c : constraints_) {
        Rational lhs = 0;
        for (std::size_t j = 0; j < dimension_; ++j) lhs += c.normal[j] * x[j];
        if (lhs > c.offset) return false;
    }
    return true;
}

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

// Simplex tableau for: maximize obj . y subject to E y = f, y >= 0, with one
// artificial variable per row appended after the `structural` columns.
// Bland's least-index rule for entering and leaving variables, so the exact
// pivoting cannot cycle.
class Tableau {
public:
    Tableau(std::size_t structural, std::vector<std::vector<Rational>> equations,
            std::vector<Rational> rhs)
        : structural_(structural), rows_(std::move(equations)), rhs_(std::move(rhs)) {
        const std::size_t m = rows_.size();
        for (std::size_t i = 0; i < m; ++i) {
            if (rhs_[i] < 0) {
                for (auto& e : rows_[i]) e = -e;
                rhs_[i] = -rhs_[i];
            }
        }
        basis_.resize(m);
        for (std::size_t i = 0; i < m; ++i) {
            rows_[i].resize(structural_ + m, Rational(0));
            rows_[i][structural_ + i] = 1;
            basis_[i] = structural_ + i;
        }
    }

    // Maximizes -(sum of artificials); true iff the equations are feasible.
    // On success the artificial columns are eliminated from the tableau.
    bool run_phase1() {
        obj_.assign(structural_ + rows_.size(), Rational(0));
        obj_value_ = 0;
        for (std::size_t i = 0; i < rows_.size(); ++i) obj_[structural_ + i] = -1;
        for (std::size_t i = 0; i < rows_.size(); ++i) eliminate_basic(i);
        iterate();
        if (obj_value_ != 0) return false;
        drop_artificials();
        return true;
    }

    enum class Phase2 { optimal, unbounded };

    // Requires a successful run_phase1. objective has `structural` entries.
    Phase2 run_phase2(const std::vector<Rational>& objective) {
        obj_ = objective;
        obj_.resize(structural_, Rational(0));
        obj_value_ = 0;
        for (std::size_t i = 0; i < rows_.size(); ++i) eliminate_basic(i);
        return iterate() ? Phase2::optimal : Phase2::unbounded;
    }

    std::vector<Rational> structural_values() const {
        std::vector<Rational> values(structural_, Rational(0));
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (basis_[i] < structural_) values[basis_[i]] = rhs_[i];
        }
        return values;
    }

private:
    // objective value = obj_value_ + obj_ . y for the current dictionary;
    // basic columns keep reduced cost zero.
    void eliminate_basic(std::size_t row) {
        const Rational factor = obj_[basis_[row]];
        if (factor == 0) return;
        for (std::size_t j = 0; j < obj_.size(); ++j) obj_[j] -= factor * rows_[row][j];
        obj_value_ += factor * rhs_[row];
    }

    void pivot(std::size_t row, std::size_t col) {
        const Rational inv = Rational(1) / rows_[row][col];
        for (auto& e : rows_[row]) e *= inv;
        rhs_[row] *= inv;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i == row || rows_[i][col] == 0) continue;
            const Rational factor = rows_[i][col];
            for (std::size_t j = 0; j < rows_[i].size(); ++j) {
                rows_[i][j] -= factor * rows_[row][j];
            }
            rhs_[i] -= factor * rhs_[row];
        }
        const Rational obj_factor = obj_[col];
        if (obj_factor != 0) {
            for (std::size_t j = 0; j < obj_.size(); ++j) obj_[j] -= obj_factor * rows_[row][j];
            obj_value_ += obj_factor * rhs_[row];
        }
        basis_[row] = col;
    }

    // true = optimal, false = unbounded.
    bool iterate() {
        for (;;) {
            std::size_t enter = npos;
            for (std::size_t j = 0; j < obj_.size(); ++j) {
                if (obj_[j] > 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == npos) return true;
            std::size_t leave = npos;
            Rational best;
            for (std::size_t i = 0; i < rows_.size(); ++i) {
                if (rows_[i][enter] <= 0) continue;
                const Rational ratio = rhs_[i] / rows_[i][enter];
                if (leave == npos || ratio < best ||
                    (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == npos) return false;
            pivot(leave, enter);
        }
    }

    // Pivots lingering basic artificials onto structural columns where
    // possible; rows that cannot be repaired are redundant (their structural
    // part is zero) and are dropped along with all artificial columns.
    void drop_artificials() {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (basis_[i] < structural_) continue;
            for (std::size_t j = 0; j < structural_; ++j) {
                if (rows_[i][j] != 0) {
                    pivot(i, j);
                    break;
                }
            }
        }
        std::vector<std::vector<Rational>> kept_rows;
        std::vector<Rational> kept_rhs;
        std::vector<std::size_t> kept_basis;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (basis_[i] >= structural_) continue;
            rows_[i].resize(structural_);
            kept_rows.push_back(std::move(rows_[i]));
            kept_rhs.push_back(std::move(rhs_[i]));
            kept_basis.push_back(basis_[i]);
        }
        rows_ = std::move(kept_rows);
        rhs_ = std::move(kept_rhs);
        basis_ = std::move(kept_basis);
    }

    std::size_t structural_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<Rational> rhs_;
    std::vector<std::size_t> basis_;
    std::vector<Rational> obj_;
    Rational obj_value_;
};

void validate_program(const LinearProgram& lp) {
    if (lp.dimension == 0) {
        throw std::invalid_argument("solve: dimension must be positive");
    }
    if (lp.objective.size() != lp.dimension) {
        throw std::invalid_argument("solve: objective dimension mismatch");
    }
    for (const auto& c : lp.constraints) {
        if (c.normal.size() != lp.dimension) {
            throw std::invalid_argument("solve: constraint dimension mismatch");
        }
    }
}

}  // namespace

LpOutcome solve(const LinearProgram& lp) {
    validate_program(lp);
    const std::size_t n = lp.dimension;
    const std::size_t m = lp.constraints.size();
    // y = (u_0..u_{n-1}, v_0..v_{n-1}, s_0..s_{m-1}), x = u - v.
    const std::size_t structural = 2 * n + m;
    std::vector<std::vector<Rational>> equations(m, std::vector<Rational>(structural, Rational(0)));
    std::vector<Rational> rhs(m);
    for (std::size_t i = 0; i < m; ++i) {
        const auto& c = lp.constraints[i];
        for (std::size_t j = 0; j < n; ++j) {
            equations[i][j] = c.normal[j];
            equations[i][n + j] = -c.normal[j];
        }
        equations[i][2 * n + i] = 1;
        rhs[i] = c.offset;
    }
    Tableau tableau(structural, std::move(equations), std::move(rhs));
    if (!tableau.run_phase1()) {
        return {LpStatus::infeasible, std::nullopt};
    }
    std::vector<Rational> objective(structural, Rational(0));
    for (std::size_t j = 0; j < n; ++j) {
        objective[j] = lp.objective[j];
        objective[n + j] = -lp.objective[j];
    }
    if (tableau.run_phase2(objective) == Tableau::Phase2::unbounded) {
        return {LpStatus::unbounded, std::nullopt};
    }
    const auto y = tableau.structural_values();
    Point x(n);
    for (std::size_t j = 0; j < n; ++j) x[j] = y[j] - y[n + j];
    return {LpStatus::optimal, std::move(x)};
}

bool is_extreme(const Point& p, const std::vector<Point>& others) {
    if (p.empty()) {
        throw std::invalid_argument("is_extreme: empty point");
    }
    for (const auto& q : others) {
        if (q.size() != p.size()) {
            throw std::invalid_argument("is_extreme: dimension mismatch");
        }
    }
    if (others.empty()) return true;
    const std::size_t n = p.size();
    const std::size_t k = others.size();
    // Feasibility of: sum_i lambda_i * others[i] = p, sum_i lambda_i = 1,
    // lambda >= 0. Extreme means infeasible.
    std::vector<std::vector<Rational>> equations(n + 1, std::vector<Rational>(k));
    std::vector<Rational> rhs(n + 1);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t i = 0; i < k; ++i) equations[r][i] = others[i][r];
        rhs[r] = p[r];
    }
    for (std::size_t i = 0; i < k; ++i) equations[n][i] = 1;
    rhs[n] = 1;
    Tableau tableau(k, std::move(equations), std::move(rhs));
    return !tableau.run_phase1();
}

bool is_full_dimensional(const HPolyhedron& h) {
    const std::size_t n = h.dimension();
    LinearProgram lp;
    lp.dimension = n + 1;
    lp.objective.assign(n + 1, Rational(0));
    lp.objective[n] = 1;
    for (const auto& c : h.constraints()) {
        LinearConstraint lifted;
        lifted.normal = c.normal;
        Rational l1 = 0;
        for (const auto& v : c.normal) l1 += abs(v);
        lifted.normal.push_back(l1);
        lifted.offset = c.offset;
        lp.constraints.push_back(std::move(lifted));
    }
    LinearConstraint cap;
    cap.normal.assign(n + 1, Rational(0));
    cap.normal[n] = 1;
    cap.offset = 1;
    lp.constraints.push_back(std::move(cap));
    const LpOutcome outcome = solve(lp);
    if (outcome.status != LpStatus::optimal) {
        throw std::logic_error("is_full_dimensional: auxiliary LP must be optimal");
    }
    return outcome.witness->back() > 0;
}

std::vector<Point> vertex_enumeration(const HPolyhedron& h) {
    const std::size_t n = h.dimension();
    const auto& cs = h.constraints();
    for (std::size_t j = 0; j < n; ++j) {
        for (const int sign : {1, -1}) {
            LinearProgram lp;
            lp.dimension = n;
            lp.objective.assign(n, Rational(0));
            lp.objective[j] = sign;
            lp.constraints = cs;
            const LpOutcome outcome = solve(lp);
            if (outcome.status == LpStatus::infeasible) return {};
            if (outcome.status == LpStatus::unbounded) {
                throw std::runtime_error("unbounded polyhedron");
            }
        }
    }
    std::vector<Point> vertices;
    if (cs.size() < n) return vertices;  // bounded and nonempty excludes this
    std::vector<std::size_t> subset(n);
    for (std::size_t i = 0; i < n; ++i) subset[i] = i;
    for (;;) {
        RationalMatrix a(n, n);
        std::vector<Rational> b(n);
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) a.at(r, c) = cs[subset[r]].normal[c];
            b[r] = cs[subset[r]].offset;
        }
        if (auto x = gaussian_solve(a, b); x && h.contains(*x)) {
            vertices.push_back(std::move(*x));
        }
        // next n-combination of {0..cs.size()-1}
        std::size_t i = n;
        while (i > 0 && subset[i - 1] == cs.size() - n + i - 1) --i;
        if (i == 0) break;
        ++subset[i - 1];
        for (std::size_t t = i; t < n; ++t) subset[t] = subset[t - 1] + 1;
    }
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    return vertices;
}

}  // namespace cremona
