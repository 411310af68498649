#include "cremona/polytope.hpp"

#include "cremona/combinatorics.hpp"
#include "cremona/desk_guard.hpp"
#include "cremona/lp.hpp"
#include "cremona/rational_matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace cremona {

namespace {

void validate_points(std::size_t dimension, const std::vector<Point>& points) {
    if (dimension == 0) {
        throw std::invalid_argument("VPolytope: dimension must be positive");
    }
    if (points.empty()) {
        throw std::invalid_argument("VPolytope: vertex list must be nonempty");
    }
    for (const auto& p : points) {
        if (p.size() != dimension) {
            throw std::invalid_argument("VPolytope: point dimension mismatch");
        }
    }
}

}  // namespace

VPolytope::VPolytope(Unchecked, std::size_t dimension, std::vector<Point> vertices)
    : dimension_(dimension), vertices_(std::move(vertices)) {}

VPolytope::VPolytope(std::size_t dimension, std::vector<Point> points)
    : dimension_(dimension) {
    validate_points(dimension, points);
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    for (std::size_t i = 0; i < points.size(); ++i) {
        std::vector<Point> others;
        others.reserve(points.size() - 1);
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j != i) others.push_back(points[j]);
        }
        if (is_extreme(points[i], others)) vertices_.push_back(points[i]);
    }
}

VPolytope VPolytope::from_extreme_points(std::size_t dimension, std::vector<Point> points) {
    validate_points(dimension, points);
    std::sort(points.begin(), points.end());
    return VPolytope(Unchecked{}, dimension, std::move(points));
}

VPolytope standard_simplex(int n) {
    if (n < 1) {
        throw std::invalid_argument("standard_simplex: n must be positive");
    }
    std::vector<Point> points;
    points.reserve(n + 1);
    points.emplace_back(n, Rational(0));
    for (int i = 0; i < n; ++i) {
        Point e(n, Rational(0));
        e[i] = 1;
        points.push_back(std::move(e));
    }
    return VPolytope::from_extreme_points(n, std::move(points));
}

VPolytope negate(const VPolytope& p) {
    std::vector<Point> points = p.vertices();
    for (auto& v : points) {
        for (auto& c : v) c = -c;
    }
    return VPolytope::from_extreme_points(p.dimension(), std::move(points));
}

VPolytope dilate(const VPolytope& p, const Rational& c) {
    if (c < 0) {
        throw std::invalid_argument("dilate: negative factor (use negate for reflection)");
    }
    if (c == 0) {
        return VPolytope::from_extreme_points(p.dimension(),
                                              {Point(p.dimension(), Rational(0))});
    }
    std::vector<Point> points = p.vertices();
    for (auto& v : points) {
        for (auto& coord : v) coord *= c;
    }
    return VPolytope::from_extreme_points(p.dimension(), std::move(points));
}

VPolytope translate(const VPolytope& p, const Point& t) {
    if (t.size() != p.dimension()) {
        throw std::invalid_argument("translate: dimension mismatch");
    }
    std::vector<Point> points = p.vertices();
    for (auto& v : points) {
        for (std::size_t j = 0; j < t.size(); ++j) v[j] += t[j];
    }
    return VPolytope::from_extreme_points(p.dimension(), std::move(points));
}

VPolytope minkowski_sum(const VPolytope& p, const VPolytope& q) {
    if (p.dimension() != q.dimension()) {
        throw std::invalid_argument("minkowski_sum: dimension mismatch");
    }
    std::vector<Point> sums;
    sums.reserve(p.vertices().size() * q.vertices().size());
    for (const auto& a : p.vertices()) {
        for (const auto& b : q.vertices()) {
            Point s(a.size());
            for (std::size_t j = 0; j < a.size(); ++j) s[j] = a[j] + b[j];
            sums.push_back(std::move(s));
        }
    }
    return VPolytope(p.dimension(), std::move(sums));
}

namespace {

using IntPoint = std::vector<Integer>;
using Mask = std::vector<std::uint64_t>;

Mask empty_mask(std::size_t bits) { return Mask((bits + 63) / 64, 0); }

void set_bit(Mask& m, std::size_t i) { m[i / 64] |= std::uint64_t(1) << (i % 64); }

bool test_bit(const Mask& m, std::size_t i) {
    return (m[i / 64] >> (i % 64)) & 1;
}

bool mask_subset(const Mask& sub, const Mask& sup) {
    for (std::size_t w = 0; w < sub.size(); ++w) {
        if (sub[w] & ~sup[w]) return false;
    }
    return true;
}

// Fraction-free (Bareiss) determinant; empty matrix has determinant 1.
Integer integer_det(std::vector<std::vector<Integer>> m) {
    const std::size_t n = m.size();
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m[p][k] == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            std::swap(m[p], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : Integer(-m[n - 1][n - 1]);
}

// Normal of the hyperplane spanned by d-1 difference vectors in Z^d:
// component c is (-1)^c times the maximal minor omitting column c. The zero
// vector signals affine dependence.
std::vector<Integer> cross_normal(const std::vector<std::vector<Integer>>& diffs, int d) {
    std::vector<Integer> normal(d);
    for (int c = 0; c < d; ++c) {
        std::vector<std::vector<Integer>> minor(diffs.size(),
                                                std::vector<Integer>(d - 1));
        for (std::size_t r = 0; r < diffs.size(); ++r) {
            int out = 0;
            for (int j = 0; j < d; ++j) {
                if (j != c) minor[r][out++] = diffs[r][j];
            }
        }
        const Integer det = integer_det(std::move(minor));
        normal[c] = (c % 2 == 0) ? det : Integer(-det);
    }
    return normal;
}

Integer dot_int(const std::vector<Integer>& a, const IntPoint& b) {
    Integer sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
    return sum;
}

struct Facet {
    Mask on_mask;
    std::vector<int> on_indices;
    std::vector<Integer> normal;
};

// Facets of the polytope spanned by pts (extreme, distinct, affinely spanning
// R^d): every d-subset is tried; subsets lying inside an already-found facet
// are skipped cheaply via bitmasks; support tests abort on the first sign
// change, scanning in a fixed shuffled order so one-sided prefixes are rare.
std::vector<Facet> find_facets(const std::vector<IntPoint>& pts, int d) {
    const int v = static_cast<int>(pts.size());
    std::vector<int> scan_order(v);
    std::iota(scan_order.begin(), scan_order.end(), 0);
    std::mt19937 rng(0xC0FFEE);
    std::shuffle(scan_order.begin(), scan_order.end(), rng);

    std::vector<Facet> facets;
    std::vector<int> subset(d);
    std::iota(subset.begin(), subset.end(), 0);
    if (v < d) return facets;
    for (;;) {
        Mask sub_mask = empty_mask(v);
        for (int i : subset) set_bit(sub_mask, i);
        bool covered = false;
        for (const auto& f : facets) {
            if (mask_subset(sub_mask, f.on_mask)) {
                covered = true;
                break;
            }
        }
        if (!covered) {
            std::vector<std::vector<Integer>> diffs(d - 1, std::vector<Integer>(d));
            for (int r = 1; r < d; ++r) {
                for (int j = 0; j < d; ++j) {
                    diffs[r - 1][j] = pts[subset[r]][j] - pts[subset[0]][j];
                }
            }
            std::vector<Integer> normal = cross_normal(diffs, d);
            const bool degenerate =
                std::all_of(normal.begin(), normal.end(),
                            [](const Integer& x) { return x == 0; });
            if (!degenerate) {
                const Integer offset = dot_int(normal, pts[subset[0]]);
                bool above = false;
                bool below = false;
                for (int idx : scan_order) {
                    const Integer s = dot_int(normal, pts[idx]) - offset;
                    if (s > 0) above = true;
                    else if (s < 0) below = true;
                    if (above && below) break;
                }
                if (!(above && below)) {
                    Integer oriented_offset = offset;
                    if (above) {
                        for (auto& x : normal) x = -x;
                        oriented_offset = -offset;
                    }
                    Facet f;
                    f.on_mask = empty_mask(v);
                    f.normal = std::move(normal);
                    for (int i = 0; i < v; ++i) {
                        if (dot_int(f.normal, pts[i]) == oriented_offset) {
                            set_bit(f.on_mask, i);
                            f.on_indices.push_back(i);
                        }
                    }
                    facets.push_back(std::move(f));
                }
            }
        }
        int i = d;
        while (i > 0 && subset[i - 1] == v - d + i - 1) --i;
        if (i == 0) break;
        ++subset[i - 1];
        for (int t = i; t < d; ++t) subset[t] = subset[t - 1] + 1;
    }
    return facets;
}

// Index (into pts) tuples of the pulling triangulation: cone the
// lexicographically least point over the recursively triangulated facets
// that do not contain it.
std::vector<std::vector<int>> pulling_triangulation(const std::vector<IntPoint>& pts, int d) {
    const int v = static_cast<int>(pts.size());
    if (d == 1) {
        int lo = 0;
        int hi = 0;
        for (int i = 1; i < v; ++i) {
            if (pts[i][0] < pts[lo][0]) lo = i;
            if (pts[i][0] > pts[hi][0]) hi = i;
        }
        return {{lo, hi}};
    }
    int apex = 0;
    for (int i = 1; i < v; ++i) {
        if (pts[i] < pts[apex]) apex = i;
    }
    std::vector<std::vector<int>> simplices;
    for (const Facet& facet : find_facets(pts, d)) {
        if (test_bit(facet.on_mask, apex)) continue;
        int drop = 0;
        while (facet.normal[drop] == 0) ++drop;
        std::vector<IntPoint> projected;
        projected.reserve(facet.on_indices.size());
        for (int idx : facet.on_indices) {
            IntPoint q;
            q.reserve(d - 1);
            for (int j = 0; j < d; ++j) {
                if (j != drop) q.push_back(pts[idx][j]);
            }
            projected.push_back(std::move(q));
        }
        for (const auto& local : pulling_triangulation(projected, d - 1)) {
            std::vector<int> simplex;
            simplex.reserve(d + 1);
            simplex.push_back(apex);
            for (int li : local) simplex.push_back(facet.on_indices[li]);
            simplices.push_back(std::move(simplex));
        }
    }
    return simplices;
}

}  // namespace

Rational volume(const VPolytope& p) {
    const int n = static_cast<int>(p.dimension());
    const int cap = guard_cap(200);
    const auto& vertices = p.vertices();
    if (static_cast<int>(vertices.size()) > cap) {
        std::ostringstream msg;
        msg << "volume guard: general volume oracle out of desk range ("
            << vertices.size() << " vertices > cap " << cap << ")";
        throw std::runtime_error(msg.str());
    }
    if (vertices.size() < p.dimension() + 1) return 0;

    Integer scale = 1;
    for (const auto& v : vertices) {
        for (const auto& coord : v) {
            scale = lcm(scale, denominator(coord));
        }
    }
    std::vector<IntPoint> pts;
    pts.reserve(vertices.size());
    for (const auto& v : vertices) {
        IntPoint w(n);
        for (int j = 0; j < n; ++j) {
            w[j] = numerator(v[j]) * (scale / denominator(v[j]));
        }
        pts.push_back(std::move(w));
    }

    RationalMatrix diffs(pts.size() - 1, n);
    for (std::size_t i = 1; i < pts.size(); ++i) {
        for (int j = 0; j < n; ++j) diffs.at(i - 1, j) = Rational(pts[i][j] - pts[0][j]);
    }
    if (rank(std::move(diffs)) < static_cast<std::size_t>(n)) return 0;

    Integer total = 0;
    for (const auto& simplex : pulling_triangulation(pts, n)) {
        std::vector<std::vector<Integer>> edges(n, std::vector<Integer>(n));
        for (int r = 1; r <= n; ++r) {
            for (int j = 0; j < n; ++j) {
                edges[r - 1][j] = pts[simplex[r]][j] - pts[simplex[0]][j];
            }
        }
        total += abs(integer_det(std::move(edges)));
    }
    return make_rational(total, factorial(n) * int_pow(scale, static_cast<unsigned>(n)));
}

Rational volume_closed_form(const Rational& a, const Rational& b, int n) {
    if (n < 1) {
        throw std::invalid_argument("volume_closed_form: n must be positive");
    }
    if (a < 0 || b < 0) {
        throw std::invalid_argument("volume_closed_form: factors must be non-negative");
    }
    Rational sum = 0;
    for (int j = 0; j <= n; ++j) {
        sum += Rational(binomial(n, j)) * rational_pow(a, j) * rational_pow(b, n - j) /
               Rational(factorial(j) * factorial(n - j));
    }
    return sum;
}

BivariatePolynomial volume_polynomial(int n) {
    if (n < 1) {
        throw std::invalid_argument("volume_polynomial: n must be positive");
    }
    BivariatePolynomial p;
    for (int j = 0; j <= n; ++j) {
        p.add_term(j, n - j,
                   make_rational(binomial(n, j), factorial(j) * factorial(n - j)));
    }
    return p;
}

std::vector<OrthantCell> orthant_decomposition(const Rational& a, const Rational& b, int n) {
    if (n < 1) {
        throw std::invalid_argument("orthant_decomposition: n must be positive");
    }
    if (a < 0 || b < 0) {
        throw std::invalid_argument("orthant_decomposition: factors must be non-negative");
    }
    if (n > 24) {
        throw std::invalid_argument("orthant_decomposition: 2^n cells out of memory range");
    }
    std::vector<OrthantCell> cells;
    cells.reserve(std::size_t(1) << n);
    for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
        OrthantCell cell;
        cell.signs.assign(n, '-');
        for (int t = 0; t < n; ++t) {
            if ((mask >> t) & 1) {
                cell.signs[t] = '+';
                ++cell.simplex_split;
            }
        }
        const int j = cell.simplex_split;
        cell.cell_volume = rational_pow(a, j) * rational_pow(b, n - j) /
                           Rational(factorial(j) * factorial(n - j));
        cells.push_back(std::move(cell));
    }
    return cells;
}

}  // namespace cremona
