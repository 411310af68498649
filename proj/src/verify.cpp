#include "cremona/verify.hpp"

#include "cremona/combinatorics.hpp"
#include "cremona/determinantal.hpp"
#include "cremona/fan.hpp"
#include "cremona/lp.hpp"
#include "cremona/mixed_volume.hpp"
#include "cremona/multidegree.hpp"
#include "cremona/polytope.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cremona {

bool VerificationReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.passed; });
}

namespace {

// A check body returns the first counterexample, or "" when everything held.
void run_check(VerificationReport& report, const std::string& name, const std::string& range,
               const std::function<std::string()>& body) {
    CheckResult result;
    result.name = name;
    result.range = range;
    try {
        result.counterexample = body();
    } catch (const std::exception& e) {
        result.counterexample = std::string("exception: ") + e.what();
    }
    result.passed = result.counterexample.empty();
    report.checks.push_back(std::move(result));
}

std::string range_text(int lo, int hi) {
    std::ostringstream out;
    if (hi < lo) {
        out << "n = " << lo << ".." << hi << " (empty)";
    } else {
        out << "n = " << lo << ".." << hi;
    }
    return out.str();
}

std::string check_volume_paths(
    int max_n, const std::function<Rational(const Rational&, const Rational&, int)>& closed) {
    for (int n = 1; n <= max_n; ++n) {
        const VPolytope simplex = standard_simplex(n);
        const VPolytope negated = negate(simplex);
        for (int a = 0; a <= 3; ++a) {
            for (int b = 0; b <= 3; ++b) {
                const VPolytope body =
                    minkowski_sum(dilate(simplex, Rational(a)), dilate(negated, Rational(b)));
                const Rational by_triangulation = volume(body);
                const Rational by_closed_form = closed(Rational(a), Rational(b), n);
                Rational by_orthants = 0;
                for (const auto& cell : orthant_decomposition(Rational(a), Rational(b), n)) {
                    by_orthants += cell.cell_volume;
                }
                if (by_triangulation != by_closed_form || by_orthants != by_closed_form) {
                    std::ostringstream out;
                    out << "a=" << a << " b=" << b << " n=" << n << ": triangulation "
                        << to_string(by_triangulation) << ", closed form "
                        << to_string(by_closed_form) << ", orthant sum "
                        << to_string(by_orthants);
                    return out.str();
                }
            }
        }
    }
    return "";
}

std::string check_multidegree_paths(int max_n) {
    for (int n = 2; n <= max_n; ++n) {
        for (int k = 0; k <= n; ++k) {
            const Integer by_mixed = multidegree_by_mixed_volume(n, k);
            const Integer by_extraction = multidegree_by_coefficient_extraction(n, k);
            const Integer expected = binomial(n, k);
            if (by_mixed != expected || by_extraction != expected) {
                std::ostringstream out;
                out << "n=" << n << " k=" << k << ": mixed volume " << by_mixed.str()
                    << ", extraction " << by_extraction.str() << ", binomial "
                    << expected.str();
                return out.str();
            }
        }
    }
    return "";
}

std::string check_conversion_consistency(int max_n) {
    for (int n = 2; n <= max_n; ++n) {
        const SegreVector by_formula = segre_numbers_standard(n);
        const SegreVector by_conversion = segre_from_multidegrees(multidegrees_standard(n));
        if (!(by_formula == by_conversion)) {
            for (int k = 0; k <= n - 2; ++k) {
                if (by_formula.numbers()[k] != by_conversion.numbers()[k]) {
                    std::ostringstream out;
                    out << "n=" << n << " k=" << k << ": formula "
                        << by_formula.numbers()[k].str() << ", conversion "
                        << by_conversion.numbers()[k].str();
                    return out.str();
                }
            }
        }
        const MultidegreeSequence back = multidegrees_from_segre(by_formula, Integer(n));
        if (!(back == multidegrees_standard(n))) {
            std::ostringstream out;
            out << "n=" << n << ": inverse conversion left the standard degrees";
            return out.str();
        }
    }
    return "";
}

std::string check_matrix_inverse(int max_n) {
    for (int n = 2; n <= max_n; ++n) {
        for (int deg = 2; deg <= 6; ++deg) {
            const RationalMatrix product =
                conversion_matrix(Integer(deg), n) * conversion_matrix_inverse(Integer(deg), n);
            if (!(product == RationalMatrix::identity(n + 1))) {
                std::ostringstream out;
                out << "n=" << n << " deg=" << deg << ": M * M^-1 is not the identity";
                return out.str();
            }
        }
    }
    return "";
}

std::string check_hypergeometric(int max_n) {
    for (int n = 2; n <= max_n; ++n) {
        const SegreVector expected = segre_numbers_standard(n);
        for (int k = 0; k <= n - 2; ++k) {
            const Rational h = hypergeom_terminating(-n, k - n, 1, make_rational(-1, Integer(n)));
            const Rational value = -h * rational_pow(Rational(-n), static_cast<unsigned>(n - k));
            if (value != Rational(expected.numbers()[k])) {
                std::ostringstream out;
                out << "n=" << n << " k=" << k << ": hypergeometric " << to_string(value)
                    << ", formula " << expected.numbers()[k].str();
                return out.str();
            }
        }
    }
    return "";
}

std::string check_tail_forms(int max_n) {
    for (int n = 7; n <= max_n; ++n) {
        const SegreVector s = segre_numbers_standard(n);
        const Integer n_big(n);
        const Integer tail2 = n_big * (n + 1) / 2;
        const Integer tail3 = -n_big * (n + 1) * (2 * n + 1) / 3;
        const Integer tail4 = n_big * (n + 1) * (5 * n_big * n_big + 5 * n + 2) / 8;
        const Integer tail5 =
            -n_big * (n + 1) * (2 * n + 1) * (7 * n_big * n_big + 7 * n + 6) / 30;
        const std::pair<int, Integer> expected[] = {
            {n - 2, tail2}, {n - 3, tail3}, {n - 4, tail4}, {n - 5, tail5}};
        for (const auto& [k, value] : expected) {
            if (s.numbers()[k] != value) {
                std::ostringstream out;
                out << "n=" << n << " k=" << k << ": formula " << s.numbers()[k].str()
                    << ", closed form " << value.str();
                return out.str();
            }
        }
    }
    return "";
}

std::string check_standard_minors(int max_n) {
    for (int n = 1; n <= max_n; ++n) {
        const auto minors = maximal_minors(standard_matrix(n));
        if (minors.size() != static_cast<std::size_t>(n + 1)) {
            return "n=" + std::to_string(n) + ": wrong minor count";
        }
        std::set<int> omitted;
        for (std::size_t i = 0; i < minors.size(); ++i) {
            const auto& terms = minors[i].terms();
            std::ostringstream where;
            where << "n=" << n << " minor " << i;
            if (terms.size() != 1) {
                return where.str() + ": not a monomial (" + minors[i].to_string() + ")";
            }
            const auto& [exponents, coeff] = *terms.begin();
            if (coeff != 1 && coeff != -1) {
                return where.str() + ": coefficient not a sign";
            }
            int degree = 0;
            int missing = -1;
            for (int v = 0; v <= n; ++v) {
                if (exponents[v] == 0) {
                    if (missing != -1) return where.str() + ": omits two variables";
                    missing = v;
                } else if (exponents[v] == 1) {
                    ++degree;
                } else {
                    return where.str() + ": not squarefree";
                }
            }
            if (degree != n || missing == -1) {
                return where.str() + ": wrong degree";
            }
            omitted.insert(missing);
        }
        if (omitted.size() != static_cast<std::size_t>(n + 1)) {
            return "n=" + std::to_string(n) + ": omitted variables not all realized";
        }
    }
    return "";
}

// Fixed fixture: a cubic transformation of P^3 with multidegree (1,3,2,1),
// given by its presentation matrix. Its maximal minors must reproduce the
// map's components up to per-component sign.
SparsePolynomial cubic_map_component(int which) {
    SparsePolynomial p(4);
    switch (which) {
        case 0:  // X0 X1 X2 - X0^2 X3
            p.add_term({1, 1, 1, 0}, 1);
            p.add_term({2, 0, 0, 1}, -1);
            break;
        case 1:  // X1^2 X2 - X0 X1 X3
            p.add_term({0, 2, 1, 0}, 1);
            p.add_term({1, 1, 0, 1}, -1);
            break;
        case 2:  // X0 X1 X2 - X0 X1 X3
            p.add_term({1, 1, 1, 0}, 1);
            p.add_term({1, 1, 0, 1}, -1);
            break;
        default:  // X0^2 X1 - X0 X1^2
            p.add_term({2, 1, 0, 0}, 1);
            p.add_term({1, 2, 0, 0}, -1);
            break;
    }
    return p;
}

LinearFormMatrix cubic_map_matrix() {
    const auto form = [](std::vector<Integer> c) { return LinearForm(std::move(c)); };
    std::vector<std::vector<LinearForm>> rows;
    rows.push_back({form({0, 0, 0, 0}), form({0, 1, 0, 0}), form({0, 0, 0, 0})});
    rows.push_back({form({1, 0, 0, 0}), form({0, 0, 0, 0}), form({0, 0, 0, 0})});
    rows.push_back({form({0, -1, 0, 0}), form({0, -1, 0, 0}), form({-1, 1, 0, 0})});
    rows.push_back({form({0, 0, 0, 1}), form({0, 0, 0, 1}), form({0, 0, 1, -1})});
    return LinearFormMatrix(3, std::move(rows));
}

std::string check_cubic_map_minors() {
    const auto minors = maximal_minors(cubic_map_matrix());
    for (int i = 0; i < 4; ++i) {
        const SparsePolynomial expected = cubic_map_component(i);
        if (!(minors[i] == expected) && !(minors[i] == -expected)) {
            return "component " + std::to_string(i) + ": got " + minors[i].to_string() +
                   ", want +/- " + expected.to_string();
        }
    }
    return "";
}

std::string check_cubic_map_conversion() {
    const MultidegreeSequence degrees({1, 3, 2, 1}, 3);
    const SegreVector s = segre_from_multidegrees(degrees);
    if (s.numbers() != std::vector<Integer>{-37, 7}) {
        return "degrees (1,3,2,1): got (" + s.numbers()[0].str() + "," + s.numbers()[1].str() +
               "), want (-37,7)";
    }
    const MultidegreeSequence back = multidegrees_from_segre(s, 3);
    if (!(back == degrees)) {
        return "round trip of (1,3,2,1) failed";
    }
    return "";
}

std::string check_base_components(int max_n) {
    for (int n = 2; n <= max_n; ++n) {
        const Integer expected = Integer(n) * (n + 1) / 2;
        const auto pairs = base_components(n);
        if (Integer(pairs.size()) != expected) {
            return "n=" + std::to_string(n) + ": component count " +
                   std::to_string(pairs.size()) + ", want " + expected.str();
        }
        if (segre_numbers_standard(n).extended(n - 2) != expected) {
            return "n=" + std::to_string(n) + ": s_{n-2} differs from the component count";
        }
        if (n < 3) continue;
        const auto ranks = chow_ranks(n);
        if (ranks.size() != static_cast<std::size_t>(n - 1)) {
            return "n=" + std::to_string(n) + ": wrong Chow rank count";
        }
        for (int k = 0; k <= n - 3; ++k) {
            if (ranks[k] != std::pair<int, Integer>(k, Integer(1))) {
                return "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                       ": rank is not 1";
            }
        }
        if (ranks.back() != std::pair<int, Integer>(n - 2, expected)) {
            return "n=" + std::to_string(n) + ": top rank differs from n(n+1)/2";
        }
    }
    return "";
}

std::string check_fan(int max_n) {
    for (int n = 2; n <= max_n; ++n) {
        const auto cells = common_refinement(n);
        const std::size_t expected_cells = static_cast<std::size_t>(n) * (n + 1);
        if (cells.size() != expected_cells) {
            return "n=" + std::to_string(n) + ": " + std::to_string(cells.size()) +
                   " cells, want " + std::to_string(expected_cells);
        }
        for (std::size_t a = 0; a < cells.size(); ++a) {
            for (std::size_t b = a + 1; b < cells.size(); ++b) {
                std::vector<LinearConstraint> both = cells[a].cell.constraints();
                const auto& more = cells[b].cell.constraints();
                both.insert(both.end(), more.begin(), more.end());
                if (is_full_dimensional(HPolyhedron(n, std::move(both)))) {
                    std::ostringstream out;
                    out << "n=" << n << ": cells (" << cells[a].source_delta << ","
                        << cells[a].source_negative << ") and (" << cells[b].source_delta
                        << "," << cells[b].source_negative << ") overlap";
                    return out.str();
                }
            }
        }
        const auto [covered, box] = covering_check(n);
        if (covered != box) {
            return "n=" + std::to_string(n) + ": covered " + to_string(covered) +
                   " of box " + to_string(box);
        }
    }
    return "";
}

}  // namespace

VerificationReport run_verification(const VerifyOptions& options) {
    if (options.max_n < 2) {
        throw std::invalid_argument("run_verification: max_n must be at least 2");
    }
    std::function<Rational(const Rational&, const Rational&, int)> closed = options.closed_form;
    if (!closed) {
        closed = [](const Rational& a, const Rational& b, int n) {
            return volume_closed_form(a, b, n);
        };
    }
    const int max_n = options.max_n;
    VerificationReport report;
    const int volume_n = std::min(max_n, 5);
    run_check(report, "volume-path-agreement", range_text(1, volume_n) + ", a,b = 0..3",
              [&] { return check_volume_paths(volume_n, closed); });
    const int degree_n = std::min(max_n, 8);
    run_check(report, "multidegree-path-agreement", range_text(2, degree_n),
              [&] { return check_multidegree_paths(degree_n); });
    run_check(report, "segre-conversion-consistency", range_text(2, max_n),
              [&] { return check_conversion_consistency(max_n); });
    run_check(report, "conversion-matrix-inverse", range_text(2, max_n) + ", deg = 2..6",
              [&] { return check_matrix_inverse(max_n); });
    run_check(report, "segre-hypergeometric-identity", range_text(2, max_n),
              [&] { return check_hypergeometric(max_n); });
    run_check(report, "segre-tail-closed-forms", range_text(7, max_n),
              [&] { return check_tail_forms(max_n); });
    const int minors_n = std::min(max_n, 6);
    run_check(report, "standard-matrix-minors", range_text(1, minors_n),
              [&] { return check_standard_minors(minors_n); });
    run_check(report, "cubic-map-minors", "n = 3", [] { return check_cubic_map_minors(); });
    run_check(report, "cubic-map-conversion", "n = 3",
              [] { return check_cubic_map_conversion(); });
    run_check(report, "base-component-counts", range_text(2, max_n),
              [&] { return check_base_components(max_n); });
    const int fan_n = std::min(max_n, 3);
    run_check(report, "fan-refinement", range_text(2, fan_n),
              [&] { return check_fan(fan_n); });
    return report;
}

}  // namespace cremona
