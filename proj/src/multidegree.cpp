#include "cremona/multidegree.hpp"

#include "cremona/combinatorics.hpp"
#include "cremona/mixed_volume.hpp"

#include <stdexcept>

namespace cremona {

MultidegreeSequence::MultidegreeSequence(std::vector<Integer> degrees, Integer algebraic_degree)
    : degrees_(std::move(degrees)), algebraic_degree_(std::move(algebraic_degree)) {
    if (degrees_.size() < 2) {
        throw std::invalid_argument("MultidegreeSequence: need d_0..d_n with n >= 1");
    }
    if (algebraic_degree_ < 1) {
        throw std::invalid_argument("MultidegreeSequence: algebraic degree must be positive");
    }
    if (degrees_[0] != 1) {
        throw std::invalid_argument("MultidegreeSequence: d_0 must be 1");
    }
    if (degrees_[1] != algebraic_degree_) {
        throw std::invalid_argument("MultidegreeSequence: d_1 must equal the algebraic degree");
    }
}

SegreVector::SegreVector(int n, std::vector<Integer> numbers)
    : n_(n), numbers_(std::move(numbers)) {
    if (n_ < 1) {
        throw std::invalid_argument("SegreVector: n must be positive");
    }
    if (numbers_.size() != static_cast<std::size_t>(n_ - 1)) {
        throw std::invalid_argument("SegreVector: need s_0..s_{n-2}");
    }
}

Integer SegreVector::extended(int k) const {
    if (k < 0 || k > n_) {
        throw std::invalid_argument("SegreVector::extended: index out of range");
    }
    if (k == n_) return -1;
    if (k == n_ - 1) return 0;
    return numbers_[k];
}

MultidegreeSequence multidegrees_standard(int n) {
    if (n < 2) {
        throw std::invalid_argument("multidegrees_standard: n must be at least 2");
    }
    std::vector<Integer> degrees(n + 1);
    for (int k = 0; k <= n; ++k) degrees[k] = binomial(n, k);
    return MultidegreeSequence(std::move(degrees), Integer(n));
}

SegreVector segre_numbers_standard(int n) {
    if (n < 2) {
        throw std::invalid_argument("segre_numbers_standard: n must be at least 2");
    }
    std::vector<Integer> numbers(n - 1);
    for (int k = 0; k <= n - 2; ++k) {
        Integer sum = 0;
        for (int j = 0; j <= n - k; ++j) {
            Integer term = binomial(n - k, j) * binomial(n, j) *
                           int_pow(Integer(n), static_cast<unsigned>(n - k - j));
            sum += (j % 2 == 0) ? term : Integer(-term);
        }
        numbers[k] = ((n - k - 1) % 2 == 0) ? sum : Integer(-sum);
    }
    return SegreVector(n, std::move(numbers));
}

RationalMatrix conversion_matrix(const Integer& deg, int n) {
    if (deg < 1) {
        throw std::invalid_argument("conversion_matrix: degree must be positive");
    }
    if (n < 1) {
        throw std::invalid_argument("conversion_matrix: n must be positive");
    }
    RationalMatrix m(n + 1, n + 1);
    for (int k = 0; k <= n; ++k) {
        for (int l = 0; l <= k; ++l) {
            m.at(k, l) = Rational(-binomial(k, l) * int_pow(deg, static_cast<unsigned>(k - l)));
        }
    }
    return m;
}

RationalMatrix conversion_matrix_inverse(const Integer& deg, int n) {
    if (deg < 1) {
        throw std::invalid_argument("conversion_matrix_inverse: degree must be positive");
    }
    if (n < 1) {
        throw std::invalid_argument("conversion_matrix_inverse: n must be positive");
    }
    RationalMatrix m(n + 1, n + 1);
    for (int k = 0; k <= n; ++k) {
        for (int l = 0; l <= k; ++l) {
            const Integer magnitude = binomial(k, l) * int_pow(deg, static_cast<unsigned>(k - l));
            m.at(k, l) = Rational(((1 + k + l) % 2 == 0) ? magnitude : Integer(-magnitude));
        }
    }
    return m;
}

MultidegreeSequence multidegrees_from_segre(const SegreVector& s, const Integer& deg) {
    const int n = s.n();
    const RationalMatrix m = conversion_matrix(deg, n);
    std::vector<Rational> v(n + 1);
    for (int l = 0; l <= n; ++l) v[l] = Rational(s.extended(n - l));
    const std::vector<Rational> d = m.apply(v);
    std::vector<Integer> degrees(n + 1);
    for (int k = 0; k <= n; ++k) degrees[k] = to_integer(d[k]);
    return MultidegreeSequence(std::move(degrees), deg);
}

namespace {

// s_k = (-1)^(n-k-1) sum_l (-1)^l C(n-k,l) deg^(n-k-l) d_l.
Integer segre_entry_from_degrees(const std::vector<Integer>& d, const Integer& deg, int n, int k) {
    Integer sum = 0;
    for (int l = 0; l <= n - k; ++l) {
        Integer term = binomial(n - k, l) * int_pow(deg, static_cast<unsigned>(n - k - l)) * d[l];
        sum += (l % 2 == 0) ? term : Integer(-term);
    }
    return ((n - k - 1) % 2 == 0) ? sum : Integer(-sum);
}

}  // namespace

SegreVector segre_from_multidegrees(const MultidegreeSequence& d) {
    const int n = d.n();
    const Integer& deg = d.algebraic_degree();
    if (segre_entry_from_degrees(d.degrees(), deg, n, n - 1) != 0 ||
        segre_entry_from_degrees(d.degrees(), deg, n, n) != -1) {
        throw std::invalid_argument("inconsistent multidegree data");
    }
    std::vector<Integer> numbers(n - 1);
    for (int k = 0; k <= n - 2; ++k) {
        numbers[k] = segre_entry_from_degrees(d.degrees(), deg, n, k);
    }
    return SegreVector(n, std::move(numbers));
}

std::vector<std::pair<int, int>> base_components(int n) {
    if (n < 2) {
        throw std::invalid_argument("base_components: n must be at least 2");
    }
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(n * (n + 1) / 2);
    for (int i = 0; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
    }
    return pairs;
}

std::vector<std::pair<int, Integer>> chow_ranks(int n) {
    if (n < 3) {
        throw std::invalid_argument("chow_ranks: n must be at least 3");
    }
    std::vector<std::pair<int, Integer>> ranks;
    for (int k = 0; k <= n - 3; ++k) ranks.emplace_back(k, Integer(1));
    ranks.emplace_back(n - 2, Integer(n) * (n + 1) / 2);
    return ranks;
}

SegreReport segre_report(int n) {
    if (n < 2) {
        throw std::invalid_argument("segre_report: n must be at least 2");
    }
    SegreReport report;
    report.n = n;

    const MultidegreeSequence standard = multidegrees_standard(n);
    report.degrees_formula = standard.degrees();
    report.degrees_mixed_volume.resize(n + 1);
    report.degrees_extraction.resize(n + 1);
    for (int k = 0; k <= n; ++k) {
        report.degrees_mixed_volume[k] = multidegree_by_mixed_volume(n, k);
        report.degrees_extraction[k] = multidegree_by_coefficient_extraction(n, k);
    }
    report.degrees_agree = report.degrees_mixed_volume == report.degrees_formula &&
                           report.degrees_extraction == report.degrees_formula;

    const SegreVector formula = segre_numbers_standard(n);
    report.segre_formula = formula.numbers();
    report.segre_conversion = segre_from_multidegrees(standard).numbers();
    report.segre_hypergeometric.resize(n - 1);
    for (int k = 0; k <= n - 2; ++k) {
        const Rational h =
            hypergeom_terminating(-n, k - n, 1, make_rational(-1, Integer(n)));
        const Rational value = -h * rational_pow(Rational(-n), static_cast<unsigned>(n - k));
        report.segre_hypergeometric[k] = to_integer(value);
    }
    report.segre_agree = report.segre_conversion == report.segre_formula &&
                         report.segre_hypergeometric == report.segre_formula;

    report.component_count = Integer(n) * (n + 1) / 2;
    report.components_match_segre = report.component_count == formula.extended(n - 2);

    report.chow_applicable = n >= 3;
    if (report.chow_applicable) report.chow = chow_ranks(n);
    return report;
}

}  // namespace cremona
