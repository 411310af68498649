#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cremona/combinatorics.hpp"
#include "cremona/determinantal.hpp"
#include "cremona/multidegree.hpp"
#include "cremona/rational.hpp"
#include "cremona/rational_matrix.hpp"

#include <cstdlib>
#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

using namespace cremona;

namespace {

LinearForm form(std::vector<Integer> c) { return LinearForm(std::move(c)); }

// 4x3 presentation matrix of a cubic transformation of P^3 with multidegree
// (1,3,2,1); the reference fixture for determinantal minors.
LinearFormMatrix cubic_map_matrix() {
    std::vector<std::vector<LinearForm>> rows;
    rows.push_back({form({0, 0, 0, 0}), form({0, 1, 0, 0}), form({0, 0, 0, 0})});
    rows.push_back({form({1, 0, 0, 0}), form({0, 0, 0, 0}), form({0, 0, 0, 0})});
    rows.push_back({form({0, -1, 0, 0}), form({0, -1, 0, 0}), form({-1, 1, 0, 0})});
    rows.push_back({form({0, 0, 0, 1}), form({0, 0, 0, 1}), form({0, 0, 1, -1})});
    return LinearFormMatrix(3, std::move(rows));
}

SparsePolynomial poly(std::size_t vars, std::vector<std::pair<std::vector<int>, int>> terms) {
    SparsePolynomial p(vars);
    for (const auto& [exponents, coeff] : terms) {
        p.add_term(exponents, coeff);
    }
    return p;
}

}  // namespace

TEST_CASE("standard multidegrees are binomial rows") {
    CHECK(multidegrees_standard(2).degrees() == std::vector<Integer>{1, 2, 1});
    const MultidegreeSequence cubic = multidegrees_standard(3);
    CHECK(cubic.degrees() == std::vector<Integer>{1, 3, 3, 1});
    CHECK(cubic.algebraic_degree() == 3);
    CHECK(multidegrees_standard(5).degrees() == std::vector<Integer>{1, 5, 10, 10, 5, 1});
    CHECK_THROWS_AS(multidegrees_standard(1), std::invalid_argument);
}

TEST_CASE("multidegree constructor enforces the leading entries") {
    CHECK_THROWS_AS(MultidegreeSequence({2, 3, 3, 1}, 3), std::invalid_argument);
    CHECK_THROWS_AS(MultidegreeSequence({1, 2, 3, 1}, 3), std::invalid_argument);
    CHECK_THROWS_AS(MultidegreeSequence({1}, 1), std::invalid_argument);
    CHECK_THROWS_AS(MultidegreeSequence({1, 0}, 0), std::invalid_argument);
    // Negative inner entries are allowed: synthetic inputs reach them.
    const MultidegreeSequence synthetic({1, 2, -5}, 2);
    CHECK(synthetic.n() == 2);
}

TEST_CASE("standard segre numbers") {
    CHECK(segre_numbers_standard(2).numbers() == std::vector<Integer>{3});
    CHECK(segre_numbers_standard(3).numbers() == std::vector<Integer>{-28, 6});
    CHECK(segre_numbers_standard(4).numbers()[0] == 255);
    CHECK(segre_numbers_standard(5).numbers()[0] == -2376);
    CHECK_THROWS_AS(segre_numbers_standard(1), std::invalid_argument);
}

TEST_CASE("extended segre entries follow the convention") {
    const SegreVector s = segre_numbers_standard(4);
    CHECK(s.extended(4) == -1);
    CHECK(s.extended(3) == 0);
    CHECK(s.extended(0) == 255);
    CHECK_THROWS_AS(s.extended(5), std::invalid_argument);
    CHECK_THROWS_AS(s.extended(-1), std::invalid_argument);
    CHECK_THROWS_AS(SegreVector(3, {1, 2, 3}), std::invalid_argument);
}

TEST_CASE("segre signs alternate near the top") {
    // Strict alternation sign(s_k) = (-1)^{n-k} holds on the band n-k <= 7;
    // deeper entries deviate, first at n = 8 where s_0 = -3834369 < 0.
    for (int n = 2; n <= 12; ++n) {
        const SegreVector s = segre_numbers_standard(n);
        for (int k = std::max(0, n - 7); k <= n - 2; ++k) {
            const Integer& value = s.numbers()[k];
            if ((n - k) % 2 == 0) {
                CHECK(value > 0);
            } else {
                CHECK(value < 0);
            }
        }
    }
    CHECK(segre_numbers_standard(8).numbers()[0] == Integer(-3834369));
}

TEST_CASE("tail closed forms for large n") {
    for (int n = 7; n <= 12; ++n) {
        const SegreVector s = segre_numbers_standard(n);
        const Integer nn(n);
        CHECK(s.numbers()[n - 2] == nn * (n + 1) / 2);
        CHECK(s.numbers()[n - 3] == -nn * (n + 1) * (2 * n + 1) / 3);
        CHECK(s.numbers()[n - 4] == nn * (n + 1) * (5 * nn * nn + 5 * n + 2) / 8);
        CHECK(s.numbers()[n - 5] == -nn * (n + 1) * (2 * n + 1) * (7 * nn * nn + 7 * n + 6) / 30);
    }
}

TEST_CASE("conversion matrix entries and closed-form inverse") {
    const RationalMatrix m = conversion_matrix(3, 2);
    const std::vector<std::vector<int>> expected = {{-1, 0, 0}, {-3, -1, 0}, {-9, -6, -1}};
    for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t c = 0; c < 3; ++c) {
            CHECK(m.at(r, c) == expected[r][c]);
        }
    }
    for (int n = 2; n <= 10; ++n) {
        for (int deg = 2; deg <= 6; ++deg) {
            CHECK(conversion_matrix(deg, n) * conversion_matrix_inverse(deg, n) ==
                  RationalMatrix::identity(n + 1));
        }
    }
}

TEST_CASE("closed-form inverse agrees with gaussian elimination") {
    const int n = 4;
    const Integer deg = 5;
    const RationalMatrix m = conversion_matrix(deg, n);
    const RationalMatrix inv = conversion_matrix_inverse(deg, n);
    for (std::size_t col = 0; col <= n; ++col) {
        std::vector<Rational> e(n + 1, 0);
        e[col] = 1;
        const auto x = gaussian_solve(m, e);
        REQUIRE(x.has_value());
        for (std::size_t row = 0; row <= n; ++row) {
            CHECK((*x)[row] == inv.at(row, col));
        }
    }
}

TEST_CASE("conversions reproduce the reference pairs") {
    CHECK(multidegrees_from_segre(segre_numbers_standard(4), 4).degrees() ==
          std::vector<Integer>{1, 4, 6, 4, 1});
    CHECK(segre_from_multidegrees(MultidegreeSequence({1, 3, 3, 1}, 3)).numbers() ==
          std::vector<Integer>{-28, 6});
    CHECK(segre_from_multidegrees(MultidegreeSequence({1, 3, 2, 1}, 3)).numbers() ==
          std::vector<Integer>{-37, 7});
    CHECK(multidegrees_from_segre(SegreVector(3, {-37, 7}), 3).degrees() ==
          std::vector<Integer>{1, 3, 2, 1});
}

TEST_CASE("vanishing segre data gives pure powers and back") {
    const int n = 5;
    const Integer deg = 4;
    const SegreVector zero(n, std::vector<Integer>(n - 1, 0));
    const MultidegreeSequence d = multidegrees_from_segre(zero, deg);
    for (int k = 0; k <= n; ++k) {
        CHECK(d.degrees()[k] == int_pow(deg, static_cast<unsigned>(k)));
    }
    CHECK(segre_from_multidegrees(d) == zero);
}

TEST_CASE("standard sequences convert to each other") {
    for (int n = 2; n <= 12; ++n) {
        CHECK(segre_from_multidegrees(multidegrees_standard(n)) == segre_numbers_standard(n));
        CHECK(multidegrees_from_segre(segre_numbers_standard(n), n) ==
              multidegrees_standard(n));
    }
}

TEST_CASE("random segre vectors round trip") {
    std::mt19937_64 rng(123456);
    std::uniform_int_distribution<long long> entry(-1000, 1000);
    for (int n = 2; n <= 10; ++n) {
        for (int deg = 2; deg <= 6; ++deg) {
            for (int trial = 0; trial < 10; ++trial) {
                std::vector<Integer> numbers;
                for (int k = 0; k <= n - 2; ++k) numbers.push_back(entry(rng));
                const SegreVector s(n, numbers);
                CHECK(segre_from_multidegrees(multidegrees_from_segre(s, deg)) == s);
            }
        }
    }
}

TEST_CASE("hypergeometric form of the segre numbers") {
    for (int n = 2; n <= 10; ++n) {
        const SegreVector s = segre_numbers_standard(n);
        for (int k = 0; k <= n - 2; ++k) {
            const Rational h =
                hypergeom_terminating(-n, k - n, 1, make_rational(-1, Integer(n)));
            CHECK(Rational(-h * rational_pow(Rational(-n), static_cast<unsigned>(n - k))) ==
                  Rational(s.numbers()[k]));
        }
    }
}

TEST_CASE("standard matrix layout") {
    const LinearFormMatrix m = standard_matrix(2);
    CHECK(m.n() == 2);
    CHECK(m.at(0, 0) == form({1, 0, 0}));
    CHECK(m.at(0, 1) == form({0, 0, 0}));
    CHECK(m.at(1, 0) == form({0, 0, 0}));
    CHECK(m.at(1, 1) == form({0, 1, 0}));
    CHECK(m.at(2, 0) == form({0, 0, -1}));
    CHECK(m.at(2, 1) == form({0, 0, -1}));
    CHECK_THROWS_AS(standard_matrix(0), std::invalid_argument);
    CHECK_THROWS_AS(m.at(3, 0), std::out_of_range);
}

TEST_CASE("minors of the standard matrix are signed squarefree monomials") {
    const auto minors2 = maximal_minors(standard_matrix(2));
    REQUIRE(minors2.size() == 3);
    CHECK(minors2[0] == poly(3, {{{0, 1, 1}, 1}}));
    CHECK(minors2[1] == poly(3, {{{1, 0, 1}, -1}}));
    CHECK(minors2[2] == poly(3, {{{1, 1, 0}, 1}}));

    for (int n = 1; n <= 6; ++n) {
        const auto minors = maximal_minors(standard_matrix(n));
        REQUIRE(minors.size() == static_cast<std::size_t>(n + 1));
        std::vector<bool> omitted(n + 1, false);
        for (const auto& minor : minors) {
            REQUIRE(minor.terms().size() == 1);
            const auto& [exponents, coeff] = *minor.terms().begin();
            CHECK((coeff == 1 || coeff == -1));
            int zeros = 0;
            int zero_at = -1;
            for (int v = 0; v <= n; ++v) {
                CHECK(exponents[v] <= 1);
                if (exponents[v] == 0) {
                    ++zeros;
                    zero_at = v;
                }
            }
            CHECK(zeros == 1);
            omitted[zero_at] = true;
            CHECK(minor.is_homogeneous_of_degree(n));
        }
        for (int v = 0; v <= n; ++v) CHECK(omitted[v]);
    }
}

TEST_CASE("identical columns kill every minor") {
    std::vector<std::vector<LinearForm>> rows;
    for (int i = 0; i < 3; ++i) {
        const Integer a = i + 1;
        rows.push_back({form({a, 0, 1}), form({a, 0, 1})});
    }
    const auto minors = maximal_minors(LinearFormMatrix(2, std::move(rows)));
    for (const auto& m : minors) {
        CHECK(m.is_zero());
    }
}

TEST_CASE("reference cubic map minors match its components up to sign") {
    const auto minors = maximal_minors(cubic_map_matrix());
    REQUIRE(minors.size() == 4);
    const std::vector<SparsePolynomial> components = {
        poly(4, {{{1, 1, 1, 0}, 1}, {{2, 0, 0, 1}, -1}}),   // X0(X1X2 - X0X3)
        poly(4, {{{0, 2, 1, 0}, 1}, {{1, 1, 0, 1}, -1}}),   // X1(X1X2 - X0X3)
        poly(4, {{{1, 1, 1, 0}, 1}, {{1, 1, 0, 1}, -1}}),   // X0X1(X2 - X3)
        poly(4, {{{2, 1, 0, 0}, 1}, {{1, 2, 0, 0}, -1}})};  // X0X1(X0 - X1)
    for (int i = 0; i < 4; ++i) {
        const bool plus = minors[i] == components[i];
        const bool minus = minors[i] == -components[i];
        CHECK((plus || minus));
        CHECK(minors[i].is_homogeneous_of_degree(3));
    }
}

TEST_CASE("minors guard trips past the desk range and can be raised") {
    CHECK_THROWS_WITH_AS(static_cast<void>(maximal_minors(standard_matrix(7))),
                         "minors guard: Laplace expansion out of desk range (n = 7 > cap 6)",
                         std::runtime_error);
    setenv("CREMONA_DESK_GUARD", "7", 1);
    const auto minors = maximal_minors(standard_matrix(7));
    CHECK(minors.size() == 8);
    CHECK(minors[0].terms().size() == 1);
    unsetenv("CREMONA_DESK_GUARD");
}

TEST_CASE("sparse polynomial rendering") {
    CHECK(poly(3, {{{0, 1, 1}, 1}}).to_string() == "X1*X2");
    CHECK(poly(3, {{{1, 0, 1}, -1}}).to_string() == "-X0*X2");
    CHECK(poly(4, {{{2, 0, 0, 1}, -1}, {{1, 1, 1, 0}, 1}}).to_string() ==
          "X0*X1*X2 - X0^2*X3");
    CHECK(SparsePolynomial(3).to_string() == "0");
    CHECK(SparsePolynomial::constant(2, -7).to_string() == "-7");
}

TEST_CASE("base components enumerate coordinate pairs") {
    CHECK(base_components(2) ==
          std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(base_components(5).size() == 15);
    for (int n = 2; n <= 10; ++n) {
        CHECK(Integer(base_components(n).size()) ==
              segre_numbers_standard(n).extended(n - 2));
    }
    CHECK_THROWS_AS(base_components(1), std::invalid_argument);
}

TEST_CASE("chow ranks") {
    CHECK(chow_ranks(3) == std::vector<std::pair<int, Integer>>{{0, 1}, {1, 6}});
    CHECK(chow_ranks(4) == std::vector<std::pair<int, Integer>>{{0, 1}, {1, 1}, {2, 10}});
    const auto big = chow_ranks(10);
    CHECK(big.back() == std::pair<int, Integer>{8, 55});
    CHECK_THROWS_AS(chow_ranks(2), std::invalid_argument);
}

TEST_CASE("segre report aggregates every path") {
    const SegreReport three = segre_report(3);
    CHECK(three.degrees_agree);
    CHECK(three.segre_agree);
    CHECK(three.components_match_segre);
    CHECK(three.segre_formula == std::vector<Integer>{-28, 6});
    CHECK(three.chow_applicable);
    CHECK(three.chow == std::vector<std::pair<int, Integer>>{{0, 1}, {1, 6}});

    const SegreReport two = segre_report(2);
    CHECK_FALSE(two.chow_applicable);
    CHECK(two.chow.empty());

    const SegreReport eight = segre_report(8);
    CHECK(eight.degrees_agree);
    CHECK(eight.degrees_formula ==
          std::vector<Integer>{1, 8, 28, 56, 70, 56, 28, 8, 1});
    CHECK(eight.degrees_mixed_volume == eight.degrees_formula);
    CHECK(eight.degrees_extraction == eight.degrees_formula);
}
