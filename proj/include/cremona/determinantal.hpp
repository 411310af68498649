#pragma once

#include "cremona/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace cremona {

// c_0 X_0 + ... + c_n X_n over n+1 projective coordinates.
class LinearForm {
public:
    explicit LinearForm(std::vector<Integer> coefficients);

    const std::vector<Integer>& coefficients() const { return coefficients_; }
    std::size_t variable_count() const { return coefficients_.size(); }
    bool is_zero() const;

    bool operator==(const LinearForm& other) const = default;

private:
    std::vector<Integer> coefficients_;
};

// (n+1) x n matrix of linear forms in X_0..X_n.
class LinearFormMatrix {
public:
    LinearFormMatrix(int n, std::vector<std::vector<LinearForm>> rows);

    int n() const { return n_; }
    const LinearForm& at(int row, int col) const;

private:
    int n_;
    std::vector<std::vector<LinearForm>> rows_;
};

// Multivariate polynomial with integer coefficients; keys are exponent
// vectors over the n+1 variables, zero coefficients never stored.
class SparsePolynomial {
public:
    explicit SparsePolynomial(std::size_t variable_count);

    static SparsePolynomial constant(std::size_t variable_count, const Integer& c);
    static SparsePolynomial from_linear_form(const LinearForm& f);

    std::size_t variable_count() const { return variable_count_; }
    const std::map<std::vector<int>, Integer>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const std::vector<int>& exponents, const Integer& coeff);

    SparsePolynomial operator+(const SparsePolynomial& other) const;
    SparsePolynomial operator-(const SparsePolynomial& other) const;
    SparsePolynomial operator*(const SparsePolynomial& other) const;
    SparsePolynomial operator-() const;

    bool operator==(const SparsePolynomial& other) const = default;

    // True when every term has total degree `degree` (vacuous when zero).
    bool is_homogeneous_of_degree(int degree) const;

    // e.g. "X0*X1^2 - X2^3"; "0" for the zero polynomial.
    std::string to_string() const;

private:
    std::size_t variable_count_;
    std::map<std::vector<int>, Integer> terms_;
};

// The (n+1) x n matrix with X_{j-1} on the diagonal of the top n rows and
// -X_n across the last row; its maximal minors define the standard Cremona
// transformation. n >= 1.
LinearFormMatrix standard_matrix(int n);

// Minor i = plain determinant of m with row i deleted (no sign twist),
// i = 0..n, by Laplace expansion memoized on column subsets. Guarded to
// n <= 6 by default.
std::vector<SparsePolynomial> maximal_minors(const LinearFormMatrix& m);

}  // namespace cremona
