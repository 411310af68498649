#include "cremona/rational_matrix.hpp"

#include <stdexcept>

namespace cremona {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {
    if (rows == 0 || cols == 0) {
        throw std::invalid_argument("RationalMatrix: dimensions must be positive");
    }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Rational& RationalMatrix::at(std::size_t r, std::size_t c) {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("RationalMatrix::at");
    return entries_[r * cols_ + c];
}

const Rational& RationalMatrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("RationalMatrix::at");
    return entries_[r * cols_ + c];
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
    if (cols_ != other.rows_) {
        throw std::invalid_argument("RationalMatrix: product dimension mismatch");
    }
    RationalMatrix result(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& m_ik = at(i, k);
            if (m_ik == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) {
                result.at(i, j) += m_ik * other.at(k, j);
            }
        }
    }
    return result;
}

std::vector<Rational> RationalMatrix::apply(const std::vector<Rational>& v) const {
    if (v.size() != cols_) {
        throw std::invalid_argument("RationalMatrix: vector dimension mismatch");
    }
    std::vector<Rational> result(rows_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            result[i] += at(i, j) * v[j];
        }
    }
    return result;
}

namespace {

// In-place reduction to row echelon form; returns the pivot column per
// eliminated row.
std::vector<std::size_t> echelonize(RationalMatrix& m) {
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && m.at(pivot, col) == 0) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != row) {
            for (std::size_t j = 0; j < m.cols(); ++j) {
                std::swap(m.at(pivot, j), m.at(row, j));
            }
        }
        const Rational inv = Rational(1) / m.at(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            const Rational factor = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) {
                m.at(i, j) -= factor * m.at(row, j);
            }
        }
        pivot_cols.push_back(col);
        ++row;
    }
    return pivot_cols;
}

}  // namespace

std::optional<std::vector<Rational>> gaussian_solve(const RationalMatrix& m,
                                                    const std::vector<Rational>& rhs) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("gaussian_solve: matrix must be square");
    }
    if (rhs.size() != m.rows()) {
        throw std::invalid_argument("gaussian_solve: rhs dimension mismatch");
    }
    const std::size_t n = m.rows();
    RationalMatrix aug(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n) = rhs[i];
    }
    const auto pivots = echelonize(aug);
    if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = aug.at(i, n);
    return x;
}

std::size_t rank(RationalMatrix m) {
    return echelonize(m).size();
}

std::vector<std::vector<Rational>> kernel_basis(RationalMatrix m) {
    const std::size_t n = m.cols();
    const auto pivots = echelonize(m);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rational> v(n, Rational(0));
        v[free_col] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            v[pivots[r]] = -m.at(r, free_col);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("dot: dimension mismatch");
    }
    Rational sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
    return sum;
}

}  // namespace cremona
