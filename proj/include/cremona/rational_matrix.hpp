#pragma once

#include "cremona/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace cremona {

class RationalMatrix {
public:
    RationalMatrix(std::size_t rows, std::size_t cols);  // zero-filled

    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c);
    const Rational& at(std::size_t r, std::size_t c) const;

    RationalMatrix operator*(const RationalMatrix& other) const;
    std::vector<Rational> apply(const std::vector<Rational>& v) const;

    bool operator==(const RationalMatrix& other) const = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> entries_;  // row-major
};

// Exact solution of m x = rhs for square m; nullopt when m is singular.
std::optional<std::vector<Rational>> gaussian_solve(const RationalMatrix& m,
                                                    const std::vector<Rational>& rhs);

std::size_t rank(RationalMatrix m);

// Basis of the right kernel {x : m x = 0}; empty when m is injective.
std::vector<std::vector<Rational>> kernel_basis(RationalMatrix m);

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b);

}  // namespace cremona
