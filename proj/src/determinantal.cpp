#include "cremona/determinantal.hpp"

#include "cremona/desk_guard.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cremona {

LinearForm::LinearForm(std::vector<Integer> coefficients)
    : coefficients_(std::move(coefficients)) {
    if (coefficients_.empty()) {
        throw std::invalid_argument("LinearForm: need at least one coefficient");
    }
}

bool LinearForm::is_zero() const {
    return std::all_of(coefficients_.begin(), coefficients_.end(),
                       [](const Integer& c) { return c == 0; });
}

LinearFormMatrix::LinearFormMatrix(int n, std::vector<std::vector<LinearForm>> rows)
    : n_(n), rows_(std::move(rows)) {
    if (n_ < 1) {
        throw std::invalid_argument("LinearFormMatrix: n must be positive");
    }
    if (rows_.size() != static_cast<std::size_t>(n_ + 1)) {
        throw std::invalid_argument("LinearFormMatrix: need n+1 rows");
    }
    for (const auto& row : rows_) {
        if (row.size() != static_cast<std::size_t>(n_)) {
            throw std::invalid_argument("LinearFormMatrix: need n forms per row");
        }
        for (const auto& form : row) {
            if (form.variable_count() != static_cast<std::size_t>(n_ + 1)) {
                throw std::invalid_argument("LinearFormMatrix: forms need n+1 coefficients");
            }
        }
    }
}

const LinearForm& LinearFormMatrix::at(int row, int col) const {
    if (row < 0 || row > n_ || col < 0 || col >= n_) {
        throw std::out_of_range("LinearFormMatrix::at");
    }
    return rows_[row][col];
}

SparsePolynomial::SparsePolynomial(std::size_t variable_count)
    : variable_count_(variable_count) {
    if (variable_count_ == 0) {
        throw std::invalid_argument("SparsePolynomial: need at least one variable");
    }
}

SparsePolynomial SparsePolynomial::constant(std::size_t variable_count, const Integer& c) {
    SparsePolynomial p(variable_count);
    p.add_term(std::vector<int>(variable_count, 0), c);
    return p;
}

SparsePolynomial SparsePolynomial::from_linear_form(const LinearForm& f) {
    SparsePolynomial p(f.variable_count());
    for (std::size_t i = 0; i < f.variable_count(); ++i) {
        std::vector<int> exponents(f.variable_count(), 0);
        exponents[i] = 1;
        p.add_term(exponents, f.coefficients()[i]);
    }
    return p;
}

void SparsePolynomial::add_term(const std::vector<int>& exponents, const Integer& coeff) {
    if (exponents.size() != variable_count_) {
        throw std::invalid_argument("SparsePolynomial: exponent length mismatch");
    }
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponents, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

SparsePolynomial SparsePolynomial::operator+(const SparsePolynomial& other) const {
    if (variable_count_ != other.variable_count_) {
        throw std::invalid_argument("SparsePolynomial: variable count mismatch");
    }
    SparsePolynomial result = *this;
    for (const auto& [exp, coeff] : other.terms_) result.add_term(exp, coeff);
    return result;
}

SparsePolynomial SparsePolynomial::operator-(const SparsePolynomial& other) const {
    if (variable_count_ != other.variable_count_) {
        throw std::invalid_argument("SparsePolynomial: variable count mismatch");
    }
    SparsePolynomial result = *this;
    for (const auto& [exp, coeff] : other.terms_) result.add_term(exp, -coeff);
    return result;
}

SparsePolynomial SparsePolynomial::operator*(const SparsePolynomial& other) const {
    if (variable_count_ != other.variable_count_) {
        throw std::invalid_argument("SparsePolynomial: variable count mismatch");
    }
    SparsePolynomial result(variable_count_);
    std::vector<int> exponents(variable_count_);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : other.terms_) {
            for (std::size_t i = 0; i < variable_count_; ++i) {
                exponents[i] = e1[i] + e2[i];
            }
            result.add_term(exponents, c1 * c2);
        }
    }
    return result;
}

SparsePolynomial SparsePolynomial::operator-() const {
    SparsePolynomial result(variable_count_);
    for (const auto& [exp, coeff] : terms_) result.terms_.emplace(exp, -coeff);
    return result;
}

bool SparsePolynomial::is_homogeneous_of_degree(int degree) const {
    for (const auto& [exp, coeff] : terms_) {
        int total = 0;
        for (int e : exp) total += e;
        if (total != degree) return false;
    }
    return true;
}

std::string SparsePolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [exp, coeff] : terms_) {
        const bool negative = coeff < 0;
        const Integer magnitude = negative ? Integer(-coeff) : coeff;
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        std::string monomial;
        for (std::size_t i = 0; i < exp.size(); ++i) {
            if (exp[i] == 0) continue;
            if (!monomial.empty()) monomial += "*";
            monomial += "X" + std::to_string(i);
            if (exp[i] > 1) monomial += "^" + std::to_string(exp[i]);
        }
        if (monomial.empty()) {
            out << magnitude.str();
        } else {
            if (magnitude != 1) out << magnitude.str() << "*";
            out << monomial;
        }
    }
    return out.str();
}

LinearFormMatrix standard_matrix(int n) {
    if (n < 1) {
        throw std::invalid_argument("standard_matrix: n must be positive");
    }
    std::vector<std::vector<LinearForm>> rows;
    rows.reserve(n + 1);
    for (int i = 0; i < n; ++i) {
        std::vector<LinearForm> row;
        row.reserve(n);
        for (int j = 0; j < n; ++j) {
            std::vector<Integer> coeffs(n + 1, Integer(0));
            if (i == j) coeffs[i] = 1;
            row.emplace_back(std::move(coeffs));
        }
        rows.push_back(std::move(row));
    }
    std::vector<LinearForm> last;
    last.reserve(n);
    for (int j = 0; j < n; ++j) {
        std::vector<Integer> coeffs(n + 1, Integer(0));
        coeffs[n] = -1;
        last.emplace_back(std::move(coeffs));
    }
    rows.push_back(std::move(last));
    return LinearFormMatrix(n, std::move(rows));
}

namespace {

// Determinant of the n x n submatrix keeping `rows`, by Laplace expansion
// along successive rows; memoized on the set of still-unused columns.
class MinorExpander {
public:
    MinorExpander(const std::vector<std::vector<SparsePolynomial>>& entries, int n)
        : entries_(entries), n_(n) {}

    SparsePolynomial expand(const std::vector<int>& rows) {
        rows_ = &rows;
        memo_.clear();
        return expand_mask((1u << n_) - 1, 0);
    }

private:
    SparsePolynomial expand_mask(unsigned mask, int level) {
        if (mask == 0) {
            return SparsePolynomial::constant(n_ + 1, 1);
        }
        auto it = memo_.find(mask);
        if (it != memo_.end()) return it->second;
        SparsePolynomial det(n_ + 1);
        const int row = (*rows_)[level];
        int position = 0;
        for (int col = 0; col < n_; ++col) {
            if (!(mask & (1u << col))) continue;
            const SparsePolynomial& entry = entries_[row][col];
            if (!entry.is_zero()) {
                SparsePolynomial sub = expand_mask(mask & ~(1u << col), level + 1);
                SparsePolynomial product = entry * sub;
                det = (position % 2 == 0) ? det + product : det - product;
            }
            ++position;
        }
        return memo_.emplace(mask, std::move(det)).first->second;
    }

    const std::vector<std::vector<SparsePolynomial>>& entries_;
    int n_;
    const std::vector<int>* rows_ = nullptr;
    std::map<unsigned, SparsePolynomial> memo_;
};

}  // namespace

std::vector<SparsePolynomial> maximal_minors(const LinearFormMatrix& m) {
    const int n = m.n();
    const int cap = guard_cap(6);
    if (n > cap) {
        std::ostringstream msg;
        msg << "minors guard: Laplace expansion out of desk range (n = " << n
            << " > cap " << cap << ")";
        throw std::runtime_error(msg.str());
    }
    std::vector<std::vector<SparsePolynomial>> entries(
        n + 1, std::vector<SparsePolynomial>(n, SparsePolynomial(n + 1)));
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; j < n; ++j) {
            entries[i][j] = SparsePolynomial::from_linear_form(m.at(i, j));
        }
    }
    MinorExpander expander(entries, n);
    std::vector<SparsePolynomial> minors;
    minors.reserve(n + 1);
    for (int deleted = 0; deleted <= n; ++deleted) {
        std::vector<int> rows;
        rows.reserve(n);
        for (int i = 0; i <= n; ++i) {
            if (i != deleted) rows.push_back(i);
        }
        minors.push_back(expander.expand(rows));
    }
    return minors;
}

}  // namespace cremona
