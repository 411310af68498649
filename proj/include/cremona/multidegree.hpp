#pragma once

#include "cremona/rational.hpp"
#include "cremona/rational_matrix.hpp"

#include <utility>
#include <vector>

namespace cremona {

// Degrees d_0..d_n of images of general linear subspaces under a rational
// map of algebraic degree ∂. Enforced: d_0 = 1 and d_1 = ∂. Entries may be
// negative for synthetic inputs; geometric sequences are non-negative.
class MultidegreeSequence {
public:
    MultidegreeSequence(std::vector<Integer> degrees, Integer algebraic_degree);

    int n() const { return static_cast<int>(degrees_.size()) - 1; }
    const std::vector<Integer>& degrees() const { return degrees_; }
    const Integer& algebraic_degree() const { return algebraic_degree_; }

    bool operator==(const MultidegreeSequence& other) const = default;

private:
    std::vector<Integer> degrees_;
    Integer algebraic_degree_;
};

// Segre numbers s_0..s_{n-2}, extended by convention with s_{n-1} = 0 and
// s_n = -1 (the vector the conversion matrix acts on).
class SegreVector {
public:
    SegreVector(int n, std::vector<Integer> numbers);

    int n() const { return n_; }
    const std::vector<Integer>& numbers() const { return numbers_; }

    // s_k for 0 <= k <= n under the extension convention.
    Integer extended(int k) const;

    bool operator==(const SegreVector& other) const = default;

private:
    int n_;
    std::vector<Integer> numbers_;
};

// d_k = C(n,k) with algebraic degree n; the standard Cremona values. n >= 2.
MultidegreeSequence multidegrees_standard(int n);

// s_k = (-1)^(n-k-1) sum_{j=0}^{n-k} (-1)^j C(n-k,j) C(n,j) n^(n-k-j),
// 0 <= k <= n-2. n >= 2.
SegreVector segre_numbers_standard(int n);

// (n+1)x(n+1) lower-triangular M with entries -C(k,l) deg^(k-l) for l <= k.
RationalMatrix conversion_matrix(const Integer& deg, int n);

// Closed-form inverse: entries (-1)^(1+k+l) C(k,l) deg^(k-l) for l <= k.
RationalMatrix conversion_matrix_inverse(const Integer& deg, int n);

// d = M v where v_l = s_{n-l} (so v_0 = -1, v_1 = 0, the rest the numbers
// in reverse).
MultidegreeSequence multidegrees_from_segre(const SegreVector& s, const Integer& deg);

// The inverse direction via the alternating binomial sum; the extended
// entries are recomputed and must come out 0 and -1, else the data is
// inconsistent.
SegreVector segre_from_multidegrees(const MultidegreeSequence& d);

// All pairs {i, j}, 0 <= i < j <= n: the codimension-2 coordinate subspaces
// X_i = X_j = 0 supporting the base locus. n >= 2.
std::vector<std::pair<int, int>> base_components(int n);

// Chow group ranks of the base locus: (k, 1) for 0 <= k <= n-3 and
// (n-2, n(n+1)/2). n >= 3.
std::vector<std::pair<int, Integer>> chow_ranks(int n);

struct SegreReport {
    int n = 0;
    std::vector<Integer> degrees_formula;
    std::vector<Integer> degrees_mixed_volume;
    std::vector<Integer> degrees_extraction;
    bool degrees_agree = false;
    std::vector<Integer> segre_formula;
    std::vector<Integer> segre_conversion;
    std::vector<Integer> segre_hypergeometric;
    bool segre_agree = false;
    Integer component_count;
    bool components_match_segre = false;
    bool chow_applicable = false;
    std::vector<std::pair<int, Integer>> chow;
};

// Aggregates every computation path for one n, with agreement flags. n >= 2.
SegreReport segre_report(int n);

}  // namespace cremona
