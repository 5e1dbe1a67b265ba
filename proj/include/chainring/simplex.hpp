#ifndef CHAINRING_SIMPLEX_HPP
#define CHAINRING_SIMPLEX_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "chainring/ring.hpp"

namespace chainring {

enum class MatrixFamily { alpha, beta, gh_A, custom };

std::string matrix_family_name(MatrixFamily f);

constexpr uint64_t kDefaultColumnCap = uint64_t(1) << 24;
constexpr uint64_t kDefaultEnumerationCap = uint64_t(1) << 24;

struct GeneratorMatrix {
    RingPtr ring;
    MatrixFamily family = MatrixFamily::custom;
    uint32_t k = 0;
    uint64_t n = 0;
    std::vector<Elem> entries;  // row-major, k x n

    Elem at(uint32_t i, uint64_t j) const { return entries[i * n + j]; }
    std::span<const Elem> row(uint32_t i) const { return {entries.data() + i * n, size_t(n)}; }
};

/// L_beta(k) = q^{(s-1)(k-1)} (q^k - 1)/(q - 1), the beta code length.
uint64_t beta_length(uint64_t q, uint32_t s, uint32_t k);

/// G_k^alpha: the k x q^{sk} matrix whose columns are exactly R^k, built by
/// stacking the block-constant row over q^s copies of G_{k-1}^alpha.
GeneratorMatrix simplex_alpha_matrix(RingPtr ring, uint32_t k,
                                     uint64_t column_cap = kDefaultColumnCap);

/// G_k^beta: G_1^beta = (1); for k > 1 the all-ones row over G_{k-1}^alpha
/// is followed by one gamma-multiple block per ascending element of <gamma>,
/// each over a copy of G_{k-1}^beta.
GeneratorMatrix simplex_beta_matrix(RingPtr ring, uint32_t k,
                                    uint64_t column_cap = kDefaultColumnCap);

struct ColumnDistinctness {
    bool ok = true;
    // first counterexample g_i = lambda * g_j with (lambda, i) != (1, j)
    uint64_t i = 0, j = 0;
    Elem lambda = 0;
};

/// True iff g_i = lambda * g_j forces lambda = 1 and i = j over all column
/// pairs and ring scalars (exhaustive).
ColumnDistinctness verify_column_distinctness(const GeneratorMatrix& G);

struct SimplexCode {
    GeneratorMatrix gen;

    const Ring& ring() const { return *gen.ring; }
    uint32_t k() const { return gen.k; }
    uint64_t length() const { return gen.n; }
    uint64_t num_codewords() const;  // q^{sk}
};

SimplexCode make_simplex_code(RingPtr ring, MatrixFamily family, uint32_t k,
                              uint64_t column_cap = kDefaultColumnCap);

using CodewordFn = std::function<void(std::span<const Elem> coeffs, std::span<const Elem> codeword)>;

/// Visits all q^{sk} codewords, coefficients in ascending rank order of R^k
/// with the rightmost coordinate varying fastest.
void enumerate_codewords(const GeneratorMatrix& G, const CodewordFn& fn,
                         uint64_t enumeration_cap = kDefaultEnumerationCap);

/// Checks nu(c) = min_i nu(alpha_i) over every enumerated codeword.
bool codeword_valuation_check(const SimplexCode& code,
                              uint64_t enumeration_cap = kDefaultEnumerationCap);

/// Recursive GH generator matrix A^{t_1,...,t_s} over Z_{p^s}; the returned
/// matrix has sum(t_i) rows. t must have size s and t[0] >= 1.
GeneratorMatrix gh_A_matrix(uint32_t p, uint32_t s, std::span<const uint32_t> t,
                            uint64_t column_cap = kDefaultColumnCap);

/// True iff A^{k+1,0,...,0} with its last (all-ones) row removed equals
/// G_k^alpha entry-wise. Requires a Zps ring.
bool alpha_equals_trimmed_A(const RingPtr& ring, uint32_t k,
                            uint64_t column_cap = kDefaultColumnCap);

/// Header line "family k n ring-spec", then one space-separated row per line.
std::string export_matrix(const GeneratorMatrix& G);

}  // namespace chainring

#endif
