#ifndef CHAINRING_WEIGHTS_HPP
#define CHAINRING_WEIGHTS_HPP

#include <cstdint>
#include <map>
#include <string>

#include "chainring/gray.hpp"
#include "chainring/simplex.hpp"

namespace chainring {

enum class WeightKind { hamming, homogeneous };

std::string weight_kind_name(WeightKind kind);
WeightKind parse_weight_kind(const std::string& name);

struct WeightDistribution {
    WeightKind kind = WeightKind::hamming;
    uint64_t length = 0;
    std::map<uint64_t, uint64_t> counts;  // weight -> number of codewords

    uint64_t total() const;
    /// W(X,Y) = sum A_i X^{n-i} Y^i, terms sorted by the Y exponent.
    std::string enumerator_polynomial() const;
    std::string to_csv() const;  // "weight,count" lines, ascending weight

    bool operator==(const WeightDistribution&) const = default;
};

/// Exact counts over all q^{sk} codewords, by exhaustive enumeration.
WeightDistribution empirical_distribution(const SimplexCode& code, WeightKind kind,
                                          uint64_t enumeration_cap = kDefaultEnumerationCap);

/// Closed-form distribution. Depends only on (q, s, k):
///   alpha hamming:     w_j = q^{sk} - q^{s(k-1)+j}, A = q^{k(s-j)} - q^{k(s-j-1)}
///   beta hamming:      w_j = L(k) - q^j L(k-1), same counts (k >= 2)
///   alpha homogeneous: single weight q^{s(k+1)-2}(q-1), count q^{sk}-1
///   beta homogeneous:  q^{sk-1} with count q^k-1 and q^{sk-k-1}(q^k-1) with
///                      count q^{sk}-q^k (zero counts dropped, equal weights merged)
/// For beta with k = 1 the code is R itself and the distribution is that of
/// the full ring as a length-1 code.
WeightDistribution predicted_distribution(MatrixFamily family, WeightKind kind, uint64_t q,
                                          uint32_t s, uint32_t k);

/// Smallest weight with positive count, excluding zero.
uint64_t min_distance(const WeightDistribution& dist);

struct GrayImageParams {
    uint64_t length = 0;    // n' = n * q^{s-1}
    uint64_t size = 0;      // M = q^{sk}
    uint64_t distance = 0;  // minimum Hamming distance of the image
};

/// Closed-form (n', M, d) of the Gray image. With verify set, maps every
/// codeword, re-derives all three parameters plus the full Hamming
/// distribution, and throws VerificationMismatch on any difference from the
/// predicted homogeneous distribution of the preimage.
GrayImageParams gray_image_parameters(MatrixFamily family, RingPtr ring, uint32_t k, bool verify,
                                      uint64_t enumeration_cap = kDefaultEnumerationCap);

struct GriesmerReport {
    uint64_t n = 0;
    uint32_t k = 0;  // rank; equals k for free codes
    uint64_t d = 0;
    uint64_t bound = 0;  // sum_{i<k} ceil(d / q^i)
    uint64_t slack = 0;  // n - bound
    bool optimal = false;
};

GriesmerReport griesmer_report(uint64_t n, uint32_t k, uint64_t d, uint64_t q);

/// Griesmer verdict for a simplex code, using the proven minimum distances.
GriesmerReport simplex_griesmer(MatrixFamily family, const Ring& ring, uint32_t k);

struct OrderFormResult {
    uint64_t ord = 0;     // smallest m > 0 with m*c = 0; equals p^{s-nu(c)}
    uint64_t weight = 0;  // Hamming weight from the order-form expression
};

/// Z_{p^s} only: computes ord(c) directly and checks the order-form Hamming
/// weight expression against the actual nonzero-coordinate count.
OrderFormResult order_form_weights(const SimplexCode& code, std::span<const Elem> c);

}  // namespace chainring

#endif
