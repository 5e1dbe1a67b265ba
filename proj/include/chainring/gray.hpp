#ifndef CHAINRING_GRAY_HPP
#define CHAINRING_GRAY_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "chainring/ring.hpp"

namespace chainring {

/// Field elements are indexed 0..q-1 by the base-p value of their coefficient
/// vector; this matches the order of the digit alphabet T in ring_core.
using FieldElem = uint32_t;
using FieldVector = std::vector<FieldElem>;

/// Generator matrix of the q-ary first-order Reed-Muller code RM(s-1,1):
/// s rows of length q^{s-1}. Column y indexes the point (y_0,...,y_{s-2}) in
/// F_q^{s-1}, lexicographic with y_0 least significant. Rows 0..s-2 evaluate
/// the coordinates (row i at column y equals y_i); row s-1 is all-ones.
struct GrayMatrix {
    uint32_t rows = 0;
    uint64_t cols = 0;
    std::vector<FieldElem> entries;  // row-major

    FieldElem at(uint32_t i, uint64_t j) const { return entries[i * cols + j]; }
};

GrayMatrix gray_matrix(const Ring& ring);

/// Generalized Gray map: the digit residues (r0,...,r_{s-1}) times the
/// RM(s-1,1) generator matrix; one ring element maps to q^{s-1} field
/// coordinates. Injective, and w_H(gray_map(x)) = hom_weight(x) for all x.
FieldVector gray_map(const Ring& ring, Elem x);

/// Component-wise extension; concatenates the per-coordinate images.
FieldVector gray_map_vector(const Ring& ring, std::span<const Elem> v);

/// Number of nonzero coordinates; applies to ring and field vectors alike
/// (both are represented by their canonical indices, with 0 mapping to 0).
uint64_t hamming_weight(std::span<const uint32_t> v);

}  // namespace chainring

#endif
