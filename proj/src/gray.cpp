#include "chainring/gray.hpp"

#include <algorithm>

namespace chainring {

namespace {

uint64_t ipow(uint64_t base, uint32_t exp) {
    uint64_t r = 1;
    while (exp--) r *= base;
    return r;
}

}  // namespace

GrayMatrix gray_matrix(const Ring& ring) {
    const uint32_t s = ring.s();
    const uint32_t q = ring.q();
    GrayMatrix m;
    m.rows = s;
    m.cols = ipow(q, s - 1);
    m.entries.assign(uint64_t(m.rows) * m.cols, 0);
    for (uint64_t y = 0; y < m.cols; ++y) {
        uint64_t t = y;
        for (uint32_t i = 0; i + 1 < s; ++i) {
            m.entries[i * m.cols + y] = FieldElem(t % q);
            t /= q;
        }
        m.entries[uint64_t(s - 1) * m.cols + y] = 1;
    }
    return m;
}

FieldVector gray_map(const Ring& ring, Elem x) {
    const uint32_t s = ring.s();
    const uint32_t q = ring.q();
    const uint64_t len = ipow(q, s - 1);
    std::vector<FieldElem> digits(s);
    for (uint32_t i = 0; i < s; ++i) digits[i] = ring.digit(x, i);
    FieldVector out(len);
    for (uint64_t y = 0; y < len; ++y) {
        FieldElem acc = digits[s - 1];
        uint64_t t = y;
        for (uint32_t i = 0; i + 1 < s; ++i) {
            FieldElem yi = FieldElem(t % q);
            t /= q;
            if (digits[i] != 0 && yi != 0) acc = ring.field_add(acc, ring.field_mul(digits[i], yi));
        }
        out[y] = acc;
    }
    return out;
}

FieldVector gray_map_vector(const Ring& ring, std::span<const Elem> v) {
    const uint64_t len = ipow(ring.q(), ring.s() - 1);
    FieldVector out;
    out.reserve(len * v.size());
    for (Elem x : v) {
        FieldVector img = gray_map(ring, x);
        out.insert(out.end(), img.begin(), img.end());
    }
    return out;
}

uint64_t hamming_weight(std::span<const uint32_t> v) {
    return uint64_t(std::count_if(v.begin(), v.end(), [](uint32_t x) { return x != 0; }));
}

}  // namespace chainring
