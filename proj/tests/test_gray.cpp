#include "chainring/gray.hpp"
#include "doctest.h"

using namespace chainring;

namespace {

RingPtr z4() { return Ring::make({Family::Zps, 2, 1, 2, {}}); }
RingPtr z8() { return Ring::make({Family::Zps, 2, 1, 3, {}}); }
RingPtr z9() { return Ring::make({Family::Zps, 3, 1, 2, {}}); }

}  // namespace

TEST_CASE("Reed-Muller generator matrix shape and rows") {
    auto R4 = z4();
    GrayMatrix M = gray_matrix(*R4);
    CHECK(M.rows == 2);
    CHECK(M.cols == 2);
    CHECK(M.entries == std::vector<FieldElem>{0, 1, 1, 1});  // rows (0,1),(1,1)

    auto R8 = z8();
    GrayMatrix M8 = gray_matrix(*R8);
    CHECK(M8.rows == 3);
    CHECK(M8.cols == 4);
    CHECK(M8.entries == std::vector<FieldElem>{0, 1, 0, 1, 0, 0, 1, 1, 1, 1, 1, 1});

    auto F3 = Ring::make({Family::Zps, 3, 1, 1, {}});
    GrayMatrix M1 = gray_matrix(*F3);
    CHECK(M1.rows == 1);
    CHECK(M1.cols == 1);
    CHECK(M1.entries == std::vector<FieldElem>{1});
}

TEST_CASE("classical quaternary Gray map") {
    auto R = z4();
    CHECK(gray_map(*R, 0) == FieldVector{0, 0});
    CHECK(gray_map(*R, 1) == FieldVector{0, 1});
    CHECK(gray_map(*R, 2) == FieldVector{1, 1});
    CHECK(gray_map(*R, 3) == FieldVector{1, 0});
}

TEST_CASE("ternary Gray map hits the all-ones row") {
    auto R = z9();
    CHECK(gray_map(*R, 3) == FieldVector{1, 1, 1});
    CHECK(hamming_weight(gray_map(*R, 3)) == R->hom_weight(Elem(3)));
    CHECK(gray_map(*R, 0) == FieldVector{0, 0, 0});
}

TEST_CASE("Gray map is an isometry on every small ring") {
    std::vector<RingSpec> specs = {
        {Family::Zps, 2, 1, 2, {}},        {Family::Zps, 2, 1, 3, {}},
        {Family::Zps, 3, 1, 2, {}},        {Family::GaloisRing, 2, 2, 2, {}},
        {Family::FqU, 2, 1, 2, {}},        {Family::FqU, 2, 2, 2, {}},
    };
    for (const auto& spec : specs) {
        auto R = Ring::make(spec);
        for (uint64_t x = 0; x < R->size(); ++x)
            CHECK(hamming_weight(gray_map(*R, Elem(x))) == R->hom_weight(Elem(x)));
    }
}

TEST_CASE("hamming weight on vectors") {
    std::vector<uint32_t> v = {0, 1, 2, 3};
    CHECK(hamming_weight(v) == 3);
    std::vector<uint32_t> zeros(5, 0);
    CHECK(hamming_weight(zeros) == 0);
    std::vector<uint32_t> h2 = {1, 1, 1, 1, 0, 2};  // first row of the Z4 beta matrix, k=2
    CHECK(hamming_weight(h2) == 5);
}

TEST_CASE("vector Gray map concatenates per coordinate") {
    auto R = z4();
    std::vector<Elem> v = {1, 2};
    CHECK(gray_map_vector(*R, v) == FieldVector{0, 1, 1, 1});
}
