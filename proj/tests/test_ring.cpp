#include <sstream>

#include "chainring/ring.hpp"
#include "doctest.h"

using namespace chainring;

namespace {

RingPtr z4() { return Ring::make({Family::Zps, 2, 1, 2, {}}); }
RingPtr z9() { return Ring::make({Family::Zps, 3, 1, 2, {}}); }
RingPtr gr42() { return Ring::make({Family::GaloisRing, 2, 2, 2, {1, 1, 1}}); }
RingPtr f2u2() { return Ring::make({Family::FqU, 2, 1, 2, {}}); }

}  // namespace

TEST_CASE("Zps elements are ranked as plain integers") {
    auto R = z9();
    CHECK(R->q() == 3);
    CHECK(R->s() == 2);
    CHECK(R->size() == 9);
    CHECK(R->zero() == 0);
    CHECK(R->one() == 1);
    for (Elem x = 0; x < 9; ++x) CHECK(R->to_string(x) == std::to_string(x));
}

TEST_CASE("s = 1 ring is the residue field") {
    auto F2 = Ring::make({Family::Zps, 2, 1, 1, {}});
    CHECK(F2->size() == 2);
    CHECK(F2->gamma() == 0);
    CHECK(F2->valuation(1) == Valuation::finite(0));
    CHECK(F2->valuation(0).is_infinite());
}

TEST_CASE("GR(4,2) ascending element order") {
    auto R = gr42();
    CHECK(R->q() == 4);
    CHECK(R->size() == 16);
    // listing starts 0, 1, w, w+1, 2, 3, 2+w, 3+w, 2w, 2w+1, 3w, 3w+1, ...
    // (w = the class of x). 2+w has polynomial coefficients (2,1), so its
    // gamma-adic digits are (w, 1) and its rank is 2 + 4*1 = 6.
    CHECK(R->digit(0, 0) == 0);
    CHECK(R->digit(1, 0) == 1);
    CHECK(R->digit(2, 0) == 2);   // rank 2 is w itself
    CHECK(R->digit(2, 1) == 0);
    CHECK(R->digit(6, 0) == 2);   // rank 6 = 2+w: residue w, next digit 1
    CHECK(R->digit(6, 1) == 1);
    CHECK(R->digit(11, 0) == 3);  // rank 11 = 3w+1 = (w+1) + 2w
    CHECK(R->digit(11, 1) == 2);
}

TEST_CASE("arithmetic examples") {
    auto R9 = z9();
    CHECK(R9->add(4, 7) == 2);
    CHECK(R9->mul(4, 7) == 1);
    for (Elem x = 0; x < 9; ++x) {
        CHECK(R9->add(x, 0) == x);
        CHECK(R9->mul(x, 1) == x);
    }
    // GR(4,2): w * w = 3 + 3w (x^2 = -x - 1 = 3x + 3 mod (4, x^2+x+1)).
    // 3+3w has coefficients (3,3), digits (w+1, w+1), rank 3 + 4*3 = 15.
    auto R = gr42();
    CHECK(R->mul(2, 2) == 15);
}

TEST_CASE("RingElement guards against mixed rings") {
    RingElement a(z4(), 1), b(z9(), 1);
    CHECK_THROWS_WITH_AS(a + b, doctest::Contains("different rings"), Error);
    RingElement c(z4(), 2), d(z4(), 3);
    CHECK((c + d).value() == 1);
    CHECK((c * d).value() == 2);
    CHECK((c - d).value() == 3);
}

TEST_CASE("valuation") {
    auto R4 = z4();
    CHECK(R4->valuation(2) == Valuation::finite(1));
    CHECK(R4->valuation(3) == Valuation::finite(0));
    CHECK(R4->valuation(0).is_infinite());
    CHECK(z9()->valuation(6) == Valuation::finite(1));

    std::vector<Elem> v = {2, 0, 2};
    CHECK(R4->vector_valuation(v) == Valuation::finite(1));
    std::vector<Elem> zeros = {0, 0, 0};
    CHECK(R4->vector_valuation(zeros).is_infinite());
    std::vector<Elem> w = {3, 1, 6};
    CHECK(z9()->vector_valuation(w) == Valuation::finite(0));
    std::vector<Elem> empty;
    CHECK_THROWS_AS(R4->vector_valuation(empty), Error);
}

TEST_CASE("valuation saturating sum and order") {
    Valuation inf = Valuation::infinity();
    CHECK(Valuation::finite(1).add(Valuation::finite(1), 2).is_infinite());
    CHECK(Valuation::finite(0).add(Valuation::finite(1), 3) == Valuation::finite(1));
    CHECK(inf.add(Valuation::finite(0), 2).is_infinite());
    CHECK(Valuation::finite(1) < inf);
    CHECK(!(inf < inf));
    CHECK(Valuation::finite(0) < Valuation::finite(1));
}

TEST_CASE("ideal elements") {
    auto R9 = z9();
    CHECK(R9->ideal_elements(1) == std::vector<Elem>{0, 3, 6});
    CHECK(R9->ideal_elements(0).size() == 9);
    CHECK(R9->ideal_elements(2) == std::vector<Elem>{0});
    // GR(4,2), j=1: [0, 2, 2w, 2w+2] = ranks {0, 4, 8, 12}
    CHECK(gr42()->ideal_elements(1) == std::vector<Elem>{0, 4, 8, 12});
    CHECK_THROWS_AS(R9->ideal_elements(3), Error);
}

TEST_CASE("homogeneous weight") {
    auto R4 = z4();
    CHECK(R4->hom_weight(Elem(0)) == 0);
    CHECK(R4->hom_weight(Elem(1)) == 1);
    CHECK(R4->hom_weight(Elem(2)) == 2);
    CHECK(R4->hom_weight(Elem(3)) == 1);
    auto R9 = z9();
    CHECK(R9->hom_weight(Elem(3)) == 3);
    CHECK(R9->hom_weight(Elem(2)) == 2);
}

TEST_CASE("residue projection") {
    CHECK(z9()->residue(7) == 1);
    CHECK(z9()->residue(0) == 0);
    CHECK(z9()->residue(1) == 1);
    CHECK(gr42()->residue(6) == 2);  // 2+w reduces to w (field index 2)
}

TEST_CASE("ring construction rejects bad specs") {
    CHECK_THROWS_AS(Ring::make({Family::Zps, 4, 1, 2, {}}), Error);  // 4 not prime
    // x^2 + 1 = (x+1)^2 over F_2
    CHECK_THROWS_AS(Ring::make({Family::GaloisRing, 2, 2, 2, {1, 0, 1}}), Error);
    CHECK_THROWS_AS(Ring::make({Family::Zps, 2, 1, 20, {}}), Error);  // over the cap
    try {
        Ring::make({Family::Zps, 6, 1, 1, {}});
        FAIL("expected a NonPrimeP error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NonPrimeP);
    }
}

TEST_CASE("irreducibility and default moduli") {
    std::vector<uint32_t> f = {1, 1, 1};  // x^2+x+1 over F_2
    CHECK(is_irreducible_mod_p(f, 2));
    std::vector<uint32_t> g = {1, 0, 1};  // x^2+1 over F_2
    CHECK(!is_irreducible_mod_p(g, 2));
    CHECK(default_modulus(2, 2) == std::vector<uint32_t>{1, 1, 1});
    CHECK(default_modulus(3, 2) == std::vector<uint32_t>{2, 1, 1});
    CHECK(default_modulus(2, 3) == std::vector<uint32_t>{1, 1, 0, 1});
}

TEST_CASE("serialization round-trips every element") {
    for (auto ring : {z4(), z9(), gr42(), f2u2()}) {
        for (uint64_t x = 0; x < ring->size(); ++x) {
            std::string text = ring->to_string(Elem(x));
            CHECK(ring->parse(text) == Elem(x));
        }
    }
    // non-Zps families serialize as colon-separated digit indices
    CHECK(gr42()->to_string(6) == "2:1");
    CHECK(f2u2()->to_string(3) == "1:1");
}

TEST_CASE("ring spec file parsing") {
    std::istringstream in(
        "family = gr\n"
        "p = 2\n"
        "r = 2\n"
        "s = 2\n"
        "modulus = 1 1 1\n");
    RingSpec spec = parse_ring_spec(in);
    CHECK(spec.family == Family::GaloisRing);
    CHECK(spec.p == 2);
    CHECK(spec.r == 2);
    CHECK(spec.s == 2);
    CHECK(spec.modulus == std::vector<uint32_t>{1, 1, 1});
    CHECK(Ring::make(spec)->size() == 16);
}

TEST_CASE("FqU digitwise arithmetic") {
    auto R = f2u2();  // F_2[u]/(u^2)
    CHECK(R->size() == 4);
    CHECK(R->gamma() == 2);                      // u has digits (0,1)
    CHECK(R->add(1, 1) == 0);                    // characteristic 2
    CHECK(R->mul(2, 2) == 0);                    // u^2 = 0
    CHECK(R->mul(3, 3) == 1);                    // (1+u)^2 = 1
    CHECK(R->valuation(2) == Valuation::finite(1));
}
