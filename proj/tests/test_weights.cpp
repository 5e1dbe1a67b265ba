#include "chainring/verify.hpp"
#include "doctest.h"

using namespace chainring;

namespace {

RingPtr z4() { return Ring::make({Family::Zps, 2, 1, 2, {}}); }
RingPtr z9() { return Ring::make({Family::Zps, 3, 1, 2, {}}); }

std::map<uint64_t, uint64_t> counts_of(MatrixFamily fam, WeightKind kind, uint64_t q, uint32_t s,
                                       uint32_t k) {
    return predicted_distribution(fam, kind, q, s, k).counts;
}

}  // namespace

TEST_CASE("empirical distributions at desk scale") {
    SimplexCode a1 = make_simplex_code(z4(), MatrixFamily::alpha, 1);
    WeightDistribution d = empirical_distribution(a1, WeightKind::hamming);
    CHECK(d.counts == std::map<uint64_t, uint64_t>{{0, 1}, {2, 1}, {3, 2}});

    SimplexCode b2 = make_simplex_code(z4(), MatrixFamily::beta, 2);
    WeightDistribution hom = empirical_distribution(b2, WeightKind::homogeneous);
    CHECK(hom.counts == std::map<uint64_t, uint64_t>{{0, 1}, {6, 12}, {8, 3}});
    CHECK(hom.total() == 16);

    WeightDistribution ham = empirical_distribution(b2, WeightKind::hamming);
    CHECK(ham.counts == std::map<uint64_t, uint64_t>{{0, 1}, {4, 3}, {5, 12}});
}

TEST_CASE("closed-form distributions") {
    CHECK(counts_of(MatrixFamily::alpha, WeightKind::hamming, 3, 2, 2) ==
          std::map<uint64_t, uint64_t>{{0, 1}, {54, 8}, {72, 72}});
    CHECK(counts_of(MatrixFamily::beta, WeightKind::hamming, 2, 2, 2) ==
          std::map<uint64_t, uint64_t>{{0, 1}, {4, 3}, {5, 12}});
    CHECK(counts_of(MatrixFamily::beta, WeightKind::hamming, 3, 2, 2) ==
          std::map<uint64_t, uint64_t>{{0, 1}, {9, 8}, {11, 72}});
    // alpha homogeneous: one nonzero weight shared by all q^{sk}-1 codewords
    CHECK(counts_of(MatrixFamily::alpha, WeightKind::homogeneous, 2, 2, 2) ==
          std::map<uint64_t, uint64_t>{{0, 1}, {16, 15}});
    CHECK(counts_of(MatrixFamily::beta, WeightKind::homogeneous, 2, 2, 2) ==
          std::map<uint64_t, uint64_t>{{0, 1}, {6, 12}, {8, 3}});
    // s = 1: classical ternary simplex, every nonzero codeword has weight 3^{k-1}
    CHECK(counts_of(MatrixFamily::beta, WeightKind::homogeneous, 3, 1, 2) ==
          std::map<uint64_t, uint64_t>{{0, 1}, {3, 8}});
}

TEST_CASE("oracle equivalence on a couple of instances") {
    SimplexCode a2 = make_simplex_code(z9(), MatrixFamily::alpha, 2);
    CHECK(empirical_distribution(a2, WeightKind::hamming).counts ==
          counts_of(MatrixFamily::alpha, WeightKind::hamming, 3, 2, 2));
    SimplexCode b2 = make_simplex_code(z9(), MatrixFamily::beta, 2);
    CHECK(empirical_distribution(b2, WeightKind::homogeneous).counts ==
          counts_of(MatrixFamily::beta, WeightKind::homogeneous, 3, 2, 2));
}

TEST_CASE("minimum distance") {
    CHECK(min_distance(predicted_distribution(MatrixFamily::alpha, WeightKind::hamming, 2, 2, 1)) ==
          2);
    CHECK(min_distance(predicted_distribution(MatrixFamily::beta, WeightKind::hamming, 3, 2, 2)) ==
          9);
    WeightDistribution d;
    d.counts = {{0, 1}, {5, 3}};
    CHECK(min_distance(d) == 5);
    WeightDistribution zero_only;
    zero_only.counts = {{0, 1}};
    CHECK_THROWS_AS(min_distance(zero_only), Error);
}

TEST_CASE("Gray image parameters") {
    GrayImageParams a = gray_image_parameters(MatrixFamily::alpha, z4(), 1, true);
    CHECK(a.length == 8);
    CHECK(a.size == 4);
    CHECK(a.distance == 4);

    GrayImageParams b = gray_image_parameters(MatrixFamily::beta, z4(), 2, true);
    CHECK(b.length == 12);
    CHECK(b.size == 16);
    CHECK(b.distance == 6);

    CHECK_THROWS_AS(gray_image_parameters(MatrixFamily::beta, z4(), 1, false), Error);
}

TEST_CASE("Griesmer reports") {
    GriesmerReport beta = simplex_griesmer(MatrixFamily::beta, *z4(), 2);
    CHECK(beta.bound == 6);
    CHECK(beta.n == 6);
    CHECK(beta.optimal);

    GriesmerReport alpha = simplex_griesmer(MatrixFamily::alpha, *z4(), 2);
    CHECK(alpha.bound == 12);
    CHECK(alpha.n == 16);
    CHECK(alpha.slack == 4);  // q^{(s-1)k}
    CHECK(!alpha.optimal);

    GriesmerReport single = griesmer_report(7, 1, 7, 2);
    CHECK(single.optimal);
}

TEST_CASE("order-form weights over Z_{p^s}") {
    SimplexCode a1 = make_simplex_code(z4(), MatrixFamily::alpha, 1);
    std::vector<Elem> c = {0, 2, 0, 2};
    OrderFormResult r = order_form_weights(a1, c);
    CHECK(r.ord == 2);
    CHECK(r.weight == 2);

    std::vector<Elem> unit = {0, 1, 2, 3};
    CHECK(order_form_weights(a1, unit).ord == 4);  // p^s for a unit coefficient

    SimplexCode b2 = make_simplex_code(z9(), MatrixFamily::beta, 2);
    // c = 3 * h_2 where h_2 = (0..8, 1, 1, 1): ord 3, weight 12 - 3*1 = 9
    std::vector<Elem> c3(b2.gen.row(1).begin(), b2.gen.row(1).end());
    for (Elem& x : c3) x = b2.ring().int_mul(3, x);
    OrderFormResult r3 = order_form_weights(b2, c3);
    CHECK(r3.ord == 3);
    CHECK(r3.weight == 9);

    std::vector<Elem> zeros(4, 0);
    CHECK_THROWS_AS(order_form_weights(a1, zeros), Error);
    auto gr = Ring::make({Family::GaloisRing, 2, 2, 2, {}});
    SimplexCode grcode = make_simplex_code(gr, MatrixFamily::alpha, 1);
    std::vector<Elem> one = {1};
    CHECK_THROWS_AS(order_form_weights(grcode, one), Error);
}

TEST_CASE("enumerator polynomial and CSV rendering") {
    WeightDistribution d;
    d.kind = WeightKind::hamming;
    d.length = 6;
    d.counts = {{0, 1}, {4, 3}, {5, 12}};
    CHECK(d.enumerator_polynomial() == "X^6 + 3 X^2 Y^4 + 12 X^1 Y^5");
    CHECK(d.to_csv() == "weight,count\n0,1\n4,3\n5,12\n");
}

TEST_CASE("verification suite spot checks") {
    auto R = z4();
    CHECK(check_ring_axioms(*R).pass);
    CHECK(check_valuation_properties(*R).pass);
    CHECK(check_ideal_structure(*R).pass);
    CHECK(check_rank_order(*R).pass);
    CHECK(check_gray_isometry(*R).pass);
    CHECK(check_gh_property(*R).pass);

    SimplexCode alpha = make_simplex_code(R, MatrixFamily::alpha, 2);
    CHECK(check_row_closed_form(alpha.gen).pass);
    CHECK(check_gamma_row_content(alpha.gen).pass);
    CHECK(check_alpha_codeword_multiset(alpha, kDefaultEnumerationCap).pass);
    CHECK(check_valuation_census(alpha, kDefaultEnumerationCap).pass);

    SimplexCode beta = make_simplex_code(R, MatrixFamily::beta, 2);
    CHECK(check_beta_row_content(beta.gen).pass);
    CHECK(check_beta_codeword_content(beta, kDefaultEnumerationCap).pass);
    CHECK(check_code_type(beta, kDefaultEnumerationCap).pass);

    CHECK(check_ring_independence({Family::Zps, 2, 1, 2, {}}, {Family::FqU, 2, 1, 2, {}}, 2,
                                  kDefaultEnumerationCap)
              .pass);
}
