#include <set>

#include "chainring/simplex.hpp"
#include "doctest.h"

using namespace chainring;

namespace {

RingPtr z4() { return Ring::make({Family::Zps, 2, 1, 2, {}}); }
RingPtr z9() { return Ring::make({Family::Zps, 3, 1, 2, {}}); }

std::vector<Elem> row_vec(const GeneratorMatrix& G, uint32_t i) {
    auto r = G.row(i);
    return {r.begin(), r.end()};
}

}  // namespace

TEST_CASE("alpha matrix base case lists the ring in ascending order") {
    GeneratorMatrix G = simplex_alpha_matrix(z9(), 1);
    CHECK(G.k == 1);
    CHECK(G.n == 9);
    CHECK(row_vec(G, 0) == std::vector<Elem>{0, 1, 2, 3, 4, 5, 6, 7, 8});
}

TEST_CASE("alpha matrix recursive step") {
    GeneratorMatrix G = simplex_alpha_matrix(z9(), 2);
    CHECK(G.k == 2);
    CHECK(G.n == 81);
    for (uint64_t j = 0; j < 81; ++j) {
        CHECK(G.at(0, j) == Elem(j / 9));  // each of 0..8 repeated 9 times
        CHECK(G.at(1, j) == Elem(j % 9));  // 0..8 repeated 9 times
    }
    // columns are exactly R^2, each pair once
    std::set<std::pair<Elem, Elem>> cols;
    for (uint64_t j = 0; j < 81; ++j) cols.insert({G.at(0, j), G.at(1, j)});
    CHECK(cols.size() == 81);
}

TEST_CASE("beta matrix examples") {
    GeneratorMatrix G1 = simplex_beta_matrix(z9(), 1);
    CHECK(G1.k == 1);
    CHECK(G1.n == 1);
    CHECK(G1.at(0, 0) == 1);

    GeneratorMatrix G = simplex_beta_matrix(z9(), 2);
    CHECK(G.n == 12);
    CHECK(row_vec(G, 0) == std::vector<Elem>{1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 3, 6});
    CHECK(row_vec(G, 1) == std::vector<Elem>{0, 1, 2, 3, 4, 5, 6, 7, 8, 1, 1, 1});

    GeneratorMatrix G4 = simplex_beta_matrix(z4(), 2);
    CHECK(G4.n == 6);
    CHECK(row_vec(G4, 0) == std::vector<Elem>{1, 1, 1, 1, 0, 2});
    CHECK(row_vec(G4, 1) == std::vector<Elem>{0, 1, 2, 3, 1, 1});

    // GR(4,2), k=2: the gamma block is 0, 2, 2w, 2w+2 (ranks 0, 4, 8, 12)
    auto gr = Ring::make({Family::GaloisRing, 2, 2, 2, {}});
    GeneratorMatrix Ggr = simplex_beta_matrix(gr, 2);
    CHECK(Ggr.n == beta_length(4, 2, 2));
    CHECK(Ggr.n == 20);
    for (uint64_t j = 0; j < 16; ++j) CHECK(Ggr.at(0, j) == 1);
    CHECK(Ggr.at(0, 16) == 0);
    CHECK(Ggr.at(0, 17) == 4);
    CHECK(Ggr.at(0, 18) == 8);
    CHECK(Ggr.at(0, 19) == 12);
}

TEST_CASE("beta length formula") {
    CHECK(beta_length(3, 2, 2) == 12);
    CHECK(beta_length(2, 2, 2) == 6);
    CHECK(beta_length(2, 2, 1) == 1);
    CHECK(beta_length(3, 1, 3) == 13);  // classical ternary simplex length
}

TEST_CASE("column distinctness") {
    CHECK(verify_column_distinctness(simplex_beta_matrix(z9(), 2)).ok);
    CHECK(verify_column_distinctness(simplex_beta_matrix(z4(), 1)).ok);
    ColumnDistinctness bad = verify_column_distinctness(simplex_alpha_matrix(z4(), 1));
    CHECK(!bad.ok);
}

TEST_CASE("codeword enumeration of the Z4 alpha code, k=1") {
    SimplexCode code = make_simplex_code(z4(), MatrixFamily::alpha, 1);
    std::vector<std::vector<Elem>> words;
    enumerate_codewords(code.gen, [&](std::span<const Elem>, std::span<const Elem> cw) {
        words.emplace_back(cw.begin(), cw.end());
    });
    REQUIRE(words.size() == 4);
    CHECK(words[0] == std::vector<Elem>{0, 0, 0, 0});
    CHECK(words[1] == std::vector<Elem>{0, 1, 2, 3});
    CHECK(words[2] == std::vector<Elem>{0, 2, 0, 2});
    CHECK(words[3] == std::vector<Elem>{0, 3, 2, 1});
}

TEST_CASE("beta codes are free: distinct codewords") {
    SimplexCode code = make_simplex_code(z4(), MatrixFamily::beta, 2);
    std::set<std::vector<Elem>> words;
    enumerate_codewords(code.gen, [&](std::span<const Elem>, std::span<const Elem> cw) {
        words.insert(std::vector<Elem>(cw.begin(), cw.end()));
    });
    CHECK(words.size() == 16);
}

TEST_CASE("codeword valuation equals the coefficient minimum") {
    CHECK(codeword_valuation_check(make_simplex_code(z4(), MatrixFamily::alpha, 2)));
    CHECK(codeword_valuation_check(make_simplex_code(z9(), MatrixFamily::beta, 2)));
}

TEST_CASE("GH A-matrix construction") {
    std::vector<uint32_t> t1 = {1};
    GeneratorMatrix base = gh_A_matrix(2, 1, t1);
    CHECK(base.k == 1);
    CHECK(base.n == 1);
    CHECK(base.at(0, 0) == 1);

    // one step over F_2: new row on top, the original row becomes all-ones
    std::vector<uint32_t> t2 = {2};
    GeneratorMatrix A = gh_A_matrix(2, 1, t2);
    CHECK(A.k == 2);
    CHECK(A.n == 2);
    CHECK(row_vec(A, 0) == std::vector<Elem>{0, 1});
    CHECK(row_vec(A, 1) == std::vector<Elem>{1, 1});

    std::vector<uint32_t> bad = {0, 1};
    CHECK_THROWS_AS(gh_A_matrix(2, 2, bad), Error);
}

TEST_CASE("alpha equals the trimmed A matrix") {
    CHECK(alpha_equals_trimmed_A(z4(), 1));
    CHECK(alpha_equals_trimmed_A(z4(), 2));
    CHECK(alpha_equals_trimmed_A(z9(), 1));
    auto gr = Ring::make({Family::GaloisRing, 2, 2, 2, {}});
    CHECK_THROWS_AS(alpha_equals_trimmed_A(gr, 1), Error);
}

TEST_CASE("caps are enforced") {
    CHECK_THROWS_AS(simplex_alpha_matrix(z4(), 3, /*column_cap=*/32), Error);
    SimplexCode code = make_simplex_code(z4(), MatrixFamily::alpha, 2);
    CHECK_THROWS_AS(
        enumerate_codewords(code.gen, [](std::span<const Elem>, std::span<const Elem>) {}, 8),
        Error);
}

TEST_CASE("matrix export format") {
    std::string text = export_matrix(simplex_beta_matrix(z4(), 2));
    CHECK(text ==
          "beta 2 6 zps p=2 s=2\n"
          "1 1 1 1 0 2\n"
          "0 1 2 3 1 1\n");
}
