#include "chainring/verify.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace chainring {

namespace {

uint64_t ipow(uint64_t base, uint32_t exp) {
    uint64_t r = 1;
    while (exp--) r *= base;
    return r;
}

CheckResult pass(std::string name, std::string detail = "") {
    return {std::move(name), true, std::move(detail)};
}

CheckResult fail(std::string name, std::string detail) {
    return {std::move(name), false, std::move(detail)};
}

/// gamma^j as a rank: the element with digit j equal to e_1 = 1.
Elem gamma_power(const Ring& ring, uint32_t j) {
    return j >= ring.s() ? 0 : Elem(ipow(ring.q(), j));
}

std::map<Elem, uint64_t> tally(std::span<const Elem> v) {
    std::map<Elem, uint64_t> out;
    for (Elem x : v) ++out[x];
    return out;
}

}  // namespace

std::vector<SweepEntry> default_sweep() {
    return {
        {{Family::Zps, 2, 1, 2, {}}, 3},         // Z4
        {{Family::Zps, 2, 1, 3, {}}, 2},         // Z8
        {{Family::Zps, 3, 1, 2, {}}, 2},         // Z9
        {{Family::Zps, 3, 1, 3, {}}, 1},         // Z27
        {{Family::GaloisRing, 2, 2, 2, {}}, 2},  // GR(4,2)
        {{Family::FqU, 2, 1, 2, {}}, 3},         // F2[u]/(u^2)
        {{Family::FqU, 2, 2, 2, {}}, 1},         // F4[u]/(u^2)
        {{Family::Zps, 3, 1, 1, {}}, 3},         // F3 (s = 1)
    };
}

std::vector<SweepEntry> parse_sweep_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::InvalidSpec, "cannot open sweep file: " + path);
    std::vector<SweepEntry> out;
    std::string line;
    while (std::getline(in, line)) {
        std::string trimmed = line;
        trimmed.erase(0, trimmed.find_first_not_of(" \t\r\n"));
        if (trimmed.empty() || trimmed[0] == '#') continue;
        SweepEntry entry;
        std::stringstream body(line);
        std::string tok;
        std::string spec_lines;
        while (body >> tok) {
            size_t eq = tok.find('=');
            if (eq == std::string::npos)
                throw Error(ErrorCode::InvalidSpec, "sweep tokens must be key=value: " + tok);
            std::string key = tok.substr(0, eq), value = tok.substr(eq + 1);
            if (key == "kmax") {
                entry.max_k = uint32_t(std::stoul(value));
            } else if (key == "modulus") {
                std::replace(value.begin(), value.end(), ',', ' ');
                spec_lines += "modulus = " + value + "\n";
            } else {
                spec_lines += key + " = " + value + "\n";
            }
        }
        std::istringstream spec_in(spec_lines);
        entry.spec = parse_ring_spec(spec_in);
        out.push_back(std::move(entry));
    }
    return out;
}

CheckResult check_ring_axioms(const Ring& ring) {
    const std::string name = "ring_axioms";
    const uint64_t N = ring.size();
    if (N > 256) return pass(name, "skipped (ring size > 256)");
    if (ring.add(0, 1) != 1 || ring.mul(1, 1) != 1) return fail(name, "identity laws broken");
    for (uint64_t a = 0; a < N; ++a) {
        if (ring.add(Elem(a), 0) != a) return fail(name, "additive identity");
        if (ring.mul(Elem(a), 1) != a) return fail(name, "multiplicative identity");
        if (ring.add(Elem(a), ring.neg(Elem(a))) != 0) return fail(name, "additive inverse");
        for (uint64_t b = 0; b < N; ++b) {
            if (ring.add(Elem(a), Elem(b)) != ring.add(Elem(b), Elem(a)))
                return fail(name, "addition not commutative");
            if (ring.mul(Elem(a), Elem(b)) != ring.mul(Elem(b), Elem(a)))
                return fail(name, "multiplication not commutative");
            for (uint64_t c = 0; c < N; ++c) {
                Elem ea = Elem(a), eb = Elem(b), ec = Elem(c);
                if (ring.add(ring.add(ea, eb), ec) != ring.add(ea, ring.add(eb, ec)))
                    return fail(name, "addition not associative");
                if (ring.mul(ring.mul(ea, eb), ec) != ring.mul(ea, ring.mul(eb, ec)))
                    return fail(name, "multiplication not associative");
                if (ring.mul(ea, ring.add(eb, ec)) !=
                    ring.add(ring.mul(ea, eb), ring.mul(ea, ec)))
                    return fail(name, "distributivity fails");
            }
        }
    }
    return pass(name);
}

CheckResult check_valuation_properties(const Ring& ring) {
    const std::string name = "valuation_properties";
    const uint64_t N = ring.size();
    const uint32_t s = ring.s();
    if (!ring.valuation(0).is_infinite()) return fail(name, "nu(0) must be infinite");
    for (uint64_t a = 0; a < N; ++a) {
        Valuation va = ring.valuation(Elem(a));
        if (a != 0 && ring.is_unit(Elem(a)) != (va == Valuation::finite(0)))
            return fail(name, "nu(x)=0 iff x is a unit");
        for (uint64_t b = 0; b < N; ++b) {
            Valuation vb = ring.valuation(Elem(b));
            Valuation vmul = ring.valuation(ring.mul(Elem(a), Elem(b)));
            if (!(vmul == va.add(vb, s)))
                return fail(name, "nu(xy) != nu(x)+nu(y) at x=" + ring.to_string(Elem(a)) +
                                      " y=" + ring.to_string(Elem(b)));
            Valuation vsum = ring.valuation(ring.add(Elem(a), Elem(b)));
            Valuation lower = std::min(va, vb, [](auto& l, auto& r) { return l < r; });
            if (vsum < lower) return fail(name, "nu(x+y) < min(nu(x),nu(y))");
            if (!(va == vb) && !(vsum == lower))
                return fail(name, "nu(x+y) != min when valuations differ");
        }
    }
    return pass(name);
}

CheckResult check_ideal_structure(const Ring& ring) {
    const std::string name = "ideal_structure";
    const uint32_t s = ring.s();
    const uint64_t q = ring.q();
    for (uint32_t j = 0; j <= s; ++j) {
        std::vector<Elem> ideal = ring.ideal_elements(j);
        if (ideal.size() != ipow(q, s - j))
            return fail(name, "|<gamma^" + std::to_string(j) + ">| != q^{s-j}");
        if (!std::is_sorted(ideal.begin(), ideal.end()))
            return fail(name, "ideal elements not ascending");
        for (Elem x : ideal)
            if (ring.valuation(x) < Valuation::finite(j))
                return fail(name, "ideal member with valuation < j");
        // brute-force membership: exactly the elements with valuation >= j
        uint64_t count = 0;
        for (uint64_t x = 0; x < ring.size(); ++x)
            if (!(ring.valuation(Elem(x)) < Valuation::finite(j))) ++count;
        if (count != ideal.size()) return fail(name, "ideal misses elements");
    }
    // annihilator: for nu(x) = j in {1,...,s-1}, {y : xy = 0} = <gamma^{s-j}>
    for (uint64_t x = 1; x < ring.size(); ++x) {
        Valuation vx = ring.valuation(Elem(x));
        uint32_t j = vx.value();
        if (j == 0) continue;
        std::set<Elem> killers;
        for (uint64_t y = 0; y < ring.size(); ++y)
            if (ring.mul(Elem(x), Elem(y)) == 0) killers.insert(Elem(y));
        std::vector<Elem> expected = ring.ideal_elements(s - j);
        if (killers != std::set<Elem>(expected.begin(), expected.end()))
            return fail(name, "annihilator of " + ring.to_string(Elem(x)) + " != <gamma^{s-j}>");
    }
    // translation: for nu(lambda) >= j, <gamma^j> + lambda = <gamma^j>
    for (uint32_t j = 0; j < s; ++j) {
        std::vector<Elem> ideal = ring.ideal_elements(j);
        std::set<Elem> as_set(ideal.begin(), ideal.end());
        for (Elem lambda : ideal) {
            std::set<Elem> shifted;
            for (Elem z : ideal) shifted.insert(ring.add(z, lambda));
            if (shifted != as_set) return fail(name, "<gamma^j> + lambda != <gamma^j>");
        }
    }
    return pass(name);
}

CheckResult check_rank_order(const Ring& ring) {
    const std::string name = "rank_order";
    const uint64_t N = ring.size();
    const uint32_t s = ring.s();
    if (ring.zero() != 0 || ring.one() != 1) return fail(name, "rho_0 or rho_1 misplaced");
    for (uint64_t x = 0; x < N; ++x) {
        std::vector<uint32_t> digits(s);
        for (uint32_t i = 0; i < s; ++i) digits[i] = ring.digit(Elem(x), i);
        if (ring.from_digits(digits) != x) return fail(name, "digit round-trip broken");
        for (uint64_t y = 0; y < x; ++y) {
            // highest differing digit decides; rank order must agree
            uint32_t hi = s;
            for (uint32_t i = s; i-- > 0;) {
                if (ring.digit(Elem(x), i) != ring.digit(Elem(y), i)) {
                    hi = i;
                    break;
                }
            }
            if (hi == s) return fail(name, "distinct ranks share all digits");
            if (!(ring.digit(Elem(x), hi) > ring.digit(Elem(y), hi)))
                return fail(name, "rank order disagrees with the digit order");
        }
    }
    return pass(name);
}

CheckResult check_gray_isometry(const Ring& ring) {
    const std::string name = "gray_isometry";
    std::set<FieldVector> images;
    for (uint64_t x = 0; x < ring.size(); ++x) {
        FieldVector img = gray_map(ring, Elem(x));
        if (hamming_weight(img) != ring.hom_weight(Elem(x)))
            return fail(name, "w_H(Phi(x)) != w_Hom(x) at x = " + ring.to_string(Elem(x)));
        images.insert(std::move(img));
    }
    if (images.size() != ring.size()) return fail(name, "Gray map is not injective");
    return pass(name);
}

CheckResult check_gh_property(const Ring& ring) {
    const std::string name = "gh_property";
    const uint32_t s = ring.s();
    const uint64_t q = ring.q();
    if (s < 2) return pass(name, "skipped (s = 1 is the trivial repetition case)");
    const uint64_t cols = ipow(q, s - 1);
    if (cols > 64) return pass(name, "skipped (q^{s-1} > 64)");
    const uint64_t lambda = ipow(q, s - 2);

    // F = images of the elements with top digit zero; rows of H(q, q^{s-2})
    std::vector<FieldVector> F;
    for (uint64_t x = 0; x < cols; ++x) F.push_back(gray_map(ring, Elem(x)));
    for (size_t i = 0; i < F.size(); ++i) {
        for (size_t j = i + 1; j < F.size(); ++j) {
            std::map<FieldElem, uint64_t> diff_count;
            for (uint64_t c = 0; c < cols; ++c) ++diff_count[ring.field_sub(F[i][c], F[j][c])];
            for (uint64_t e = 0; e < q; ++e)
                if (diff_count[FieldElem(e)] != lambda)
                    return fail(name, "row difference is not lambda-balanced");
        }
    }
    // Phi(R) = union over a in F_q of (F + (a,...,a))
    std::set<FieldVector> expected;
    for (const auto& row : F) {
        for (uint64_t a = 0; a < q; ++a) {
            FieldVector shifted(row);
            for (auto& e : shifted) e = ring.field_add(e, FieldElem(a));
            expected.insert(std::move(shifted));
        }
    }
    std::set<FieldVector> actual;
    for (uint64_t x = 0; x < ring.size(); ++x) actual.insert(gray_map(ring, Elem(x)));
    if (actual != expected) return fail(name, "Phi(R) is not the union of constant shifts of F");
    return pass(name);
}

CheckResult check_row_closed_form(const GeneratorMatrix& alpha) {
    const std::string name = "row_closed_form";
    const Ring& R = *alpha.ring;
    const uint64_t Q = R.size();
    for (uint32_t i = 1; i <= alpha.k; ++i) {
        uint64_t block = ipow(Q, alpha.k - i);  // q^{s(k-i)} copies of each element
        uint64_t period = block * Q;
        for (uint64_t j = 0; j < alpha.n; ++j) {
            Elem expected = Elem((j % period) / block);
            if (alpha.at(i - 1, j) != expected)
                return fail(name, "row " + std::to_string(i) + " column " + std::to_string(j));
        }
    }
    return pass(name);
}

CheckResult check_gamma_row_content(const GeneratorMatrix& alpha) {
    const std::string name = "gamma_row_content";
    const Ring& R = *alpha.ring;
    const uint32_t s = R.s();
    const uint64_t q = R.q();
    for (uint32_t i = 0; i < alpha.k; ++i) {
        for (uint32_t j = 0; j < s; ++j) {
            Elem gj = gamma_power(R, j);
            std::vector<Elem> scaled(alpha.n);
            for (uint64_t c = 0; c < alpha.n; ++c) scaled[c] = R.mul(gj, alpha.at(i, c));
            auto counts = tally(scaled);
            uint64_t expected = ipow(q, j + s * (alpha.k - 1));
            for (Elem e : R.ideal_elements(j))
                if (counts[e] != expected)
                    return fail(name, "gamma^j s_i^k misses ideal content at j=" +
                                          std::to_string(j));
            if (hamming_weight(scaled) != ipow(q, s * alpha.k) - expected)
                return fail(name, "w_H(gamma^j s_i^k) formula fails at j=" + std::to_string(j));
        }
    }
    return pass(name);
}

CheckResult check_beta_row_content(const GeneratorMatrix& beta) {
    const std::string name = "beta_row_content";
    const Ring& R = *beta.ring;
    const uint64_t q = R.q();
    const uint32_t s = R.s();
    const uint64_t Lprev = beta_length(q, s, beta.k - 1);
    for (uint32_t i = 0; i < beta.k; ++i) {
        auto counts = tally(beta.row(i));
        uint64_t units = 0;
        for (const auto& [e, c] : counts)
            if (R.is_unit(e)) units += c;
        for (Elem e : R.ideal_elements(1))
            if (counts[e] != Lprev)
                return fail(name, "row " + std::to_string(i + 1) +
                                      " does not repeat <gamma> " + std::to_string(Lprev) +
                                      " times");
        if (units != ipow(q, s * (beta.k - 1)))
            return fail(name, "row " + std::to_string(i + 1) + " unit count is wrong");
    }
    return pass(name);
}

CheckResult check_column_distinctness(const GeneratorMatrix& G) {
    const std::string name = "column_distinctness";
    ColumnDistinctness result = verify_column_distinctness(G);
    if (G.family == MatrixFamily::beta) {
        if (!result.ok)
            return fail(name, "beta columns g_" + std::to_string(result.i) + " = " +
                                  G.ring->to_string(result.lambda) + " * g_" +
                                  std::to_string(result.j));
        return pass(name);
    }
    if (G.family == MatrixFamily::alpha) {
        if (result.ok) return fail(name, "alpha matrix unexpectedly has no column multiples");
        return pass(name, "counterexample as expected: g_" + std::to_string(result.i) + " = " +
                              G.ring->to_string(result.lambda) + " * g_" +
                              std::to_string(result.j));
    }
    return result.ok ? pass(name) : fail(name, "columns are multiples");
}

CheckResult check_codeword_valuation(const SimplexCode& code, uint64_t cap) {
    const std::string name = "codeword_valuation";
    return codeword_valuation_check(code, cap)
               ? pass(name)
               : fail(name, "nu(c) != min nu(alpha_i) for some codeword");
}

CheckResult check_alpha_codeword_multiset(const SimplexCode& code, uint64_t cap) {
    const std::string name = "alpha_codeword_multiset";
    const Ring& R = code.ring();
    const uint32_t s = R.s();
    std::vector<std::vector<Elem>> reference(s);
    for (uint32_t j = 0; j < s; ++j) {
        Elem gj = gamma_power(R, j);
        auto row = code.gen.row(0);
        reference[j].resize(row.size());
        for (size_t c = 0; c < row.size(); ++c) reference[j][c] = R.mul(gj, row[c]);
        std::sort(reference[j].begin(), reference[j].end());
    }
    bool ok = true;
    enumerate_codewords(
        code.gen,
        [&](std::span<const Elem>, std::span<const Elem> cw) {
            if (!ok) return;
            Valuation nu = R.vector_valuation(cw);
            if (nu.is_infinite()) return;
            std::vector<Elem> sorted(cw.begin(), cw.end());
            std::sort(sorted.begin(), sorted.end());
            if (sorted != reference[nu.value()]) ok = false;
        },
        cap);
    return ok ? pass(name) : fail(name, "codeword is not a permutation of gamma^{nu(c)} s_1^k");
}

CheckResult check_beta_codeword_content(const SimplexCode& code, uint64_t cap) {
    const std::string name = "beta_codeword_content";
    const Ring& R = code.ring();
    const uint32_t s = R.s();
    const uint64_t q = R.q();
    const uint64_t Lprev = beta_length(q, s, code.k() - 1);
    bool ok = true;
    std::string detail;
    enumerate_codewords(
        code.gen,
        [&](std::span<const Elem>, std::span<const Elem> cw) {
            if (!ok) return;
            Valuation nu = R.vector_valuation(cw);
            if (nu.is_infinite()) return;
            uint32_t j = nu.value();
            auto counts = tally(cw);
            uint64_t expected = ipow(q, j) * Lprev;
            uint64_t inner_total = 0;
            for (Elem e : R.ideal_elements(j + 1)) {
                if (counts[e] != expected) {
                    ok = false;
                    detail = "<gamma^{nu(c)+1}> content is off at nu(c)=" + std::to_string(j);
                    return;
                }
                inner_total += counts[e];
            }
            uint64_t boundary = 0;  // coordinates in <gamma^j> \ <gamma^{j+1}>
            for (const auto& [e, c] : counts) {
                Valuation ve = R.valuation(e);
                if (ve == Valuation::finite(j)) boundary += c;
            }
            if (boundary != ipow(q, s * (code.k() - 1)) ||
                inner_total + boundary != code.length()) {
                ok = false;
                detail = "boundary coordinate count is off at nu(c)=" + std::to_string(j);
            }
        },
        cap);
    return ok ? pass(name) : fail(name, detail);
}

CheckResult check_valuation_census(const SimplexCode& code, uint64_t cap) {
    const std::string name = "valuation_census";
    const Ring& R = code.ring();
    const uint32_t s = R.s();
    const uint64_t q = R.q();
    const uint32_t k = code.k();
    std::map<uint32_t, uint64_t> census;
    uint64_t zero_count = 0;
    enumerate_codewords(
        code.gen,
        [&](std::span<const Elem>, std::span<const Elem> cw) {
            Valuation nu = R.vector_valuation(cw);
            if (nu.is_infinite())
                ++zero_count;
            else
                ++census[nu.value()];
        },
        cap);
    if (zero_count != 1) return fail(name, "zero codeword multiplicity != 1");
    for (uint32_t j = 0; j < s; ++j) {
        uint64_t expected = ipow(q, k * (s - j)) - ipow(q, k * (s - j - 1));
        if (census[j] != expected)
            return fail(name, "valuation " + std::to_string(j) + " count " +
                                  std::to_string(census[j]) + " != " + std::to_string(expected));
    }
    return pass(name);
}

CheckResult check_code_type(const SimplexCode& code, uint64_t cap) {
    const std::string name = "code_type";
    const Ring& R = code.ring();
    std::set<std::vector<Elem>> words;
    enumerate_codewords(
        code.gen,
        [&](std::span<const Elem>, std::span<const Elem> cw) {
            words.insert(std::vector<Elem>(cw.begin(), cw.end()));
        },
        cap);
    if (words.size() != code.num_codewords())
        return fail(name, "code is not free: " + std::to_string(words.size()) + " codewords");
    // generator columns must contain the k x k identity
    for (uint32_t i = 0; i < code.k(); ++i) {
        bool found = false;
        for (uint64_t j = 0; j < code.gen.n && !found; ++j) {
            bool is_ei = true;
            for (uint32_t row = 0; row < code.k() && is_ei; ++row)
                is_ei = (code.gen.at(row, j) == (row == i ? R.one() : R.zero()));
            found = is_ei;
        }
        if (!found) return fail(name, "identity column e_" + std::to_string(i + 1) + " missing");
    }
    return pass(name);
}

CheckResult check_oracle_equivalence(const SimplexCode& code, WeightKind kind, uint64_t cap) {
    const std::string name = std::string("oracle_") + weight_kind_name(kind);
    const Ring& R = code.ring();
    WeightDistribution empirical = empirical_distribution(code, kind, cap);
    WeightDistribution predicted =
        predicted_distribution(code.gen.family, kind, R.q(), R.s(), code.k());
    if (empirical.counts != predicted.counts) {
        for (const auto& [w, c] : empirical.counts) {
            auto it = predicted.counts.find(w);
            if (it == predicted.counts.end() || it->second != c)
                return fail(name, "first differing weight " + std::to_string(w) + ": empirical " +
                                      std::to_string(c));
        }
        return fail(name, "predicted has extra weights");
    }
    if (empirical.total() != code.num_codewords())
        return fail(name, "distribution total != q^{sk}");
    return pass(name);
}

CheckResult check_gray_image(MatrixFamily family, RingPtr ring, uint32_t k, uint64_t cap) {
    const std::string name = "gray_image";
    try {
        gray_image_parameters(family, std::move(ring), k, /*verify=*/true, cap);
    } catch (const Error& e) {
        return fail(name, e.what());
    }
    return pass(name);
}

CheckResult check_griesmer_verdict(MatrixFamily family, const Ring& ring, uint32_t k) {
    const std::string name = "griesmer";
    GriesmerReport rep = simplex_griesmer(family, ring, k);
    if (family == MatrixFamily::beta) {
        if (!rep.optimal || rep.slack != 0)
            return fail(name, "beta slack " + std::to_string(rep.slack) + " != 0");
        return pass(name);
    }
    uint64_t expected_slack = ipow(ring.q(), (ring.s() - 1) * k);
    if (rep.optimal || rep.slack != expected_slack)
        return fail(name, "alpha slack " + std::to_string(rep.slack) + " != q^{(s-1)k}");
    return pass(name);
}

CheckResult check_order_form(const SimplexCode& code, uint64_t cap) {
    const std::string name = "order_form";
    if (code.ring().spec().family != Family::Zps) return pass(name, "skipped (not Z_{p^s})");
    if (code.gen.family == MatrixFamily::beta && code.k() < 2)
        return pass(name, "skipped (beta with k = 1)");
    bool ok = true;
    std::string detail;
    enumerate_codewords(
        code.gen,
        [&](std::span<const Elem>, std::span<const Elem> cw) {
            if (!ok) return;
            if (std::all_of(cw.begin(), cw.end(), [](Elem x) { return x == 0; })) return;
            try {
                order_form_weights(code, cw);
            } catch (const Error& e) {
                ok = false;
                detail = e.what();
            }
        },
        cap);
    return ok ? pass(name) : fail(name, detail);
}

CheckResult check_alpha_trimmed_A(const RingPtr& ring, uint32_t k) {
    const std::string name = "alpha_equals_trimmed_A";
    if (ring->spec().family != Family::Zps) return pass(name, "skipped (not Z_{p^s})");
    return alpha_equals_trimmed_A(ring, k)
               ? pass(name)
               : fail(name, "G_k^alpha != A^{k+1,0,...,0} without its all-ones row");
}

CheckResult check_distance_comparison(const Ring& ring, uint32_t k) {
    const std::string name = "distance_comparison";
    const uint64_t q = ring.q();
    const uint32_t s = ring.s();
    uint64_t d_alpha = (q - 1) * ipow(q, s * k - 1);
    uint64_t d_beta = ipow(q, s * (k - 1));
    if (q == 2 && s == 1) {
        if (d_beta != d_alpha) return fail(name, "expected d_H equality for q=2, s=1");
        return pass(name, "equality case q=2, s=1");
    }
    if (!(d_beta < d_alpha))
        return fail(name, "d_H(beta) = " + std::to_string(d_beta) +
                              " not strictly below d_H(alpha) = " + std::to_string(d_alpha));
    return pass(name);
}

CheckResult check_ring_independence(const RingSpec& a, const RingSpec& b, uint32_t max_k,
                                    uint64_t cap) {
    const std::string name = "ring_independence";
    RingPtr ra = Ring::make(a);
    RingPtr rb = Ring::make(b);
    if (ra->q() != rb->q() || ra->s() != rb->s())
        return fail(name, "rings do not share (q, s)");
    for (uint32_t k = 1; k <= max_k; ++k) {
        for (MatrixFamily family : {MatrixFamily::alpha, MatrixFamily::beta}) {
            for (WeightKind kind : {WeightKind::hamming, WeightKind::homogeneous}) {
                SimplexCode ca = make_simplex_code(ra, family, k);
                SimplexCode cb = make_simplex_code(rb, family, k);
                WeightDistribution da = empirical_distribution(ca, kind, cap);
                WeightDistribution db = empirical_distribution(cb, kind, cap);
                if (!(da == db))
                    return fail(name, ring_spec_to_string(a) + " vs " + ring_spec_to_string(b) +
                                          " differ at " + matrix_family_name(family) +
                                          " k=" + std::to_string(k) + " " +
                                          weight_kind_name(kind));
            }
        }
    }
    return pass(name, ring_spec_to_string(a) + " == " + ring_spec_to_string(b));
}

std::vector<CheckResult> run_sweep(const std::vector<SweepEntry>& sweep, uint64_t cap,
                                   bool include_regressions) {
    std::vector<CheckResult> results;
    auto tag = [](const RingSpec& spec, const CheckResult& r, const std::string& code = "") {
        CheckResult tagged = r;
        tagged.name = "[" + ring_spec_to_string(spec) + "]" + (code.empty() ? "" : " " + code) +
                      " " + r.name;
        return tagged;
    };

    for (const SweepEntry& entry : sweep) {
        RingPtr ring;
        try {
            ring = Ring::make(entry.spec);
        } catch (const Error& e) {
            results.push_back({"[" + ring_spec_to_string(entry.spec) + "] make_ring", false,
                               e.what()});
            continue;
        }
        results.push_back(tag(entry.spec, check_ring_axioms(*ring)));
        results.push_back(tag(entry.spec, check_valuation_properties(*ring)));
        results.push_back(tag(entry.spec, check_ideal_structure(*ring)));
        results.push_back(tag(entry.spec, check_rank_order(*ring)));
        results.push_back(tag(entry.spec, check_gray_isometry(*ring)));
        results.push_back(tag(entry.spec, check_gh_property(*ring)));

        for (uint32_t k = 1; k <= entry.max_k; ++k) {
            const std::string atag = "alpha k=" + std::to_string(k);
            SimplexCode alpha = make_simplex_code(ring, MatrixFamily::alpha, k);
            results.push_back(tag(entry.spec, check_row_closed_form(alpha.gen), atag));
            results.push_back(tag(entry.spec, check_gamma_row_content(alpha.gen), atag));
            results.push_back(tag(entry.spec, check_column_distinctness(alpha.gen), atag));
            results.push_back(tag(entry.spec, check_codeword_valuation(alpha, cap), atag));
            results.push_back(tag(entry.spec, check_alpha_codeword_multiset(alpha, cap), atag));
            results.push_back(tag(entry.spec, check_valuation_census(alpha, cap), atag));
            results.push_back(tag(entry.spec, check_code_type(alpha, cap), atag));
            results.push_back(
                tag(entry.spec, check_oracle_equivalence(alpha, WeightKind::hamming, cap), atag));
            results.push_back(tag(
                entry.spec, check_oracle_equivalence(alpha, WeightKind::homogeneous, cap), atag));
            results.push_back(
                tag(entry.spec, check_gray_image(MatrixFamily::alpha, ring, k, cap), atag));
            results.push_back(
                tag(entry.spec, check_griesmer_verdict(MatrixFamily::alpha, *ring, k), atag));
            results.push_back(tag(entry.spec, check_order_form(alpha, cap), atag));
            results.push_back(tag(entry.spec, check_alpha_trimmed_A(ring, k), atag));

            const std::string btag = "beta k=" + std::to_string(k);
            SimplexCode beta = make_simplex_code(ring, MatrixFamily::beta, k);
            results.push_back(tag(entry.spec, check_column_distinctness(beta.gen), btag));
            results.push_back(tag(entry.spec, check_codeword_valuation(beta, cap), btag));
            results.push_back(tag(entry.spec, check_valuation_census(beta, cap), btag));
            results.push_back(tag(entry.spec, check_code_type(beta, cap), btag));
            results.push_back(
                tag(entry.spec, check_oracle_equivalence(beta, WeightKind::hamming, cap), btag));
            results.push_back(tag(
                entry.spec, check_oracle_equivalence(beta, WeightKind::homogeneous, cap), btag));
            results.push_back(
                tag(entry.spec, check_griesmer_verdict(MatrixFamily::beta, *ring, k), btag));
            results.push_back(tag(entry.spec, check_order_form(beta, cap), btag));
            results.push_back(tag(entry.spec, check_distance_comparison(*ring, k), btag));
            if (k >= 2) {
                results.push_back(tag(entry.spec, check_beta_row_content(beta.gen), btag));
                results.push_back(tag(entry.spec, check_beta_codeword_content(beta, cap), btag));
                results.push_back(
                    tag(entry.spec, check_gray_image(MatrixFamily::beta, ring, k, cap), btag));
            }
        }
    }

    if (include_regressions) {
        for (size_t i = 0; i < sweep.size(); ++i) {
            for (size_t j = i + 1; j < sweep.size(); ++j) {
                const auto& a = sweep[i];
                const auto& b = sweep[j];
                if (a.spec == b.spec) continue;
                RingPtr ra, rb;
                try {
                    ra = Ring::make(a.spec);
                    rb = Ring::make(b.spec);
                } catch (const Error&) {
                    continue;
                }
                if (ra->q() != rb->q() || ra->s() != rb->s()) continue;
                uint32_t kmax = std::min(a.max_k, b.max_k);
                results.push_back(check_ring_independence(a.spec, b.spec, kmax, cap));
            }
        }
    }
    return results;
}

}  // namespace chainring
