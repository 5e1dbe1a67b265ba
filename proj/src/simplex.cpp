#include "chainring/simplex.hpp"

#include <sstream>

namespace chainring {

namespace {

uint64_t ipow(uint64_t base, uint32_t exp) {
    uint64_t r = 1;
    while (exp--) r *= base;
    return r;
}

void check_columns(uint64_t n, uint64_t cap) {
    if (n > cap)
        throw Error(ErrorCode::SizeCapExceeded,
                    "matrix would have " + std::to_string(n) + " columns (cap " +
                        std::to_string(cap) + ")");
}

}  // namespace

std::string matrix_family_name(MatrixFamily f) {
    switch (f) {
        case MatrixFamily::alpha: return "alpha";
        case MatrixFamily::beta: return "beta";
        case MatrixFamily::gh_A: return "gh_A";
        case MatrixFamily::custom: return "custom";
    }
    return "?";
}

uint64_t beta_length(uint64_t q, uint32_t s, uint32_t k) {
    return ipow(q, (s - 1) * (k - 1)) * ((ipow(q, k) - 1) / (q - 1));
}

GeneratorMatrix simplex_alpha_matrix(RingPtr ring, uint32_t k, uint64_t column_cap) {
    const uint64_t Q = ring->size();
    GeneratorMatrix G;
    G.ring = ring;
    G.family = MatrixFamily::alpha;
    G.k = 1;
    G.n = Q;
    check_columns(G.n, column_cap);
    G.entries.resize(Q);
    for (uint64_t j = 0; j < Q; ++j) G.entries[j] = Elem(j);
    for (uint32_t kk = 2; kk <= k; ++kk) {
        uint64_t n_prev = G.n;
        uint64_t n_new = n_prev * Q;
        check_columns(n_new, column_cap);
        GeneratorMatrix next;
        next.ring = ring;
        next.family = MatrixFamily::alpha;
        next.k = kk;
        next.n = n_new;
        next.entries.resize(uint64_t(kk) * n_new);
        for (uint64_t b = 0; b < Q; ++b)
            for (uint64_t j = 0; j < n_prev; ++j) next.entries[b * n_prev + j] = Elem(b);
        for (uint32_t i = 0; i < kk - 1; ++i)
            for (uint64_t b = 0; b < Q; ++b)
                for (uint64_t j = 0; j < n_prev; ++j)
                    next.entries[uint64_t(i + 1) * n_new + b * n_prev + j] = G.at(i, j);
        G = std::move(next);
    }
    return G;
}

GeneratorMatrix simplex_beta_matrix(RingPtr ring, uint32_t k, uint64_t column_cap) {
    GeneratorMatrix G;
    G.ring = ring;
    G.family = MatrixFamily::beta;
    G.k = 1;
    G.n = 1;
    G.entries = {ring->one()};
    if (k == 1) return G;
    check_columns(beta_length(ring->q(), ring->s(), k), column_cap);
    const std::vector<Elem> gamma_ideal = ring->ideal_elements(1);  // ascending a_i * gamma
    for (uint32_t kk = 2; kk <= k; ++kk) {
        GeneratorMatrix alpha_prev = simplex_alpha_matrix(ring, kk - 1, column_cap);
        uint64_t n_beta_prev = G.n;
        uint64_t n_new = alpha_prev.n + gamma_ideal.size() * n_beta_prev;
        check_columns(n_new, column_cap);
        GeneratorMatrix next;
        next.ring = ring;
        next.family = MatrixFamily::beta;
        next.k = kk;
        next.n = n_new;
        next.entries.resize(uint64_t(kk) * n_new);
        // first row: all-ones over G_{k-1}^alpha, then the gamma-multiple blocks
        for (uint64_t j = 0; j < alpha_prev.n; ++j) next.entries[j] = ring->one();
        for (uint64_t b = 0; b < gamma_ideal.size(); ++b)
            for (uint64_t j = 0; j < n_beta_prev; ++j)
                next.entries[alpha_prev.n + b * n_beta_prev + j] = gamma_ideal[b];
        // remaining rows: G_{k-1}^alpha followed by copies of G_{k-1}^beta
        for (uint32_t i = 0; i + 1 < kk; ++i) {
            Elem* row = next.entries.data() + uint64_t(i + 1) * n_new;
            for (uint64_t j = 0; j < alpha_prev.n; ++j) row[j] = alpha_prev.at(i, j);
            for (uint64_t b = 0; b < gamma_ideal.size(); ++b)
                for (uint64_t j = 0; j < n_beta_prev; ++j)
                    row[alpha_prev.n + b * n_beta_prev + j] = G.at(i, j);
        }
        G = std::move(next);
    }
    return G;
}

ColumnDistinctness verify_column_distinctness(const GeneratorMatrix& G) {
    const Ring& R = *G.ring;
    for (uint64_t i = 0; i < G.n; ++i) {
        for (uint64_t j = 0; j < G.n; ++j) {
            for (uint64_t lam = 0; lam < R.size(); ++lam) {
                if (lam == 1 && i == j) continue;
                bool equal = true;
                for (uint32_t row = 0; row < G.k && equal; ++row)
                    equal = (G.at(row, i) == R.mul(Elem(lam), G.at(row, j)));
                if (equal) return {false, i, j, Elem(lam)};
            }
        }
    }
    return {};
}

uint64_t SimplexCode::num_codewords() const {
    uint64_t count = 1;
    for (uint32_t i = 0; i < gen.k; ++i) count *= gen.ring->size();
    return count;
}

SimplexCode make_simplex_code(RingPtr ring, MatrixFamily family, uint32_t k, uint64_t column_cap) {
    if (k < 1) throw Error(ErrorCode::UnsupportedK, "k must be >= 1");
    switch (family) {
        case MatrixFamily::alpha:
            return SimplexCode{simplex_alpha_matrix(std::move(ring), k, column_cap)};
        case MatrixFamily::beta:
            return SimplexCode{simplex_beta_matrix(std::move(ring), k, column_cap)};
        default:
            throw Error(ErrorCode::InvalidSpec, "simplex codes are alpha or beta");
    }
}

void enumerate_codewords(const GeneratorMatrix& G, const CodewordFn& fn, uint64_t enumeration_cap) {
    const Ring& R = *G.ring;
    const uint64_t Q = R.size();
    uint64_t total = 1;
    for (uint32_t i = 0; i < G.k; ++i) {
        if (total > enumeration_cap / Q)
            throw Error(ErrorCode::EnumerationCapExceeded,
                        "codeword count exceeds the cap of " + std::to_string(enumeration_cap));
        total *= Q;
    }

    // scaled rows: scaled[i][lambda] = lambda * row_i, so each codeword is a
    // coordinate-wise sum of k precomputed vectors
    std::vector<std::vector<std::vector<Elem>>> scaled(G.k);
    for (uint32_t i = 0; i < G.k; ++i) {
        scaled[i].resize(Q);
        for (uint64_t lam = 0; lam < Q; ++lam) {
            auto& vec = scaled[i][lam];
            vec.resize(G.n);
            for (uint64_t j = 0; j < G.n; ++j) vec[j] = R.mul(Elem(lam), G.at(i, j));
        }
    }

    std::vector<Elem> coeffs(G.k), codeword(G.n);
    for (uint64_t m = 0; m < total; ++m) {
        uint64_t t = m;
        for (uint32_t i = G.k; i-- > 0;) {  // rightmost coordinate fastest
            coeffs[i] = Elem(t % Q);
            t /= Q;
        }
        std::fill(codeword.begin(), codeword.end(), 0);
        for (uint32_t i = 0; i < G.k; ++i) {
            const auto& vec = scaled[i][coeffs[i]];
            if (coeffs[i] == 0) continue;
            for (uint64_t j = 0; j < G.n; ++j) codeword[j] = R.add(codeword[j], vec[j]);
        }
        fn(coeffs, codeword);
    }
}

bool codeword_valuation_check(const SimplexCode& code, uint64_t enumeration_cap) {
    const Ring& R = code.ring();
    bool ok = true;
    enumerate_codewords(
        code.gen,
        [&](std::span<const Elem> coeffs, std::span<const Elem> cw) {
            Valuation expected = Valuation::infinity();
            for (Elem a : coeffs) {
                Valuation v = R.valuation(a);
                if (v < expected) expected = v;
            }
            if (!(R.vector_valuation(cw) == expected)) ok = false;
        },
        enumeration_cap);
    return ok;
}

GeneratorMatrix gh_A_matrix(uint32_t p, uint32_t s, std::span<const uint32_t> t,
                            uint64_t column_cap) {
    if (t.empty() || t[0] < 1)
        throw Error(ErrorCode::InvalidTypeVector, "type vector requires t_1 >= 1");
    if (t.size() != s)
        throw Error(ErrorCode::InvalidTypeVector, "type vector must have s entries");
    RingPtr ring = Ring::make(RingSpec{Family::Zps, p, 1, s, {}});
    const uint64_t ps = ring->size();

    GeneratorMatrix A;
    A.ring = ring;
    A.family = MatrixFamily::gh_A;
    A.k = 1;
    A.n = 1;
    A.entries = {ring->one()};

    for (uint32_t i = 1; i <= s; ++i) {
        uint32_t steps = t[i - 1] - (i == 1 ? 1 : 0);
        uint64_t pim1 = ipow(p, i - 1);          // gamma^{i-1} = p^{i-1}
        uint64_t blocks = ipow(p, s - (i - 1));  // values 0..p^{s-(i-1)}-1
        for (uint32_t step = 0; step < steps; ++step) {
            uint64_t n_new = blocks * A.n;
            check_columns(n_new, column_cap);
            GeneratorMatrix next;
            next.ring = ring;
            next.family = MatrixFamily::gh_A;
            next.k = A.k + 1;
            next.n = n_new;
            next.entries.resize(uint64_t(next.k) * n_new);
            for (uint64_t b = 0; b < blocks; ++b) {
                Elem value = Elem(b * pim1 % ps);
                for (uint64_t j = 0; j < A.n; ++j) next.entries[b * A.n + j] = value;
            }
            for (uint32_t row = 0; row < A.k; ++row)
                for (uint64_t b = 0; b < blocks; ++b)
                    for (uint64_t j = 0; j < A.n; ++j)
                        next.entries[uint64_t(row + 1) * n_new + b * A.n + j] = A.at(row, j);
            A = std::move(next);
        }
    }
    return A;
}

bool alpha_equals_trimmed_A(const RingPtr& ring, uint32_t k, uint64_t column_cap) {
    if (ring->spec().family != Family::Zps)
        throw Error(ErrorCode::NotZps, "the A-matrix construction is defined over Z_{p^s} only");
    std::vector<uint32_t> t(ring->s(), 0);
    t[0] = k + 1;
    GeneratorMatrix A = gh_A_matrix(ring->p(), ring->s(), t, column_cap);
    GeneratorMatrix G = simplex_alpha_matrix(ring, k, column_cap);
    if (A.k != G.k + 1 || A.n != G.n) return false;
    for (uint32_t i = 0; i < G.k; ++i)  // last row of A (all-ones) is dropped
        for (uint64_t j = 0; j < G.n; ++j)
            if (A.at(i, j) != G.at(i, j)) return false;
    return true;
}

std::string export_matrix(const GeneratorMatrix& G) {
    std::ostringstream out;
    out << matrix_family_name(G.family) << " " << G.k << " " << G.n << " "
        << ring_spec_to_string(G.ring->spec()) << "\n";
    for (uint32_t i = 0; i < G.k; ++i) {
        for (uint64_t j = 0; j < G.n; ++j) {
            if (j) out << ' ';
            out << G.ring->to_string(G.at(i, j));
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace chainring
