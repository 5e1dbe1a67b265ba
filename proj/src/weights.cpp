#include "chainring/weights.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace chainring {

namespace {

uint64_t ipow(uint64_t base, uint32_t exp) {
    uint64_t r = 1;
    while (exp--) r *= base;
    return r;
}

}  // namespace

std::string weight_kind_name(WeightKind kind) {
    return kind == WeightKind::hamming ? "hamming" : "homogeneous";
}

WeightKind parse_weight_kind(const std::string& name) {
    if (name == "hamming") return WeightKind::hamming;
    if (name == "homogeneous") return WeightKind::homogeneous;
    throw Error(ErrorCode::InvalidSpec, "unknown weight kind '" + name + "'");
}

uint64_t WeightDistribution::total() const {
    uint64_t t = 0;
    for (const auto& [w, c] : counts) t += c;
    return t;
}

std::string WeightDistribution::enumerator_polynomial() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, c] : counts) {
        if (!first) out << " + ";
        first = false;
        if (c != 1) out << c << " ";
        uint64_t xexp = length - std::min(length, w);
        if (xexp > 0) out << "X^" << xexp;
        if (xexp > 0 && w > 0) out << " ";
        if (w > 0) out << "Y^" << w;
        if (xexp == 0 && w == 0) out << "1";
    }
    return out.str();
}

std::string WeightDistribution::to_csv() const {
    std::ostringstream out;
    out << "weight,count\n";
    for (const auto& [w, c] : counts) out << w << "," << c << "\n";
    return out.str();
}

WeightDistribution empirical_distribution(const SimplexCode& code, WeightKind kind,
                                          uint64_t enumeration_cap) {
    const Ring& R = code.ring();
    WeightDistribution dist;
    dist.kind = kind;
    dist.length = code.length();
    enumerate_codewords(
        code.gen,
        [&](std::span<const Elem>, std::span<const Elem> cw) {
            uint64_t w = (kind == WeightKind::hamming) ? hamming_weight(cw) : R.hom_weight(cw);
            ++dist.counts[w];
        },
        enumeration_cap);
    return dist;
}

WeightDistribution predicted_distribution(MatrixFamily family, WeightKind kind, uint64_t q,
                                          uint32_t s, uint32_t k) {
    if (k < 1) throw Error(ErrorCode::UnsupportedK, "k must be >= 1");
    if (family != MatrixFamily::alpha && family != MatrixFamily::beta)
        throw Error(ErrorCode::UnsupportedK, "predictions exist for alpha and beta codes only");

    WeightDistribution dist;
    dist.kind = kind;
    dist.counts[0] = 1;

    const uint64_t M = ipow(q, s * k);  // q^{sk} codewords

    if (family == MatrixFamily::alpha) {
        dist.length = M;
        if (kind == WeightKind::hamming) {
            for (uint32_t j = 0; j < s; ++j) {
                uint64_t w = M - ipow(q, s * (k - 1) + j);
                uint64_t count = ipow(q, k * (s - j)) - ipow(q, k * (s - j - 1));
                dist.counts[w] += count;
            }
        } else {
            dist.counts[ipow(q, s * (k + 1) - 2) * (q - 1)] += M - 1;
        }
        return dist;
    }

    // beta
    dist.length = beta_length(q, s, k);
    if (k == 1) {
        // S_1^beta = R as a length-1 code
        if (kind == WeightKind::hamming) {
            dist.counts[1] += ipow(q, s) - 1;
        } else {
            dist.counts[ipow(q, s - 1)] += q - 1;  // nonzero elements of <gamma^{s-1}>
            if (ipow(q, s) > q) dist.counts[(q - 1) * ipow(q, s - 2)] += ipow(q, s) - q;
        }
        return dist;
    }
    if (kind == WeightKind::hamming) {
        uint64_t L = beta_length(q, s, k);
        uint64_t Lprev = beta_length(q, s, k - 1);
        for (uint32_t j = 0; j < s; ++j) {
            uint64_t w = L - ipow(q, j) * Lprev;
            uint64_t count = ipow(q, k * (s - j)) - ipow(q, k * (s - j - 1));
            dist.counts[w] += count;
        }
    } else {
        dist.counts[ipow(q, s * k - 1)] += ipow(q, k) - 1;  // valuation s-1
        uint64_t rest = M - ipow(q, k);
        if (rest > 0) dist.counts[ipow(q, s * k - k - 1) * (ipow(q, k) - 1)] += rest;
    }
    return dist;
}

uint64_t min_distance(const WeightDistribution& dist) {
    for (const auto& [w, c] : dist.counts)
        if (w > 0 && c > 0) return w;
    throw Error(ErrorCode::DegenerateDistribution, "distribution has no nonzero weight");
}

GrayImageParams gray_image_parameters(MatrixFamily family, RingPtr ring, uint32_t k, bool verify,
                                      uint64_t enumeration_cap) {
    const uint64_t q = ring->q();
    const uint32_t s = ring->s();
    if (family == MatrixFamily::beta && k < 2)
        throw Error(ErrorCode::UnsupportedK, "beta Gray-image parameters require k >= 2");

    WeightDistribution hom = predicted_distribution(family, WeightKind::homogeneous, q, s, k);
    GrayImageParams params;
    params.size = ipow(q, s * k);
    params.length = hom.length * ipow(q, s - 1);
    params.distance = min_distance(hom);

    if (verify) {
        SimplexCode code = make_simplex_code(ring, family, k);
        WeightDistribution image_dist;
        image_dist.kind = WeightKind::hamming;
        image_dist.length = params.length;
        std::set<FieldVector> images;
        bool length_ok = true;
        enumerate_codewords(
            code.gen,
            [&](std::span<const Elem>, std::span<const Elem> cw) {
                FieldVector img = gray_map_vector(*ring, cw);
                if (img.size() != params.length) length_ok = false;
                ++image_dist.counts[hamming_weight(img)];
                images.insert(std::move(img));
            },
            enumeration_cap);
        if (!length_ok)
            throw Error(ErrorCode::VerificationMismatch, "Gray image length differs from n*q^{s-1}");
        if (images.size() != params.size)
            throw Error(ErrorCode::VerificationMismatch,
                        "Gray image has " + std::to_string(images.size()) +
                            " distinct codewords, expected " + std::to_string(params.size));
        if (image_dist.counts != hom.counts) {
            for (const auto& [w, c] : image_dist.counts) {
                auto it = hom.counts.find(w);
                if (it == hom.counts.end() || it->second != c)
                    throw Error(ErrorCode::VerificationMismatch,
                                "first differing weight: " + std::to_string(w));
            }
            throw Error(ErrorCode::VerificationMismatch, "missing weights in the image");
        }
        if (min_distance(image_dist) != params.distance)
            throw Error(ErrorCode::VerificationMismatch, "minimum distance differs");
    }
    return params;
}

GriesmerReport griesmer_report(uint64_t n, uint32_t k, uint64_t d, uint64_t q) {
    GriesmerReport rep;
    rep.n = n;
    rep.k = k;
    rep.d = d;
    uint64_t qi = 1;
    for (uint32_t i = 0; i < k; ++i) {
        rep.bound += (d + qi - 1) / qi;  // ceil(d / q^i)
        qi *= q;
    }
    rep.slack = n - rep.bound;
    rep.optimal = (rep.slack == 0);
    return rep;
}

GriesmerReport simplex_griesmer(MatrixFamily family, const Ring& ring, uint32_t k) {
    const uint64_t q = ring.q();
    const uint32_t s = ring.s();
    if (family == MatrixFamily::alpha) {
        uint64_t n = ipow(q, s * k);
        uint64_t d = (q - 1) * ipow(q, s * k - 1);
        return griesmer_report(n, k, d, q);
    }
    if (family == MatrixFamily::beta) {
        uint64_t n = beta_length(q, s, k);
        uint64_t d = ipow(q, s * (k - 1));
        return griesmer_report(n, k, d, q);
    }
    throw Error(ErrorCode::UnsupportedK, "Griesmer verdicts exist for alpha and beta codes");
}

OrderFormResult order_form_weights(const SimplexCode& code, std::span<const Elem> c) {
    const Ring& R = code.ring();
    if (R.spec().family != Family::Zps)
        throw Error(ErrorCode::NotZps, "order-form weights are defined over Z_{p^s} only");
    Valuation nu = R.vector_valuation(c);
    if (nu.is_infinite()) throw Error(ErrorCode::ZeroCodeword, "order of the zero codeword");

    const uint64_t p = R.p();
    const uint32_t s = R.s();
    const uint64_t ps = ipow(p, s);

    // direct order computation: smallest power of p annihilating every coordinate
    uint64_t ord = 1;
    for (uint32_t i = 0; i <= s; ++i) {
        ord = ipow(p, i);
        bool kills = true;
        for (Elem x : c)
            if (R.int_mul(ord, x) != 0) {
                kills = false;
                break;
            }
        if (kills) break;
    }
    if (ord != ipow(p, s - nu.value()))
        throw Error(ErrorCode::VerificationMismatch, "order does not equal p^{s-nu(c)}");

    const uint32_t k = code.k();
    uint64_t expected;
    if (code.gen.family == MatrixFamily::alpha) {
        expected = ipow(p, s * k) - (ps / ord) * ipow(p, s * (k - 1));
    } else if (code.gen.family == MatrixFamily::beta) {
        if (k < 2) throw Error(ErrorCode::UnsupportedK, "beta order-form weights require k >= 2");
        expected = beta_length(p, s, k) - (ps / ord) * beta_length(p, s, k - 1);
    } else {
        throw Error(ErrorCode::UnsupportedK, "order-form weights exist for alpha and beta codes");
    }
    uint64_t actual = hamming_weight(c);
    if (actual != expected)
        throw Error(ErrorCode::VerificationMismatch,
                    "order-form weight " + std::to_string(expected) + " but counted " +
                        std::to_string(actual));
    return {ord, expected};
}

}  // namespace chainring
