#include "chainring/ring.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace chainring {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonPrimeP: return "NonPrimeP";
        case ErrorCode::ReduciblePolynomial: return "ReduciblePolynomial";
        case ErrorCode::UnsupportedSize: return "UnsupportedSize";
        case ErrorCode::MixedRings: return "MixedRings";
        case ErrorCode::EmptyVector: return "EmptyVector";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::SizeCapExceeded: return "SizeCapExceeded";
        case ErrorCode::EnumerationCapExceeded: return "EnumerationCapExceeded";
        case ErrorCode::InvalidTypeVector: return "InvalidTypeVector";
        case ErrorCode::UnsupportedK: return "UnsupportedK";
        case ErrorCode::VerificationMismatch: return "VerificationMismatch";
        case ErrorCode::DegenerateDistribution: return "DegenerateDistribution";
        case ErrorCode::ZeroCodeword: return "ZeroCodeword";
        case ErrorCode::NotZps: return "NotZps";
        case ErrorCode::InvalidSpec: return "InvalidSpec";
    }
    return "UnknownError";
}

std::string family_name(Family f) {
    switch (f) {
        case Family::Zps: return "zps";
        case Family::GaloisRing: return "gr";
        case Family::FqU: return "fqu";
    }
    return "?";
}

Family parse_family(const std::string& name) {
    if (name == "zps") return Family::Zps;
    if (name == "gr" || name == "galoisring") return Family::GaloisRing;
    if (name == "fqu") return Family::FqU;
    throw Error(ErrorCode::InvalidSpec, "unknown ring family '" + name + "'");
}

bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; uint64_t(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

// ----- polynomial helpers over F_p (coefficient vectors, low-to-high) -----

void poly_trim(std::vector<uint32_t>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// remainder of a by monic b, in place on a copy
std::vector<uint32_t> poly_mod(std::vector<uint32_t> a, const std::vector<uint32_t>& b, uint32_t p) {
    poly_trim(a);
    size_t db = b.size() - 1;
    while (a.size() > db) {
        uint32_t c = a.back();
        size_t shift = a.size() - 1 - db;
        if (c != 0) {
            for (size_t j = 0; j < b.size(); ++j) {
                uint64_t t = uint64_t(c) * b[j] % p;
                a[shift + j] = uint32_t((a[shift + j] + p - t) % p);
            }
        }
        a.pop_back();
        poly_trim(a);
    }
    return a;
}

uint64_t ipow(uint64_t base, uint32_t exp) {
    uint64_t r = 1;
    while (exp--) r *= base;
    return r;
}

uint64_t checked_pow(uint64_t base, uint32_t exp, uint64_t cap) {
    uint64_t r = 1;
    while (exp--) {
        if (base != 0 && r > cap / base)
            throw Error(ErrorCode::UnsupportedSize, "ring size exceeds the configured cap");
        r *= base;
    }
    return r;
}

std::string trim_copy(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

bool is_irreducible_mod_p(std::span<const uint32_t> poly, uint32_t p) {
    std::vector<uint32_t> f(poly.begin(), poly.end());
    for (auto& c : f) c %= p;
    poly_trim(f);
    if (f.size() < 2) return false;  // constants are not irreducible
    size_t deg = f.size() - 1;
    if (deg == 1) return true;
    // exhaustive divisor search over monic polynomials of degree 1..deg/2
    for (size_t dg = 1; dg <= deg / 2; ++dg) {
        uint64_t count = ipow(p, uint32_t(dg));
        for (uint64_t idx = 0; idx < count; ++idx) {
            std::vector<uint32_t> g(dg + 1, 0);
            uint64_t t = idx;
            for (size_t j = 0; j < dg; ++j) {
                g[j] = uint32_t(t % p);
                t /= p;
            }
            g[dg] = 1;
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

std::vector<uint32_t> default_modulus(uint32_t p, uint32_t r) {
    if (p == 2 && r == 2) return {1, 1, 1};      // x^2 + x + 1
    if (p == 3 && r == 2) return {2, 1, 1};      // x^2 + x + 2
    if (p == 2 && r == 3) return {1, 1, 0, 1};   // x^3 + x + 1
    return {};
}

// ----- Valuation -----

uint32_t Valuation::value() const {
    if (infinite_) throw Error(ErrorCode::IndexOutOfRange, "valuation is infinite");
    return value_;
}

Valuation Valuation::add(const Valuation& other, uint32_t s) const {
    if (infinite_ || other.infinite_) return infinity();
    uint64_t sum = uint64_t(value_) + other.value_;
    if (sum >= s) return infinity();
    return finite(uint32_t(sum));
}

std::string Valuation::to_string() const {
    return infinite_ ? "inf" : std::to_string(value_);
}

// ----- Ring -----

Ring::Ring(RingSpec spec, uint64_t size_cap) : spec_(std::move(spec)) {
    if (!is_prime(spec_.p))
        throw Error(ErrorCode::NonPrimeP, "p = " + std::to_string(spec_.p) + " is not prime");
    if (spec_.s < 1) throw Error(ErrorCode::InvalidSpec, "s must be >= 1");
    if (spec_.r < 1) throw Error(ErrorCode::InvalidSpec, "r must be >= 1");
    if (spec_.family == Family::Zps) {
        spec_.r = 1;
        spec_.modulus.clear();
    }
    if (spec_.family != Family::Zps && spec_.r > 1) {
        if (spec_.modulus.empty()) spec_.modulus = default_modulus(spec_.p, spec_.r);
        if (spec_.modulus.size() != size_t(spec_.r) + 1)
            throw Error(ErrorCode::InvalidSpec, "modulus must have degree r");
        if (spec_.modulus.back() != 1)
            throw Error(ErrorCode::InvalidSpec, "modulus must be monic");
        for (uint32_t c : spec_.modulus)
            if (c >= spec_.p)
                throw Error(ErrorCode::InvalidSpec, "modulus coefficients must be in {0,...,p-1}");
        if (!is_irreducible_mod_p(spec_.modulus, spec_.p))
            throw Error(ErrorCode::ReduciblePolynomial, "modulus is reducible over F_p");
    }
    uint64_t q64 = checked_pow(spec_.p, spec_.r, size_cap);
    size_ = checked_pow(q64, spec_.s, size_cap);
    q_ = uint32_t(q64);
    psmod_ = ipow(spec_.p, spec_.s);
}

uint32_t Ring::digit(Elem x, uint32_t i) const {
    uint64_t v = x;
    for (uint32_t j = 0; j < i; ++j) v /= q_;
    return uint32_t(v % q_);
}

Elem Ring::from_digits(std::span<const uint32_t> digits) const {
    uint64_t rank = 0;
    for (size_t i = digits.size(); i-- > 0;) rank = rank * q_ + digits[i];
    return Elem(rank);
}

// GaloisRing: rank <-> polynomial coefficient vector over Z_{p^s}.
// Digit i of the rank is a T-element index whose base-p digits are the i-th
// base-p digits of the coefficients, so coeff_j = sum_i p^i * digit(i)_j.
void Ring::decode_poly(Elem x, std::vector<uint64_t>& coeffs) const {
    coeffs.assign(spec_.r, 0);
    uint64_t v = x;
    uint64_t pi = 1;
    for (uint32_t i = 0; i < spec_.s; ++i) {
        uint32_t d = uint32_t(v % q_);
        v /= q_;
        for (uint32_t j = 0; j < spec_.r; ++j) {
            coeffs[j] += pi * (d % spec_.p);
            d /= spec_.p;
        }
        pi *= spec_.p;
    }
}

Elem Ring::encode_poly(std::vector<uint64_t>& coeffs) const {
    for (auto& c : coeffs) c %= psmod_;
    uint64_t rank = 0;
    for (uint32_t i = spec_.s; i-- > 0;) {
        uint64_t pi = ipow(spec_.p, i);
        uint32_t d = 0;
        for (uint32_t j = spec_.r; j-- > 0;) d = d * spec_.p + uint32_t((coeffs[j] / pi) % spec_.p);
        rank = rank * q_ + d;
    }
    return Elem(rank);
}

Elem Ring::add(Elem a, Elem b) const {
    switch (spec_.family) {
        case Family::Zps:
            return Elem((uint64_t(a) + b) % psmod_);
        case Family::FqU: {
            uint64_t rank = 0, va = a, vb = b, qi = 1;
            for (uint32_t i = 0; i < spec_.s; ++i) {
                rank += qi * field_add(uint32_t(va % q_), uint32_t(vb % q_));
                va /= q_;
                vb /= q_;
                qi *= q_;
            }
            return Elem(rank);
        }
        case Family::GaloisRing: {
            std::vector<uint64_t> ca, cb;
            decode_poly(a, ca);
            decode_poly(b, cb);
            for (uint32_t j = 0; j < spec_.r; ++j) ca[j] += cb[j];
            return encode_poly(ca);
        }
    }
    return 0;
}

Elem Ring::neg(Elem a) const {
    switch (spec_.family) {
        case Family::Zps:
            return Elem((psmod_ - a) % psmod_);
        case Family::FqU: {
            uint64_t rank = 0, va = a, qi = 1;
            for (uint32_t i = 0; i < spec_.s; ++i) {
                rank += qi * field_sub(0, uint32_t(va % q_));
                va /= q_;
                qi *= q_;
            }
            return Elem(rank);
        }
        case Family::GaloisRing: {
            std::vector<uint64_t> ca;
            decode_poly(a, ca);
            for (uint32_t j = 0; j < spec_.r; ++j) ca[j] = (psmod_ - ca[j] % psmod_) % psmod_;
            return encode_poly(ca);
        }
    }
    return 0;
}

Elem Ring::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Ring::mul(Elem a, Elem b) const {
    switch (spec_.family) {
        case Family::Zps:
            return Elem(uint64_t(a) * b % psmod_);
        case Family::FqU: {
            // truncated convolution over F_q mod u^s
            std::vector<uint32_t> da(spec_.s), db(spec_.s), out(spec_.s, 0);
            uint64_t va = a, vb = b;
            for (uint32_t i = 0; i < spec_.s; ++i) {
                da[i] = uint32_t(va % q_);
                db[i] = uint32_t(vb % q_);
                va /= q_;
                vb /= q_;
            }
            for (uint32_t i = 0; i < spec_.s; ++i) {
                if (da[i] == 0) continue;
                for (uint32_t j = 0; i + j < spec_.s; ++j)
                    out[i + j] = field_add(out[i + j], field_mul(da[i], db[j]));
            }
            return from_digits(out);
        }
        case Family::GaloisRing: {
            std::vector<uint64_t> ca, cb;
            decode_poly(a, ca);
            decode_poly(b, cb);
            std::vector<uint64_t> prod(2 * spec_.r - 1, 0);
            for (uint32_t i = 0; i < spec_.r; ++i)
                for (uint32_t j = 0; j < spec_.r; ++j)
                    prod[i + j] = (prod[i + j] + ca[i] % psmod_ * (cb[j] % psmod_)) % psmod_;
            // reduce by the (monic) lifted modulus
            for (size_t d = prod.size(); d-- > spec_.r;) {
                uint64_t c = prod[d] % psmod_;
                if (c == 0) continue;
                for (uint32_t j = 0; j <= spec_.r; ++j) {
                    uint64_t t = c * spec_.modulus[j] % psmod_;
                    prod[d - spec_.r + j] = (prod[d - spec_.r + j] + psmod_ - t) % psmod_;
                }
            }
            prod.resize(spec_.r);
            return encode_poly(prod);
        }
    }
    return 0;
}

Elem Ring::int_mul(uint64_t m, Elem a) const {
    uint64_t characteristic = (spec_.family == Family::FqU) ? spec_.p : psmod_;
    m %= characteristic;
    Elem acc = 0, base = a;
    while (m) {
        if (m & 1) acc = add(acc, base);
        base = add(base, base);
        m >>= 1;
    }
    return acc;
}

Valuation Ring::valuation(Elem x) const {
    if (x == 0) return Valuation::infinity();
    uint64_t v = x;
    uint32_t i = 0;
    while (v % q_ == 0) {
        v /= q_;
        ++i;
    }
    return Valuation::finite(i);
}

Valuation Ring::vector_valuation(std::span<const Elem> v) const {
    if (v.empty()) throw Error(ErrorCode::EmptyVector, "vector valuation of an empty vector");
    Valuation best = Valuation::infinity();
    for (Elem x : v) {
        Valuation vx = valuation(x);
        if (vx < best) best = vx;
    }
    return best;
}

std::vector<Elem> Ring::ideal_elements(uint32_t j) const {
    if (j > spec_.s) throw Error(ErrorCode::IndexOutOfRange, "ideal index j must be in {0,...,s}");
    // <gamma^j> = { m * q^j : 0 <= m < q^{s-j} }, already in ascending order
    uint64_t qj = ipow(q_, j);
    uint64_t count = size_ / qj;
    std::vector<Elem> out;
    out.reserve(count);
    for (uint64_t m = 0; m < count; ++m) out.push_back(Elem(m * qj));
    return out;
}

uint64_t Ring::hom_weight(Elem x) const {
    if (x == 0) return 0;
    uint32_t nu = valuation(x).value();
    if (nu == spec_.s - 1) return ipow(q_, spec_.s - 1);
    return (q_ - 1) * ipow(q_, spec_.s - 2);
}

uint64_t Ring::hom_weight(std::span<const Elem> v) const {
    uint64_t w = 0;
    for (Elem x : v) w += hom_weight(x);
    return w;
}

uint32_t Ring::field_add(uint32_t a, uint32_t b) const {
    if (spec_.r == 1) return (a + b) % spec_.p;
    uint32_t out = 0, pi = 1;
    for (uint32_t j = 0; j < spec_.r; ++j) {
        out += pi * ((a % spec_.p + b % spec_.p) % spec_.p);
        a /= spec_.p;
        b /= spec_.p;
        pi *= spec_.p;
    }
    return out;
}

uint32_t Ring::field_sub(uint32_t a, uint32_t b) const {
    if (spec_.r == 1) return (a + spec_.p - b % spec_.p) % spec_.p;
    uint32_t out = 0, pi = 1;
    for (uint32_t j = 0; j < spec_.r; ++j) {
        out += pi * ((a % spec_.p + spec_.p - b % spec_.p) % spec_.p);
        a /= spec_.p;
        b /= spec_.p;
        pi *= spec_.p;
    }
    return out;
}

uint32_t Ring::field_mul(uint32_t a, uint32_t b) const {
    if (spec_.r == 1) return uint32_t(uint64_t(a) * b % spec_.p);
    std::vector<uint32_t> ca(spec_.r), cb(spec_.r);
    for (uint32_t j = 0; j < spec_.r; ++j) {
        ca[j] = a % spec_.p;
        cb[j] = b % spec_.p;
        a /= spec_.p;
        b /= spec_.p;
    }
    std::vector<uint32_t> prod(2 * spec_.r - 1, 0);
    for (uint32_t i = 0; i < spec_.r; ++i)
        for (uint32_t j = 0; j < spec_.r; ++j)
            prod[i + j] = uint32_t((prod[i + j] + uint64_t(ca[i]) * cb[j]) % spec_.p);
    for (size_t d = prod.size(); d-- > spec_.r;) {
        uint32_t c = prod[d];
        if (c == 0) continue;
        for (uint32_t j = 0; j <= spec_.r; ++j) {
            uint64_t t = uint64_t(c) * (spec_.modulus[j] % spec_.p) % spec_.p;
            prod[d - spec_.r + j] = uint32_t((prod[d - spec_.r + j] + spec_.p - t) % spec_.p);
        }
    }
    uint32_t out = 0;
    for (uint32_t j = spec_.r; j-- > 0;) out = out * spec_.p + prod[j];
    return out;
}

std::string Ring::to_string(Elem x) const {
    if (spec_.family == Family::Zps) return std::to_string(x);
    std::string out;
    for (uint32_t i = 0; i < spec_.s; ++i) {
        if (i) out += ':';
        out += std::to_string(digit(x, i));
    }
    return out;
}

Elem Ring::parse(const std::string& text) const {
    if (spec_.family == Family::Zps) {
        uint64_t v = std::stoull(text);
        if (v >= size_) throw Error(ErrorCode::IndexOutOfRange, "element out of range: " + text);
        return Elem(v);
    }
    std::vector<uint32_t> digits;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ':')) digits.push_back(uint32_t(std::stoul(part)));
    if (digits.size() != spec_.s)
        throw Error(ErrorCode::InvalidSpec, "expected " + std::to_string(spec_.s) + " digits");
    for (uint32_t d : digits)
        if (d >= q_) throw Error(ErrorCode::IndexOutOfRange, "digit out of range: " + text);
    return from_digits(digits);
}

std::string Ring::pretty(Elem x) const {
    if (spec_.family == Family::Zps) return std::to_string(x);
    if (spec_.family == Family::GaloisRing) {
        std::vector<uint64_t> coeffs;
        decode_poly(x, coeffs);
        std::string out;
        for (uint32_t j = 0; j < spec_.r; ++j) {
            if (coeffs[j] == 0) continue;
            if (!out.empty()) out += "+";
            if (j == 0) {
                out += std::to_string(coeffs[j]);
            } else {
                if (coeffs[j] != 1) out += std::to_string(coeffs[j]);
                out += (j == 1) ? "w" : "w^" + std::to_string(j);
            }
        }
        return out.empty() ? "0" : out;
    }
    // FqU: digits over F_q in powers of u
    std::string out;
    for (uint32_t i = 0; i < spec_.s; ++i) {
        uint32_t d = digit(x, i);
        if (d == 0) continue;
        if (!out.empty()) out += "+";
        out += std::to_string(d);
        if (i == 1) out += "u";
        if (i > 1) out += "u^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

// ----- spec files -----

RingSpec parse_ring_spec(std::istream& in) {
    RingSpec spec;
    bool saw_family = false;
    std::string line;
    while (std::getline(in, line)) {
        std::string t = trim_copy(line);
        if (t.empty() || t[0] == '#') continue;
        size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw Error(ErrorCode::InvalidSpec, "expected 'key = value': " + t);
        std::string key = trim_copy(t.substr(0, eq));
        std::string value = trim_copy(t.substr(eq + 1));
        if (key == "family") {
            spec.family = parse_family(value);
            saw_family = true;
        } else if (key == "p") {
            spec.p = uint32_t(std::stoul(value));
        } else if (key == "r") {
            spec.r = uint32_t(std::stoul(value));
        } else if (key == "s") {
            spec.s = uint32_t(std::stoul(value));
        } else if (key == "modulus") {
            spec.modulus.clear();
            std::stringstream ss(value);
            std::string tok;
            while (ss >> tok) {
                if (!tok.empty() && tok.back() == ',') tok.pop_back();
                spec.modulus.push_back(uint32_t(std::stoul(tok)));
            }
        } else {
            throw Error(ErrorCode::InvalidSpec, "unknown key '" + key + "'");
        }
    }
    if (!saw_family) throw Error(ErrorCode::InvalidSpec, "missing 'family' key");
    return spec;
}

RingSpec parse_ring_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::InvalidSpec, "cannot open spec file: " + path);
    return parse_ring_spec(in);
}

std::string ring_spec_to_string(const RingSpec& spec) {
    std::string out = family_name(spec.family) + " p=" + std::to_string(spec.p);
    if (spec.family != Family::Zps) out += " r=" + std::to_string(spec.r);
    out += " s=" + std::to_string(spec.s);
    if (!spec.modulus.empty()) {
        out += " modulus=";
        for (size_t i = 0; i < spec.modulus.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(spec.modulus[i]);
        }
    }
    return out;
}

}  // namespace chainring
