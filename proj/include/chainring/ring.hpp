#ifndef CHAINRING_RING_HPP
#define CHAINRING_RING_HPP

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "chainring/errors.hpp"

namespace chainring {

enum class Family { Zps, GaloisRing, FqU };

std::string family_name(Family f);
Family parse_family(const std::string& name);

/// Specification of a concrete finite chain ring.
///
/// Zps:        Z_{p^s}, gamma = p, residue field F_p.
/// GaloisRing: GR(p^s, r) = Z_{p^s}[x]/(f), gamma = p, residue field F_{p^r}.
/// FqU:        F_q[u]/(u^s) with q = p^r, gamma = u.
///
/// `modulus` holds the coefficients of the monic defining polynomial,
/// low-to-high, each in {0,...,p-1}. It is empty for Zps; for GaloisRing it is
/// a lift of a polynomial irreducible over F_p; for FqU it defines F_q itself.
/// Default moduli ship for (p,r) in {(2,2), (3,2), (2,3)}.
struct RingSpec {
    Family family = Family::Zps;
    uint32_t p = 2;
    uint32_t r = 1;
    uint32_t s = 1;
    std::vector<uint32_t> modulus;  // low-to-high, size r+1 when present

    bool operator==(const RingSpec&) const = default;
};

/// Parse a textual key/value ring specification (one `key = value` per line;
/// keys: family, p, r, s, modulus with coefficients low-to-high).
RingSpec parse_ring_spec(std::istream& in);
RingSpec parse_ring_spec_file(const std::string& path);
std::string ring_spec_to_string(const RingSpec& spec);

/// A value in Gamma = {0,...,s-1} u {infinity}, with the saturating sum.
class Valuation {
public:
    static Valuation infinity() { return Valuation(); }
    static Valuation finite(uint32_t v) { return Valuation(v); }

    bool is_infinite() const { return infinite_; }
    uint32_t value() const;

    /// Saturating sum: finite results >= s collapse to infinity.
    Valuation add(const Valuation& other, uint32_t s) const;

    bool operator==(const Valuation&) const = default;
    bool operator<(const Valuation& other) const {
        if (infinite_) return false;
        if (other.infinite_) return true;
        return value_ < other.value_;
    }
    bool operator<=(const Valuation& other) const { return *this < other || *this == other; }

    std::string to_string() const;

private:
    Valuation() : infinite_(true), value_(0) {}
    explicit Valuation(uint32_t v) : infinite_(false), value_(v) {}
    bool infinite_;
    uint32_t value_;
};

/// An element is identified by its rank in the ascending rho-order:
/// rank(x) = sum_i idx(x_i) * q^i over the gamma-adic digits x_i in T.
using Elem = uint32_t;

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// A concrete finite chain ring with exact arithmetic on element ranks.
///
/// The digit alphabet T is fixed per family: {0,...,p-1} for Zps, polynomials
/// with coefficients in {0,...,p-1} for GaloisRing, and the field constants
/// for FqU; T is totally ordered by the base-p value of the residue
/// coefficient vector. rank is then a monotone bijection onto {0,...,q^s-1}
/// for the order that compares the highest differing digit.
class Ring {
public:
    static constexpr uint64_t kDefaultSizeCap = uint64_t(1) << 16;

    explicit Ring(RingSpec spec, uint64_t size_cap = kDefaultSizeCap);

    static RingPtr make(RingSpec spec, uint64_t size_cap = kDefaultSizeCap) {
        return std::make_shared<Ring>(std::move(spec), size_cap);
    }

    const RingSpec& spec() const { return spec_; }
    uint32_t p() const { return spec_.p; }
    uint32_t r() const { return spec_.r; }
    uint32_t s() const { return spec_.s; }
    uint32_t q() const { return q_; }
    uint64_t size() const { return size_; }  // q^s

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    /// rank of gamma; for s = 1 this is 0 (gamma acts as zero in a field).
    Elem gamma() const { return spec_.s == 1 ? 0 : q_; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem mul(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    /// a scaled by an integer (repeated addition; m taken mod characteristic).
    Elem int_mul(uint64_t m, Elem a) const;

    /// gamma-adic digit index at position i, in {0,...,q-1}.
    uint32_t digit(Elem x, uint32_t i) const;
    Elem from_digits(std::span<const uint32_t> digits) const;

    Valuation valuation(Elem x) const;
    Valuation vector_valuation(std::span<const Elem> v) const;

    /// Elements of the ideal <gamma^j>, ascending; |<gamma^j>| = q^{s-j}.
    std::vector<Elem> ideal_elements(uint32_t j) const;

    uint64_t hom_weight(Elem x) const;
    uint64_t hom_weight(std::span<const Elem> v) const;

    bool is_unit(Elem x) const { return digit(x, 0) != 0; }

    // Residue field F_q operations on field-element indices in {0,...,q-1}
    // (index = base-p value of the coefficient vector).
    uint32_t residue(Elem x) const { return digit(x, 0); }
    uint32_t field_add(uint32_t a, uint32_t b) const;
    uint32_t field_sub(uint32_t a, uint32_t b) const;
    uint32_t field_mul(uint32_t a, uint32_t b) const;

    // Canonical serialization: Zps elements as plain integers, other families
    // as colon-separated digit indices "d0:d1:...:d_{s-1}".
    std::string to_string(Elem x) const;
    Elem parse(const std::string& text) const;

    /// Human-readable rendering (polynomial notation for extension families).
    std::string pretty(Elem x) const;

    bool same_ring(const Ring& other) const { return spec_ == other.spec_; }

private:
    void decode_poly(Elem x, std::vector<uint64_t>& coeffs) const;  // GaloisRing
    Elem encode_poly(std::vector<uint64_t>& coeffs) const;

    RingSpec spec_;
    uint32_t q_ = 0;
    uint64_t size_ = 0;
    uint64_t psmod_ = 0;  // p^s (Zps value modulus; GaloisRing coefficient modulus)
};

/// Element bound to its ring; throws MixedRings on cross-ring arithmetic.
class RingElement {
public:
    RingElement(RingPtr ring, Elem value) : ring_(std::move(ring)), value_(value) {}

    Elem value() const { return value_; }
    const RingPtr& ring() const { return ring_; }

    RingElement operator+(const RingElement& o) const { return apply(o, true, false); }
    RingElement operator-(const RingElement& o) const { return apply(o, false, false); }
    RingElement operator*(const RingElement& o) const { return apply(o, false, true); }
    bool operator==(const RingElement& o) const {
        return ring_->same_ring(*o.ring_) && value_ == o.value_;
    }

private:
    RingElement apply(const RingElement& o, bool is_add, bool is_mul) const {
        if (!ring_->same_ring(*o.ring_))
            throw Error(ErrorCode::MixedRings, "operands belong to different rings");
        Elem v = is_mul ? ring_->mul(value_, o.value_)
                        : (is_add ? ring_->add(value_, o.value_) : ring_->sub(value_, o.value_));
        return RingElement(ring_, v);
    }

    RingPtr ring_;
    Elem value_;
};

// Polynomial helpers over F_p, exposed for irreducibility validation tests.
bool is_prime(uint32_t n);
bool is_irreducible_mod_p(std::span<const uint32_t> poly, uint32_t p);

/// Built-in moduli for (p,r) in {(2,2), (3,2), (2,3)}; empty if none.
std::vector<uint32_t> default_modulus(uint32_t p, uint32_t r);

}  // namespace chainring

#endif
