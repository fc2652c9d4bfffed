#ifndef WITTFORGE_CHAIN_RING_HPP
#define WITTFORGE_CHAIN_RING_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace wittforge {

class NumberField;

inline constexpr int kSlots = 12;

// Element of a ChainRing. Slot b*s + i holds the coefficient of x^i y^b.
struct CElem {
    std::array<std::int64_t, kSlots> c{};
    bool operator==(const CElem&) const = default;
};

// Finite chain ring GR(p^N, s)[y]/(E(y), y^n), or k[y]/(y^n) in equal
// characteristic.  x generates the Galois ring over Z/p^N with the
// Teichmueller minimal polynomial, so sigma(x) = x^p is the Frobenius lift
// and sigma(y) = y.
class ChainRing {
public:
    enum class Kind { Mixed, EqualChar };
    using Elem = CElem;
    static constexpr bool kTorsionFree = false;

    // W(F_{p^s}) / p^N
    static std::shared_ptr<const ChainRing> galois(std::int64_t p, int s, int N);
    // W(F_{p^s})[y]/E(y) modulo y^n, E an integer Eisenstein polynomial
    // given constant term first.
    static std::shared_ptr<const ChainRing> ramified(std::int64_t p, int s,
                                                     const std::vector<std::int64_t>& eisenstein, int n);
    // F_{p^s}[y]/(y^n)
    static std::shared_ptr<const ChainRing> equal_char(std::int64_t p, int s, int n);
    // Same presentation at another nilpotency level.
    std::shared_ptr<const ChainRing> at_level(int n) const;
    // Residue field F_{p^s} with the same generator.
    std::shared_ptr<const ChainRing> residue_field() const { return at_level(1); }

    Kind kind() const { return kind_; }
    std::int64_t p() const { return p_; }
    int s() const { return s_; }
    int e() const { return e_; }
    int n() const { return n_; }
    int N() const { return N_; }
    std::int64_t residue_size() const { return q_; }
    const std::vector<std::int64_t>& eisenstein() const { return eis_; }
    bool char_p() const { return N_ == 1; }
    int slot_count() const { return s_ * e_; }
    std::int64_t slot_modulus(int slot) const { return modb_[slot / s_]; }
    // Z/p^N-length of the whole ring; equals n * s.
    int length() const { return n_ * s_; }
    std::string describe() const;
    bool same_as(const ChainRing& o) const;

    CElem zero() const { return CElem{}; }
    CElem one() const;
    CElem from_int(std::int64_t v) const;
    CElem from_mpz(const mpz_class& v) const;
    CElem from_rational(const mpq_class& v) const;
    // Image of an element of Q[y]/E; y maps to the uniformizer when E
    // matches this ring, to 0 when p = 0 here.
    CElem from_nf(const NumberField& K, const std::vector<mpq_class>& a) const;
    CElem gen() const;          // x
    CElem uniformizer() const;  // y

    CElem add(const CElem& a, const CElem& b) const;
    CElem sub(const CElem& a, const CElem& b) const;
    CElem neg(const CElem& a) const;
    CElem mul(const CElem& a, const CElem& b) const;
    CElem scale(const CElem& a, std::int64_t k) const;
    CElem pow(const CElem& a, mpz_class k) const;
    bool eq(const CElem& a, const CElem& b) const { return a == b; }
    bool is_zero(const CElem& a) const { return a == CElem{}; }
    bool is_one(const CElem& a) const { return a == one(); }

    int valuation(const CElem& a) const;
    bool is_unit(const CElem& a) const;
    CElem inv(const CElem& a) const;
    CElem div_uniformizer(const CElem& a) const;
    // Some c with c*b = a; requires valuation(a) >= valuation(b).
    CElem div(const CElem& a, const CElem& b) const;
    CElem uniformizer_pow(int k) const;

    // sigma^k, k any integer; sigma has order s.
    CElem frob(const CElem& a, int k = 1) const;
    int sigma_order() const { return s_; }

    CElem residue(const CElem& a) const;  // slot 0 mod p, as an element of this ring
    CElem teichmuller(const CElem& a) const;

    // Coefficientwise map into a ring with the same presentation.
    CElem reduce_to(const CElem& a, const ChainRing& target) const;
    // Canonical representative at this ring's level of a lower-level element.
    CElem lift_from(const CElem& a, const ChainRing& source) const;

    CElem random(std::mt19937_64& rng) const;
    // Total number of elements, or 0 if it overflows 2^62.
    std::uint64_t cardinality() const;
    CElem element_at(std::uint64_t index) const;

    std::string to_string(const CElem& a) const;
    CElem parse(const std::string& text) const;

private:
    ChainRing() = default;
    void init_galois();

    std::vector<std::int64_t> gr_mul(const std::int64_t* a, const std::int64_t* b) const;
    void canonicalize(CElem& a) const;

    Kind kind_ = Kind::Mixed;
    std::int64_t p_ = 0;
    int s_ = 1;
    int e_ = 1;
    int n_ = 1;
    int N_ = 1;
    std::int64_t q_ = 0;
    std::int64_t M_ = 0;
    std::vector<std::int64_t> eis_;
    std::vector<int> Nb_;
    std::vector<std::int64_t> modb_;
    std::vector<std::int64_t> G_;
    std::vector<std::int64_t> g_;
    std::vector<std::vector<std::int64_t>> frob_cols_;
    CElem p_over_y_{};
};

using ChainRingPtr = std::shared_ptr<const ChainRing>;

std::int64_t mod_pow_i64(std::int64_t b, std::int64_t e, std::int64_t m);
std::int64_t mod_inv_i64(std::int64_t a, std::int64_t m);
bool is_prime_i64(std::int64_t p);
std::int64_t ipow(std::int64_t b, int e);

}  // namespace wittforge

#endif
