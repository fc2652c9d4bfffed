#ifndef WITTFORGE_COEFF_RING_HPP
#define WITTFORGE_COEFF_RING_HPP

#include <array>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "wittforge/chain_ring.hpp"

namespace wittforge {

inline constexpr int kMaxFactors = 4;

struct PElem {
    std::array<CElem, kMaxFactors> c{};
    bool operator==(const PElem&) const = default;
};

// Coefficients of Dieudonne modules: a product of f copies of a chain ring
// R = W_O(k)/pi^n (or W(k)/p^n, k[[pi]]/pi^n) with the automorphism
//   sigma(x)_i = x_{i+1} (i < f-1),  sigma(x)_{f-1} = tau(x_0),
// tau = (Frobenius of R)^{f * step}.  With f = 1 this is R with sigma^step.
// The idempotent e_i is sent to e_{i-1} by sigma.
class CoeffRing {
public:
    using Elem = PElem;

    CoeffRing(ChainRingPtr base, int factors = 1, int step = 1);

    const ChainRing& base() const { return *base_; }
    ChainRingPtr base_ptr() const { return base_; }
    int factors() const { return f_; }
    int step() const { return step_; }
    std::int64_t p() const { return base_->p(); }
    int level() const { return base_->n(); }
    // Order of sigma.
    int sigma_order() const;
    std::shared_ptr<const CoeffRing> at_level(int n) const;
    std::string describe() const;
    bool same_as(const CoeffRing& o) const;

    PElem zero() const { return PElem{}; }
    PElem one() const { return diag(base_->one()); }
    PElem from_int(std::int64_t v) const { return diag(base_->from_int(v)); }
    PElem diag(const CElem& a) const;
    // Image of a in W(k)/p^n (or k) embedded compatibly with sigma.
    PElem embed(const CElem& a) const;
    PElem uniformizer() const { return diag(base_->uniformizer()); }
    PElem p_elem() const { return from_int(base_->p()); }
    PElem idempotent(int i) const;

    PElem add(const PElem& a, const PElem& b) const;
    PElem sub(const PElem& a, const PElem& b) const;
    PElem neg(const PElem& a) const;
    PElem mul(const PElem& a, const PElem& b) const;
    bool eq(const PElem& a, const PElem& b) const { return a == b; }
    bool is_zero(const PElem& a) const { return a == PElem{}; }
    bool is_unit(const PElem& a) const;
    PElem inv(const PElem& a) const;
    // Minimum of the component valuations.
    int valuation(const PElem& a) const;

    PElem sigma(const PElem& a, int t = 1) const;

    const CElem& component(const PElem& a, int i) const { return a.c[i]; }
    PElem with_component(const PElem& a, int i, const CElem& v) const
    {
        PElem r = a;
        r.c[i] = v;
        return r;
    }

    PElem reduce_to(const PElem& a, const CoeffRing& target) const;
    PElem lift_from(const PElem& a, const CoeffRing& source) const;

    PElem random(std::mt19937_64& rng) const;
    std::uint64_t cardinality() const;
    PElem element_at(std::uint64_t index) const;

    // Additive coordinates: all slots of all components, each a residue
    // modulo the common modulus (requires equal slot moduli).
    int flat_size() const { return f_ * base_->slot_count(); }
    std::int64_t flat_modulus() const;
    std::vector<std::int64_t> flatten(const PElem& a) const;
    PElem unflatten(const std::vector<std::int64_t>& v) const;

    std::string to_string(const PElem& a) const;
    PElem parse(const std::string& s) const;

private:
    CElem tau(const CElem& a, int k) const { return base_->frob(a, k * f_ * step_); }

    ChainRingPtr base_;
    int f_;
    int step_;
};

using CoeffRingPtr = std::shared_ptr<const CoeffRing>;

}  // namespace wittforge

#endif
