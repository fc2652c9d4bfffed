#ifndef WITTFORGE_RAMIFIED_WITT_HPP
#define WITTFORGE_RAMIFIED_WITT_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "wittforge/chain_ring.hpp"
#include "wittforge/number_field.hpp"
#include "wittforge/polynomial.hpp"
#include "wittforge/witt.hpp"

namespace wittforge {

// O = Z_q[y]/E(y) with q = p^f.  E has integer coefficients, so the
// structure polynomials live over Z_p[y]/E inside K = Q[y]/E.
struct BaseDVR {
    std::int64_t p = 0;
    int f = 1;
    std::vector<std::int64_t> eisenstein;  // constant term first, monic

    int e() const { return static_cast<int>(eisenstein.size()) - 1; }
    std::int64_t q() const { return ipow(p, f); }
    NumberField field() const { return NumberField(p, eisenstein); }
    std::string describe() const;
    bool operator==(const BaseDVR&) const = default;

    static BaseDVR unramified(std::int64_t p, int f) { return BaseDVR{p, f, {-p, 1}}; }
};

using KPoly = Poly<NumberField>;

struct RamifiedWittStructureTable {
    BaseDVR base;
    int depth = 0;
    std::vector<KPoly> sum, prod, neg;  // interleaved a_i = 2i, b_i = 2i+1
    std::vector<KPoly> frob;            // x_i = i, depth - 1 entries
};

// Ramified ghost polynomial sum_i pi^i x_i^{q^{n-i}}.
KPoly ramified_ghost_poly(const BaseDVR& base, int n, int stride = 1, int offset = 0);

RamifiedWittStructureTable build_ramified_table(const BaseDVR& base, int depth);
std::shared_ptr<const RamifiedWittStructureTable> ramified_table(const BaseDVR& base, int depth);
TableCheck verify_ramified_table(const RamifiedWittStructureTable& t);
// F_pi mod pi against x_n^q.
TableCheck verify_ramified_frobenius_collapse(const RamifiedWittStructureTable& t);
// For O = Z_p the ramified table must coincide with the classical one.
TableCheck compare_with_classical(const RamifiedWittStructureTable& t);

// mu_n in the classical coordinates x_0..x_{fn}, with w_n(mu(x)) = w_{fn}(x).
struct MuTable {
    BaseDVR base;
    int depth = 0;
    std::vector<KPoly> mu;
};
std::shared_ptr<const MuTable> mu_table(const BaseDVR& base, int depth);
TableCheck verify_mu_table(const MuTable& t);

// W_{O,m}(R) for an O-algebra R exposing from_nf.
template <class R>
WittVectors<R> ramified_witt(std::shared_ptr<const R> ring, const BaseDVR& base, int length)
{
    if (length < 1) throw std::invalid_argument("Witt length must be >= 1");
    auto T = ramified_table(base, length);
    NumberField K = base.field();
    typename WittVectors<R>::Spec S;
    S.p = base.p;
    S.q = base.q();
    S.length = length;
    S.ramified = true;
    auto cmap = [&](const NumberField::Elem& c) { return ring->from_nf(K, c); };
    for (int n = 0; n < length; ++n) {
        S.sum.push_back(compile_poly(*ring, T->sum[n], cmap));
        S.prod.push_back(compile_poly(*ring, T->prod[n], cmap));
        S.neg.push_back(compile_poly(*ring, T->neg[n], cmap));
        if (n + 1 < length) S.frob.push_back(compile_poly(*ring, T->frob[n], cmap));
    }
    auto Rp = ring;
    const std::int64_t q = S.q;
    auto coords = [Rp, K, q, length](const NumberField::Elem& c) {
        auto cc = constant_coords(K, q, c, length);
        typename WittVectors<R>::Elem r;
        for (auto& x : cc) r.push_back(Rp->from_nf(K, x));
        return r;
    };
    S.int_coords = [coords, K](const mpz_class& v) { return coords(K.from_int(v)); };
    S.uniformizer = coords(K.pi());
    S.ghost_scalar = ring->from_nf(K, K.pi());
    S.frob_componentwise = ring->is_zero(S.ghost_scalar);
    return WittVectors<R>(ring, std::move(S));
}

// mu: W_{fm}(R) -> W_{O,m}(R) evaluated through the universal polynomials.
template <class R>
typename WittVectors<R>::Elem mu_transform(const WittVectors<R>& classical, const WittVectors<R>& ramified,
                                           const BaseDVR& base, const typename WittVectors<R>::Elem& x)
{
    const int m = ramified.length();
    if (static_cast<int>(x.size()) < base.f * (m - 1) + 1)
        throw std::invalid_argument("mu: input Witt vector too short");
    (void)classical;
    auto T = mu_table(base, m);
    NumberField K = base.field();
    const R& Rg = ramified.base();
    typename WittVectors<R>::Elem out;
    for (int n = 0; n < m; ++n) {
        auto P = compile_poly(Rg, T->mu[n], [&](const NumberField::Elem& c) { return Rg.from_nf(K, c); });
        std::vector<typename R::Elem> vals(x.begin(), x.begin() + std::min<std::size_t>(x.size(), Mono::kMaxVars));
        auto pw = power_table(Rg, vals, P.max_exp);
        out.push_back(eval_compiled(Rg, P, pw));
    }
    return out;
}

// W_O(k)/pi^n for k = F_{p^s}, s a multiple of f; sigma_pi = sigma^f.
struct WOk {
    ChainRingPtr ring;
    BaseDVR base;
    int sigma_pi_power = 1;  // sigma_pi = frob(., sigma_pi_power)
};
WOk make_WO_of_k(const BaseDVR& base, int s, int level);

}  // namespace wittforge

#endif
