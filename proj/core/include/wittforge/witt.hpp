#ifndef WITTFORGE_WITT_HPP
#define WITTFORGE_WITT_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "wittforge/chain_ring.hpp"
#include "wittforge/number_field.hpp"
#include "wittforge/polynomial.hpp"

namespace wittforge {

// Universal p-typical Witt polynomials.  Sum and product use the
// interleaved layout a_i = var 2i, b_i = var 2i+1, so the table of depth m
// is a prefix of every deeper table.  Negation and Frobenius use x_i = var i.
struct WittStructureTable {
    std::int64_t p = 0;
    int depth = 0;
    std::vector<Poly<IntDomain>> sum;
    std::vector<Poly<IntDomain>> prod;
    std::vector<Poly<IntDomain>> neg;
    std::vector<Poly<IntDomain>> frob;  // depth - 1 entries
};

struct TableCheck {
    bool ok = true;
    std::string detail;
};

WittStructureTable build_witt_table(std::int64_t p, int depth);
// Memoized, safe under concurrent first use.  Honors WITTFORGE_CACHE_DIR.
std::shared_ptr<const WittStructureTable> witt_table(std::int64_t p, int depth);
// Re-derives w_n(S) = w_n(a) + w_n(b) etc. as integer polynomial identities.
TableCheck verify_witt_table(const WittStructureTable& t);
// Reduces the Frobenius polynomials mod p and compares with x_n^p.
TableCheck verify_frobenius_collapse(const WittStructureTable& t);

// n-th ghost polynomial sum_i p^i x_i^{p^{n-i}} with x_i = var(stride*i + offset).
Poly<IntDomain> ghost_poly(std::int64_t p, int n, int stride = 1, int offset = 0);

std::string table_to_json(const WittStructureTable& t);
WittStructureTable table_from_json(const std::string& text);

// Witt coordinates over K of a constant c of O, for ghost polynomials
// sum pi^i x_i^{q^{n-i}}; each division by pi^n is checked for integrality.
std::vector<NumberField::Elem> constant_coords(const NumberField& K, std::int64_t q, const NumberField::Elem& c,
                                               int length);

// Truncated Witt vectors W_m(R) (classical) or W_{O,m}(R) (ramified) over a
// commutative ring R.  The structure polynomials are compiled into R once.
template <class R>
class WittVectors {
public:
    using BaseElem = typename R::Elem;
    using Elem = std::vector<BaseElem>;

    struct Spec {
        std::int64_t p = 0;
        std::int64_t q = 0;
        int length = 0;
        bool ramified = false;
        std::vector<CompiledPoly<R>> sum, prod, neg, frob;
        Elem uniformizer;                                   // the Witt vector of p resp. pi
        BaseElem ghost_scalar;                              // p resp. pi in R
        bool frob_componentwise = false;                    // uniformizer vanishes in R
        std::function<Elem(const mpz_class&)> int_coords;  // Witt vector of an integer
    };

    WittVectors(std::shared_ptr<const R> ring, Spec spec) : R_(std::move(ring)), S_(std::move(spec)) {}

    const R& base() const { return *R_; }
    std::shared_ptr<const R> base_ptr() const { return R_; }
    int length() const { return S_.length; }
    std::int64_t p() const { return S_.p; }
    std::int64_t q() const { return S_.q; }
    bool ramified() const { return S_.ramified; }
    bool frob_componentwise() const { return S_.frob_componentwise; }

    Elem zero() const { return Elem(S_.length, R_->zero()); }
    Elem one() const { return teichmuller(R_->one()); }
    Elem teichmuller(const BaseElem& a) const
    {
        Elem r = zero();
        if (!r.empty()) r[0] = a;
        return r;
    }
    Elem from_int(std::int64_t v) const { return S_.int_coords(mpz_class(static_cast<long>(v))); }
    Elem from_mpz(const mpz_class& v) const { return S_.int_coords(v); }
    const Elem& uniformizer() const { return S_.uniformizer; }

    Elem add(const Elem& a, const Elem& b) const { return binary(S_.sum, a, b); }
    Elem mul(const Elem& a, const Elem& b) const { return binary(S_.prod, a, b); }
    Elem neg(const Elem& a) const { return unary(S_.neg, a, S_.length); }
    Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }
    bool eq(const Elem& a, const Elem& b) const
    {
        if (a.size() != b.size()) return false;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (!R_->eq(a[i], b[i])) return false;
        return true;
    }
    bool is_zero(const Elem& a) const
    {
        for (const auto& c : a)
            if (!R_->is_zero(c)) return false;
        return true;
    }

    // Length-preserving when the uniformizer vanishes in R, else length - 1.
    Elem frob(const Elem& x) const
    {
        check(x);
        if (x.empty()) throw std::invalid_argument("frobenius of a length-0 Witt vector");
        if (S_.frob_componentwise) {
            Elem r(x.size());
            for (std::size_t i = 0; i < x.size(); ++i) r[i] = pow_q(x[i]);
            return r;
        }
        return unary(S_.frob, x, S_.length - 1);
    }
    Elem ver(const Elem& x) const
    {
        check(x);
        Elem r = zero();
        for (int i = 1; i < S_.length; ++i) r[i] = x[i - 1];
        return r;
    }
    // Drops coordinates beyond len.
    Elem truncate(const Elem& x, int len) const { return Elem(x.begin(), x.begin() + len); }

    bool is_unit(const BaseElem& a) const { return R_->is_unit(a); }
    bool is_unit(const Elem& a) const { return !a.empty() && R_->is_unit(a[0]); }
    Elem inv(const Elem& x) const
    {
        if (!is_unit(x)) throw std::domain_error("Witt vector is not a unit");
        // Newton iteration; 1 - xy lies in the nilpotent ideal V W_{m-1}(R).
        Elem y = teichmuller(R_->inv(x[0]));
        Elem two = from_int(2);
        for (int it = 0; it <= 2 * S_.length + 2; ++it) {
            Elem xy = mul(x, y);
            if (eq(xy, one())) return y;
            y = mul(y, sub(two, xy));
        }
        if (!eq(mul(x, y), one())) throw std::logic_error("Witt inverse did not converge");
        return y;
    }

    // Ghost components; refused over rings with torsion.
    std::vector<BaseElem> ghost(const Elem& x) const
    {
        if constexpr (!R::kTorsionFree) {
            throw std::domain_error("ghost map is not faithful over a torsion ring");
        } else {
            check(x);
            std::vector<BaseElem> g;
            for (int n = 0; n < S_.length; ++n) {
                BaseElem acc = R_->zero(), piw = R_->one();
                for (int i = 0; i <= n; ++i) {
                    BaseElem t = x[i];
                    for (int k = 0; k < n - i; ++k) t = pow_int(t, S_.q);
                    acc = R_->add(acc, R_->mul(piw, t));
                    piw = R_->mul(piw, S_.ghost_scalar);
                }
                g.push_back(acc);
            }
            return g;
        }
    }

    template <class Rng>
    Elem random(Rng& rng) const
    {
        Elem r(S_.length);
        for (auto& c : r) c = R_->random(rng);
        return r;
    }

    // Applies a ring map coordinatewise (functoriality W(hom)).
    template <class R2, class Fn>
    typename WittVectors<R2>::Elem map_to(const WittVectors<R2>& target, const Elem& x, Fn hom) const
    {
        typename WittVectors<R2>::Elem r;
        for (const auto& c : x) r.push_back(hom(c));
        (void)target;
        return r;
    }

    BaseElem pow_int(const BaseElem& a, std::int64_t k) const
    {
        BaseElem r = R_->one(), b = a;
        while (k > 0) {
            if (k & 1) r = R_->mul(r, b);
            k >>= 1;
            if (k) b = R_->mul(b, b);
        }
        return r;
    }

private:
    BaseElem pow_q(const BaseElem& a) const { return pow_int(a, S_.q); }

    void check(const Elem& x) const
    {
        if (static_cast<int>(x.size()) != S_.length) throw std::invalid_argument("Witt vector length mismatch");
    }

    Elem binary(const std::vector<CompiledPoly<R>>& polys, const Elem& a, const Elem& b) const
    {
        check(a);
        check(b);
        std::vector<BaseElem> vals(2 * S_.length);
        for (int i = 0; i < S_.length; ++i) {
            vals[2 * i] = a[i];
            vals[2 * i + 1] = b[i];
        }
        return eval_all(polys, vals, S_.length);
    }

    Elem unary(const std::vector<CompiledPoly<R>>& polys, const Elem& a, int out_len) const
    {
        check(a);
        return eval_all(polys, a, out_len);
    }

    Elem eval_all(const std::vector<CompiledPoly<R>>& polys, const std::vector<BaseElem>& vals, int out_len) const
    {
        int max_exp = 0;
        for (int n = 0; n < out_len; ++n) max_exp = std::max(max_exp, polys[n].max_exp);
        auto pw = power_table(*R_, vals, max_exp);
        Elem r(out_len);
        for (int n = 0; n < out_len; ++n) r[n] = eval_compiled(*R_, polys[n], pw);
        return r;
    }

    std::shared_ptr<const R> R_;
    Spec S_;
};

// Classical W_m(R).
template <class R>
WittVectors<R> classical_witt(std::shared_ptr<const R> ring, std::int64_t p, int length)
{
    if (length < 1) throw std::invalid_argument("Witt length must be >= 1");
    auto T = witt_table(p, length);
    typename WittVectors<R>::Spec S;
    S.p = p;
    S.q = p;
    S.length = length;
    auto cmap = [&](const mpz_class& c) { return ring->from_mpz(c); };
    for (int n = 0; n < length; ++n) {
        S.sum.push_back(compile_poly(*ring, T->sum[n], cmap));
        S.prod.push_back(compile_poly(*ring, T->prod[n], cmap));
        S.neg.push_back(compile_poly(*ring, T->neg[n], cmap));
        if (n + 1 < length) S.frob.push_back(compile_poly(*ring, T->frob[n], cmap));
    }
    NumberField Q = NumberField::rationals(p);
    auto Rp = ring;
    S.int_coords = [Rp, Q, p, length](const mpz_class& v) {
        auto cc = constant_coords(Q, p, Q.from_int(v), length);
        typename WittVectors<R>::Elem r;
        for (auto& c : cc) r.push_back(Rp->from_rational(c[0]));
        return r;
    };
    S.uniformizer = S.int_coords(mpz_class(static_cast<long>(p)));
    S.ghost_scalar = ring->from_mpz(mpz_class(static_cast<long>(p)));
    S.frob_componentwise = ring->is_zero(S.ghost_scalar);
    return WittVectors<R>(ring, std::move(S));
}

// Artin-Hasse series exp(sum_i t^{p^i}/p^i) mod t^N over Q; throws if a
// coefficient fails to be p-integral.
std::vector<mpq_class> artin_hasse_series(std::int64_t p, int N);

// E(x, t) = prod_n AH(x_n t^{p^n}) mod t^N.
template <class R>
std::vector<typename R::Elem> artin_hasse_eval(const WittVectors<R>& W, const typename WittVectors<R>::Elem& x, int N)
{
    const R& Rg = W.base();
    auto series = artin_hasse_series(W.p(), N);
    std::vector<typename R::Elem> acc(N, Rg.zero());
    acc[0] = Rg.one();
    std::int64_t step = 1;
    for (int n = 0; n < static_cast<int>(x.size()) && step < N; ++n, step *= W.p()) {
        std::vector<typename R::Elem> fac(N, Rg.zero());
        typename R::Elem xp = Rg.one();
        for (std::int64_t k = 0; k * step < N; ++k) {
            fac[k * step] = Rg.mul(Rg.from_rational(series[k]), xp);
            xp = Rg.mul(xp, x[n]);
        }
        std::vector<typename R::Elem> out(N, Rg.zero());
        for (int i = 0; i < N; ++i) {
            if (Rg.is_zero(acc[i])) continue;
            for (int j = 0; i + j < N; ++j)
                if (!Rg.is_zero(fac[j])) out[i + j] = Rg.add(out[i + j], Rg.mul(acc[i], fac[j]));
        }
        acc = std::move(out);
    }
    return acc;
}

}  // namespace wittforge

#endif
