#ifndef WITTFORGE_ORACLE_RING_HPP
#define WITTFORGE_ORACLE_RING_HPP

#include <random>
#include <stdexcept>

#include "wittforge/number_field.hpp"
#include "wittforge/polynomial.hpp"

namespace wittforge {

// Torsion-free test ring K[u_0, ..., u_{k-1}] with K = Q[y]/E.  Ghost maps
// are faithful here, which makes it the reference for Witt identities.
class OracleRing {
public:
    using Elem = Poly<NumberField>;
    static constexpr bool kTorsionFree = true;

    OracleRing(NumberField K, int nvars) : K_(std::move(K)), nvars_(nvars)
    {
        if (nvars < 0 || nvars > Mono::kMaxVars) throw std::invalid_argument("oracle ring: bad variable count");
    }

    const NumberField& field() const { return K_; }
    std::int64_t p() const { return K_.p(); }
    int nvars() const { return nvars_; }
    bool char_p() const { return false; }

    Elem zero() const { return Elem{}; }
    Elem one() const { return poly_const(K_, K_.one()); }
    Elem var(int i) const { return poly_var(K_, i); }
    Elem from_int(std::int64_t v) const { return poly_const(K_, K_.from_int(v)); }
    Elem from_mpz(const mpz_class& v) const { return poly_const(K_, K_.from_int(v)); }
    Elem from_rational(const mpq_class& v) const { return poly_const(K_, K_.from_rational(v)); }
    Elem from_nf(const NumberField& K, const NumberField::Elem& a) const
    {
        if (K.eisenstein() != K_.eisenstein() || K.p() != K_.p())
            throw std::invalid_argument("oracle ring: not an algebra over this O");
        return poly_const(K_, a);
    }

    Elem add(const Elem& a, const Elem& b) const { return poly_add(K_, a, b); }
    Elem sub(const Elem& a, const Elem& b) const { return poly_sub(K_, a, b); }
    Elem neg(const Elem& a) const { return poly_scale(K_, a, K_.from_int(-1)); }
    Elem mul(const Elem& a, const Elem& b) const { return poly_mul(K_, a, b); }
    bool eq(const Elem& a, const Elem& b) const { return poly_equal(K_, a, b); }
    bool is_zero(const Elem& a) const { return a.empty(); }

    // Random polynomial with integer coefficients in Z[y] of small size.
    Elem random(std::mt19937_64& rng, int max_degree = 2, int coeff_bound = 5) const
    {
        Elem r;
        std::uniform_int_distribution<int> coef(-coeff_bound, coeff_bound);
        const int terms = nvars_ == 0 ? 1 : 3;
        for (int t = 0; t < terms; ++t) {
            Mono m;
            for (int v = 0; v < nvars_; ++v) m.set(v, static_cast<int>(rng() % (max_degree + 1)));
            NumberField::Elem c = K_.zero();
            for (int b = 0; b < K_.degree(); ++b) c[b] = coef(rng);
            poly_add_term(K_, r, m, c);
        }
        return r;
    }

private:
    NumberField K_;
    int nvars_;
};

}  // namespace wittforge

#endif
