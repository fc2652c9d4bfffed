#ifndef WITTFORGE_POLYNOMIAL_HPP
#define WITTFORGE_POLYNOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace wittforge {

// Monomial in up to 16 variables, one byte of exponent per variable.
struct Mono {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;

    static constexpr int kMaxVars = 16;

    int exp(int var) const
    {
        const std::uint64_t w = var < 8 ? lo : hi;
        return static_cast<int>((w >> (8 * (var & 7))) & 0xff);
    }
    void set(int var, int e)
    {
        if (var < 0 || var >= kMaxVars || e < 0 || e > 255) throw std::overflow_error("monomial out of range");
        std::uint64_t& w = var < 8 ? lo : hi;
        const int sh = 8 * (var & 7);
        w = (w & ~(std::uint64_t(0xff) << sh)) | (std::uint64_t(e) << sh);
    }
    int degree() const
    {
        int d = 0;
        for (int v = 0; v < kMaxVars; ++v) d += exp(v);
        return d;
    }
    bool operator==(const Mono&) const = default;
    bool operator<(const Mono& o) const { return hi != o.hi ? hi < o.hi : lo < o.lo; }
};

namespace detail {
inline std::uint64_t add_bytes(std::uint64_t a, std::uint64_t b)
{
    constexpr std::uint64_t low7 = 0x7f7f7f7f7f7f7f7fULL, high = 0x8080808080808080ULL;
    const std::uint64_t s7 = (a & low7) + (b & low7);
    const std::uint64_t carry_out = ((a & b) | ((a | b) & s7)) & high;
    if (carry_out) throw std::overflow_error("monomial exponent exceeds 255");
    return s7 ^ ((a ^ b) & high);
}
}  // namespace detail

inline Mono operator*(const Mono& a, const Mono& b)
{
    return Mono{detail::add_bytes(a.lo, b.lo), detail::add_bytes(a.hi, b.hi)};
}

struct MonoHash {
    std::size_t operator()(const Mono& m) const
    {
        std::uint64_t h = m.lo * 0x9E3779B97F4A7C15ULL ^ (m.hi + 0x632BE59BD9B4E019ULL + (m.lo << 6));
        return static_cast<std::size_t>(h ^ (h >> 29));
    }
};

// Integer coefficients.
struct IntDomain {
    using Elem = mpz_class;
    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(const mpz_class& v) const { return v; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    bool is_zero(const Elem& a) const { return a == 0; }
};

// Sparse multivariate polynomial with coefficients in a domain D.
template <class D>
struct Poly {
    using Coeff = typename D::Elem;
    std::unordered_map<Mono, Coeff, MonoHash> terms;

    std::size_t size() const { return terms.size(); }
    bool empty() const { return terms.empty(); }

    // Terms in a deterministic order.
    std::vector<std::pair<Mono, Coeff>> sorted() const
    {
        std::vector<std::pair<Mono, Coeff>> v(terms.begin(), terms.end());
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        return v;
    }
};

template <class D>
Poly<D> poly_const(const D& d, const typename D::Elem& c)
{
    Poly<D> r;
    if (!d.is_zero(c)) r.terms.emplace(Mono{}, c);
    return r;
}

template <class D>
Poly<D> poly_var(const D& d, int var)
{
    Poly<D> r;
    Mono m;
    m.set(var, 1);
    r.terms.emplace(m, d.one());
    return r;
}

template <class D>
void poly_add_term(const D& d, Poly<D>& acc, const Mono& m, const typename D::Elem& c)
{
    if (d.is_zero(c)) return;
    auto it = acc.terms.find(m);
    if (it == acc.terms.end()) {
        acc.terms.emplace(m, c);
        return;
    }
    it->second = d.add(it->second, c);
    if (d.is_zero(it->second)) acc.terms.erase(it);
}

template <class D>
Poly<D> poly_add(const D& d, const Poly<D>& a, const Poly<D>& b)
{
    Poly<D> r = a;
    for (const auto& [m, c] : b.terms) poly_add_term(d, r, m, c);
    return r;
}

template <class D>
Poly<D> poly_sub(const D& d, const Poly<D>& a, const Poly<D>& b)
{
    Poly<D> r = a;
    for (const auto& [m, c] : b.terms) poly_add_term(d, r, m, d.neg(c));
    return r;
}

template <class D>
Poly<D> poly_scale(const D& d, const Poly<D>& a, const typename D::Elem& k)
{
    Poly<D> r;
    if (d.is_zero(k)) return r;
    r.terms.reserve(a.terms.size());
    for (const auto& [m, c] : a.terms) {
        auto v = d.mul(c, k);
        if (!d.is_zero(v)) r.terms.emplace(m, std::move(v));
    }
    return r;
}

template <class D>
Poly<D> poly_mul(const D& d, const Poly<D>& a, const Poly<D>& b)
{
    Poly<D> r;
    if (a.empty() || b.empty()) return r;
    const Poly<D>& big = a.size() >= b.size() ? a : b;
    const Poly<D>& small = a.size() >= b.size() ? b : a;
    r.terms.reserve(big.size() * 2);
    for (const auto& [ms, cs] : small.terms)
        for (const auto& [mb, cb] : big.terms) poly_add_term(d, r, ms * mb, d.mul(cs, cb));
    return r;
}

template <class D>
Poly<D> poly_pow(const D& d, const Poly<D>& a, unsigned long k)
{
    // Repeated multiplication by the (usually small) base keeps term maps lean.
    Poly<D> r = poly_const(d, d.one());
    if (k == 0) return r;
    if (a.size() == 1) {
        const auto& [m, c] = *a.terms.begin();
        Mono mk;
        for (int v = 0; v < Mono::kMaxVars; ++v)
            if (m.exp(v)) mk.set(v, static_cast<int>(m.exp(v) * k));
        typename D::Elem ck = d.one();
        for (unsigned long i = 0; i < k; ++i) ck = d.mul(ck, c);
        Poly<D> out;
        if (!d.is_zero(ck)) out.terms.emplace(mk, ck);
        return out;
    }
    r = a;
    for (unsigned long i = 1; i < k; ++i) r = poly_mul(d, r, a);
    return r;
}

template <class D>
bool poly_equal(const D& d, const Poly<D>& a, const Poly<D>& b)
{
    if (a.size() != b.size()) return false;
    for (const auto& [m, c] : a.terms) {
        auto it = b.terms.find(m);
        if (it == b.terms.end() || !d.is_zero(d.sub(c, it->second))) return false;
    }
    return true;
}

// Maps every coefficient through fn, dropping zeros.
template <class D2, class D, class Fn>
Poly<D2> poly_map(const D2& d2, const Poly<D>& a, Fn fn)
{
    Poly<D2> r;
    for (const auto& [m, c] : a.terms) {
        auto v = fn(c);
        if (!d2.is_zero(v)) r.terms.emplace(m, std::move(v));
    }
    return r;
}

// Substitutes polynomials for variables.
template <class D>
Poly<D> poly_substitute(const D& d, const Poly<D>& a, const std::vector<Poly<D>>& vals)
{
    int nv = 0;
    for (const auto& [m, c] : a.terms)
        for (int v = 0; v < Mono::kMaxVars; ++v)
            if (m.exp(v)) nv = std::max(nv, v + 1);
    if (static_cast<int>(vals.size()) < nv) throw std::invalid_argument("substitute: too few values");
    std::vector<std::vector<Poly<D>>> powers(nv);
    Poly<D> r;
    for (const auto& [m, c] : a.sorted()) {
        Poly<D> t = poly_const(d, c);
        for (int v = 0; v < nv; ++v) {
            int e = m.exp(v);
            if (!e) continue;
            auto& pw = powers[v];
            if (pw.empty()) pw.push_back(poly_const(d, d.one()));
            while (static_cast<int>(pw.size()) <= e) pw.push_back(poly_mul(d, pw.back(), vals[v]));
            t = poly_mul(d, t, pw[e]);
        }
        r = poly_add(d, r, t);
    }
    return r;
}

// A polynomial whose coefficients have been mapped into a target ring once,
// evaluated many times at points of that ring.
template <class Ring>
struct CompiledPoly {
    struct Term {
        typename Ring::Elem coeff;
        std::vector<std::pair<int, int>> factors;
    };
    std::vector<Term> terms;
    int nvars = 0;
    int max_exp = 0;
};

template <class Ring, class D, class Fn>
CompiledPoly<Ring> compile_poly(const Ring& R, const Poly<D>& a, Fn coeff_map)
{
    CompiledPoly<Ring> out;
    for (const auto& [m, c] : a.sorted()) {
        typename CompiledPoly<Ring>::Term t{coeff_map(c), {}};
        if (R.is_zero(t.coeff)) continue;
        for (int v = 0; v < Mono::kMaxVars; ++v)
            if (int e = m.exp(v)) {
                t.factors.emplace_back(v, e);
                out.nvars = std::max(out.nvars, v + 1);
                out.max_exp = std::max(out.max_exp, e);
            }
        out.terms.push_back(std::move(t));
    }
    return out;
}

// Evaluates with a shared power table: pw[v][k] = vals[v]^k.
template <class Ring>
typename Ring::Elem eval_compiled(const Ring& R, const CompiledPoly<Ring>& P,
                                  const std::vector<std::vector<typename Ring::Elem>>& pw)
{
    typename Ring::Elem acc = R.zero();
    for (const auto& t : P.terms) {
        typename Ring::Elem x = t.coeff;
        for (const auto& [v, e] : t.factors) x = R.mul(x, pw[v][e]);
        acc = R.add(acc, x);
    }
    return acc;
}

template <class Ring>
std::vector<std::vector<typename Ring::Elem>> power_table(const Ring& R, const std::vector<typename Ring::Elem>& vals,
                                                          int max_exp)
{
    std::vector<std::vector<typename Ring::Elem>> pw(vals.size());
    for (std::size_t v = 0; v < vals.size(); ++v) {
        pw[v].reserve(max_exp + 1);
        pw[v].push_back(R.one());
        for (int k = 1; k <= max_exp; ++k) pw[v].push_back(R.mul(pw[v].back(), vals[v]));
    }
    return pw;
}

template <class D>
std::string poly_to_string(const D& d, const Poly<D>& a, const std::vector<std::string>& names,
                           std::string (*coeff_str)(const D&, const typename D::Elem&))
{
    if (a.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : a.sorted()) {
        if (!out.empty()) out += " + ";
        out += "(" + coeff_str(d, c) + ")";
        for (int v = 0; v < Mono::kMaxVars; ++v)
            if (int e = m.exp(v)) {
                out += "*" + (v < static_cast<int>(names.size()) ? names[v] : "v" + std::to_string(v));
                if (e > 1) out += "^" + std::to_string(e);
            }
    }
    return out;
}

}  // namespace wittforge

#endif
