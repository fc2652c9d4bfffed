#include "wittforge/chain_ring.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "wittforge/number_field.hpp"

namespace wittforge {

using i64 = std::int64_t;
using i128 = __int128;

namespace {

i64 mod_norm(i128 v, i64 m)
{
    i64 r = static_cast<i64>(v % m);
    return r < 0 ? r + m : r;
}

// a*b mod (monic f, degree d) mod m, all vectors of length d.
std::vector<i64> polymulmod(const std::vector<i64>& a, const std::vector<i64>& b,
                            const std::vector<i64>& f, i64 m)
{
    const int d = static_cast<int>(f.size()) - 1;
    std::vector<i128> t(2 * d, 0);
    for (int i = 0; i < d; ++i) {
        if (!a[i]) continue;
        for (int j = 0; j < d; ++j)
            t[i + j] = (t[i + j] + static_cast<i128>(a[i]) * b[j]) % m;
    }
    for (int k = 2 * d - 2; k >= d; --k) {
        i64 c = mod_norm(t[k], m);
        if (!c) continue;
        for (int j = 0; j < d; ++j)
            t[k - d + j] = (t[k - d + j] - static_cast<i128>(c) * f[j]) % m;
        t[k] = 0;
    }
    std::vector<i64> r(d);
    for (int i = 0; i < d; ++i) r[i] = mod_norm(t[i], m);
    return r;
}

std::vector<i64> polypowmod(std::vector<i64> b, mpz_class e, const std::vector<i64>& f, i64 m)
{
    const int d = static_cast<int>(f.size()) - 1;
    std::vector<i64> r(d, 0);
    r[0] = 1 % m;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = polymulmod(r, b, f, m);
        e >>= 1;
        if (e > 0) b = polymulmod(b, b, f, m);
    }
    return r;
}

// Smallest monic irreducible polynomial of degree s over F_p, constant first.
std::vector<i64> first_irreducible(i64 p, int s)
{
    if (s == 1) return {0, 1};
    i64 total = ipow(p, s);
    for (i64 idx = 0; idx < total; ++idx) {
        std::vector<i64> g(s + 1);
        i64 t = idx;
        for (int i = 0; i < s; ++i) { g[i] = t % p; t /= p; }
        g[s] = 1;
        if (g[0] == 0) continue;
        // irreducible iff gcd(x^{p^i} - x, g) = 1 for 1 <= i <= s/2
        bool irreducible = true;
        std::vector<i64> xp(s, 0);
        xp[1 % s] = 1;
        std::vector<i64> cur = xp;
        for (int i = 1; i <= s / 2 && irreducible; ++i) {
            cur = polypowmod(cur, mpz_class(static_cast<unsigned long>(p)), g, p);
            std::vector<i64> h = cur;
            h[1] = mod_norm(static_cast<i128>(h[1]) - 1, p);
            // gcd(h, g) over F_p
            std::vector<i64> a = g, b = h;
            auto trim = [](std::vector<i64>& v) { while (!v.empty() && v.back() == 0) v.pop_back(); };
            trim(a);
            trim(b);
            while (!b.empty()) {
                i64 inv = mod_inv_i64(b.back(), p);
                while (a.size() >= b.size() && !a.empty()) {
                    i64 c = a.back() * inv % p;
                    size_t shift = a.size() - b.size();
                    for (size_t k = 0; k < b.size(); ++k)
                        a[shift + k] = mod_norm(static_cast<i128>(a[shift + k]) - c * b[k], p);
                    trim(a);
                }
                std::swap(a, b);
            }
            if (a.size() > 1) irreducible = false;
        }
        if (irreducible) return g;
    }
    throw std::logic_error("no irreducible polynomial found");
}

}  // namespace

i64 ipow(i64 b, int e)
{
    i64 r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

i64 mod_pow_i64(i64 b, i64 e, i64 m)
{
    i64 r = 1 % m;
    b = mod_norm(b, m);
    while (e > 0) {
        if (e & 1) r = static_cast<i64>(static_cast<i128>(r) * b % m);
        b = static_cast<i64>(static_cast<i128>(b) * b % m);
        e >>= 1;
    }
    return r;
}

i64 mod_inv_i64(i64 a, i64 m)
{
    i64 g = m, x = 0, x1 = 1, a1 = mod_norm(a, m);
    while (a1) {
        i64 q = g / a1;
        std::tie(g, a1) = std::make_pair(a1, g - q * a1);
        std::tie(x, x1) = std::make_pair(x1, x - q * x1);
    }
    if (g != 1) throw std::domain_error("not invertible modulo m");
    return mod_norm(x, m);
}

bool is_prime_i64(i64 p)
{
    if (p < 2) return false;
    for (i64 d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::shared_ptr<const ChainRing> ChainRing::galois(i64 p, int s, int N)
{
    return ramified(p, s, {-p, 1}, N);
}

std::shared_ptr<const ChainRing> ChainRing::ramified(i64 p, int s, const std::vector<i64>& eis, int n)
{
    if (!is_prime_i64(p)) throw std::invalid_argument("chain ring: p must be prime");
    if (s < 1 || n < 1) throw std::invalid_argument("chain ring: s and n must be positive");
    int e = static_cast<int>(eis.size()) - 1;
    if (e < 1 || eis.back() != 1) throw std::invalid_argument("chain ring: E must be monic");
    for (int i = 0; i < e; ++i)
        if (eis[i] % p) throw std::invalid_argument("chain ring: E is not Eisenstein");
    if ((eis[0] / p) % p == 0) throw std::invalid_argument("chain ring: E is not Eisenstein");
    if (s * e > kSlots) throw std::invalid_argument("chain ring: s*e exceeds slot capacity");
    std::shared_ptr<ChainRing> r(new ChainRing());
    r->kind_ = Kind::Mixed;
    r->p_ = p;
    r->s_ = s;
    r->e_ = e;
    r->n_ = n;
    r->N_ = (n + e - 1) / e;
    r->eis_ = eis;
    r->init_galois();
    return r;
}

std::shared_ptr<const ChainRing> ChainRing::equal_char(i64 p, int s, int n)
{
    if (!is_prime_i64(p)) throw std::invalid_argument("chain ring: p must be prime");
    if (s < 1 || n < 1) throw std::invalid_argument("chain ring: s and n must be positive");
    if (s * n > kSlots) throw std::invalid_argument("chain ring: s*n exceeds slot capacity");
    std::shared_ptr<ChainRing> r(new ChainRing());
    r->kind_ = Kind::EqualChar;
    r->p_ = p;
    r->s_ = s;
    r->e_ = n;
    r->n_ = n;
    r->N_ = 1;
    r->eis_.assign(n + 1, 0);
    r->eis_[n] = 1;
    r->init_galois();
    return r;
}

std::shared_ptr<const ChainRing> ChainRing::at_level(int n) const
{
    if (kind_ == Kind::EqualChar) return equal_char(p_, s_, n);
    return ramified(p_, s_, eis_, n);
}

void ChainRing::init_galois()
{
    q_ = ipow(p_, s_);
    M_ = ipow(p_, N_);
    if (M_ > (i64(1) << 40)) throw std::invalid_argument("chain ring: p^N too large");
    Nb_.assign(e_, 0);
    modb_.assign(e_, 1);
    for (int b = 0; b < e_; ++b) {
        if (kind_ == Kind::EqualChar)
            Nb_[b] = 1;
        else
            Nb_[b] = n_ > b ? (n_ - b + e_ - 1) / e_ : 0;
        modb_[b] = ipow(p_, Nb_[b]);
    }
    g_ = first_irreducible(p_, s_);
    // Teichmueller lift of a root of g, then its minimal polynomial.
    std::vector<i64> gl = g_;
    std::vector<i64> xv(s_, 0);
    if (s_ > 1) xv[1] = 1;
    mpz_class qe;
    mpz_ui_pow_ui(qe.get_mpz_t(), static_cast<unsigned long>(q_), static_cast<unsigned long>(N_ - 1));
    std::vector<i64> omega = s_ > 1 ? polypowmod(xv, qe, gl, M_) : std::vector<i64>{0};
    // G(X) = prod_i (X - omega^{p^i}), coefficients in Z/p^N[x]/g
    std::vector<std::vector<i64>> G(1, std::vector<i64>(s_, 0));
    G[0][0] = 1 % M_;
    std::vector<i64> root = omega;
    for (int i = 0; i < s_; ++i) {
        std::vector<std::vector<i64>> H(G.size() + 1, std::vector<i64>(s_, 0));
        for (size_t k = 0; k < G.size(); ++k) {
            for (int t = 0; t < s_; ++t) H[k + 1][t] = mod_norm(static_cast<i128>(H[k + 1][t]) + G[k][t], M_);
            std::vector<i64> prod = s_ > 1 ? polymulmod(G[k], root, gl, M_)
                                           : std::vector<i64>{mod_norm(static_cast<i128>(G[k][0]) * root[0], M_)};
            for (int t = 0; t < s_; ++t) H[k][t] = mod_norm(static_cast<i128>(H[k][t]) - prod[t], M_);
        }
        G = std::move(H);
        if (s_ > 1) root = polypowmod(root, mpz_class(static_cast<unsigned long>(p_)), gl, M_);
    }
    G_.assign(s_ + 1, 0);
    for (int k = 0; k <= s_; ++k) {
        for (int t = 1; t < s_; ++t)
            if (G[k][t] != 0) throw std::logic_error("Teichmueller polynomial not rational");
        G_[k] = G[k][0];
    }
    // sigma(x^i) = x^{p i}
    frob_cols_.assign(s_, std::vector<i64>(s_, 0));
    for (int i = 0; i < s_; ++i) {
        if (s_ == 1) {
            frob_cols_[0][0] = 1;
            continue;
        }
        std::vector<i64> xi(s_, 0);
        xi[1] = 1;
        frob_cols_[i] = polypowmod(xi, mpz_class(static_cast<unsigned long>(p_ * i)), G_, M_);
    }
    // p / y for the mixed ramified case: -u0^{-1} (y^{e-1} + E_{e-1} y^{e-2} + ... + E_1)
    p_over_y_ = CElem{};
    if (kind_ == Kind::Mixed) {
        if (e_ == 1) {
            p_over_y_ = one();
        } else {
            i64 u0inv = mod_inv_i64(eis_[0] / p_, M_);
            for (int b = 0; b < e_; ++b)
                p_over_y_.c[b * s_] = mod_norm(-static_cast<i128>(u0inv) * eis_[b + 1], M_);
            canonicalize(p_over_y_);
        }
    }
}

std::string ChainRing::describe() const
{
    std::ostringstream os;
    if (kind_ == Kind::EqualChar) {
        os << "F_" << q_ << "[y]/(y^" << n_ << ")";
        return os.str();
    }
    if (e_ == 1) {
        os << "W(F_" << q_ << ")/" << p_ << "^" << n_;
        return os.str();
    }
    os << "W(F_" << q_ << ")[y]/(";
    bool first = true;
    for (int b = e_; b >= 0; --b) {
        if (!eis_[b]) continue;
        if (!first) os << (eis_[b] > 0 ? " + " : " - ");
        else if (eis_[b] < 0) os << "-";
        first = false;
        i64 c = eis_[b] < 0 ? -eis_[b] : eis_[b];
        if (b == 0 || c != 1) os << c;
        if (b > 0) os << "y" << (b > 1 ? "^" + std::to_string(b) : "");
    }
    os << ", y^" << n_ << ")";
    return os.str();
}

bool ChainRing::same_as(const ChainRing& o) const
{
    return kind_ == o.kind_ && p_ == o.p_ && s_ == o.s_ && n_ == o.n_ && eis_ == o.eis_;
}

void ChainRing::canonicalize(CElem& a) const
{
    for (int b = 0; b < e_; ++b)
        for (int i = 0; i < s_; ++i) {
            i64& v = a.c[b * s_ + i];
            v %= modb_[b];
            if (v < 0) v += modb_[b];
        }
}

CElem ChainRing::one() const
{
    CElem r;
    r.c[0] = 1 % modb_[0];
    return r;
}

CElem ChainRing::from_int(i64 v) const
{
    CElem r;
    r.c[0] = mod_norm(v, modb_[0]);
    return r;
}

CElem ChainRing::from_mpz(const mpz_class& v) const
{
    mpz_class m = modb_[0];
    mpz_class r = v % m;
    if (r < 0) r += m;
    return from_int(r.get_si());
}

CElem ChainRing::from_rational(const mpq_class& v) const
{
    mpz_class m = M_;
    mpz_class den = v.get_den() % m;
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::domain_error("rational with denominator divisible by p");
    mpz_class r = (v.get_num() % m) * inv % m;
    if (r < 0) r += m;
    return from_int(r.get_si());
}

CElem ChainRing::from_nf(const NumberField& K, const std::vector<mpq_class>& a) const
{
    if (K.p() != p_) throw std::invalid_argument("from_nf: prime mismatch");
    CElem y;
    if (kind_ == Kind::Mixed && K.eisenstein() == eis_)
        y = uniformizer();
    else if (char_p())
        y = zero();
    else
        throw std::invalid_argument("from_nf: ring is not an algebra over this O");
    CElem r = zero(), yp = one();
    for (int b = 0; b < K.degree(); ++b) {
        if (a[b] != 0) r = add(r, mul(from_rational(a[b]), yp));
        yp = mul(yp, y);
    }
    return r;
}

CElem ChainRing::gen() const
{
    // For s = 1 the Teichmueller root of g = x is 0.
    CElem r;
    if (s_ > 1) r.c[1] = 1 % modb_[0];
    return r;
}

CElem ChainRing::uniformizer() const
{
    if (kind_ == Kind::Mixed && e_ == 1) return from_int(p_);
    CElem r;
    if (e_ > 1) r.c[s_] = 1 % modb_[1];
    return r;
}

CElem ChainRing::uniformizer_pow(int k) const
{
    CElem r = one(), y = uniformizer();
    for (int i = 0; i < k; ++i) r = mul(r, y);
    return r;
}

CElem ChainRing::add(const CElem& a, const CElem& b) const
{
    CElem r;
    for (int b0 = 0; b0 < e_; ++b0)
        for (int i = 0; i < s_; ++i) {
            int k = b0 * s_ + i;
            i64 v = a.c[k] + b.c[k];
            if (v >= modb_[b0]) v -= modb_[b0];
            r.c[k] = v;
        }
    return r;
}

CElem ChainRing::sub(const CElem& a, const CElem& b) const
{
    CElem r;
    for (int b0 = 0; b0 < e_; ++b0)
        for (int i = 0; i < s_; ++i) {
            int k = b0 * s_ + i;
            i64 v = a.c[k] - b.c[k];
            if (v < 0) v += modb_[b0];
            r.c[k] = v;
        }
    return r;
}

CElem ChainRing::neg(const CElem& a) const
{
    return sub(zero(), a);
}

CElem ChainRing::scale(const CElem& a, i64 k) const
{
    CElem r;
    for (int b = 0; b < e_; ++b)
        for (int i = 0; i < s_; ++i)
            r.c[b * s_ + i] = mod_norm(static_cast<i128>(a.c[b * s_ + i]) * mod_norm(k, modb_[b]), modb_[b]);
    return r;
}

std::vector<i64> ChainRing::gr_mul(const i64* a, const i64* b) const
{
    if (s_ == 1) return {mod_norm(static_cast<i128>(a[0]) * b[0], M_)};
    std::vector<i64> va(a, a + s_), vb(b, b + s_);
    return polymulmod(va, vb, G_, M_);
}

CElem ChainRing::mul(const CElem& a, const CElem& b) const
{
    if (e_ == 1) {
        CElem r;
        auto v = gr_mul(a.c.data(), b.c.data());
        for (int i = 0; i < s_; ++i) r.c[i] = mod_norm(v[i], modb_[0]);
        return r;
    }
    std::vector<std::vector<i64>> t(2 * e_ - 1, std::vector<i64>(s_, 0));
    for (int i = 0; i < e_; ++i) {
        bool za = true;
        for (int k = 0; k < s_; ++k) za = za && a.c[i * s_ + k] == 0;
        if (za) continue;
        for (int j = 0; j < e_; ++j) {
            if (kind_ == Kind::EqualChar && i + j >= n_) break;
            bool zb = true;
            for (int k = 0; k < s_; ++k) zb = zb && b.c[j * s_ + k] == 0;
            if (zb) continue;
            auto v = gr_mul(&a.c[i * s_], &b.c[j * s_]);
            for (int k = 0; k < s_; ++k) t[i + j][k] = (t[i + j][k] + v[k]) % M_;
        }
    }
    if (kind_ == Kind::Mixed) {
        for (int k = 2 * e_ - 2; k >= e_; --k)
            for (int j = 0; j < e_; ++j) {
                if (!eis_[j]) continue;
                for (int u = 0; u < s_; ++u)
                    t[k - e_ + j][u] = mod_norm(static_cast<i128>(t[k - e_ + j][u]) - static_cast<i128>(t[k][u]) * eis_[j], M_);
            }
    }
    CElem r;
    for (int b0 = 0; b0 < e_; ++b0)
        for (int u = 0; u < s_; ++u) r.c[b0 * s_ + u] = mod_norm(t[b0][u], modb_[b0]);
    return r;
}

CElem ChainRing::pow(const CElem& a, mpz_class k) const
{
    if (k < 0) return pow(inv(a), -k);
    CElem r = one(), b = a;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) r = mul(r, b);
        k >>= 1;
        if (k > 0) b = mul(b, b);
    }
    return r;
}

int ChainRing::valuation(const CElem& a) const
{
    int v = n_;
    for (int b = 0; b < e_; ++b)
        for (int i = 0; i < s_; ++i) {
            i64 c = a.c[b * s_ + i];
            if (!c) continue;
            int vp = 0;
            while (c % p_ == 0) { c /= p_; ++vp; }
            int w = kind_ == Kind::EqualChar ? b : e_ * vp + b;
            if (w < v) v = w;
        }
    return v;
}

bool ChainRing::is_unit(const CElem& a) const
{
    for (int i = 0; i < s_; ++i)
        if (a.c[i] % p_ != 0) return true;
    return false;
}

CElem ChainRing::inv(const CElem& a) const
{
    if (!is_unit(a)) throw std::domain_error("inverse of a non-unit");
    CElem r = pow(a, mpz_class(static_cast<unsigned long>(q_ - 1)));
    CElem t = sub(r, one());
    CElem mt = neg(t), term = one(), series = one();
    for (int i = 1; i < n_; ++i) {
        term = mul(term, mt);
        if (is_zero(term)) break;
        series = add(series, term);
    }
    CElem base = q_ >= 2 ? pow(a, mpz_class(static_cast<unsigned long>(q_ - 2))) : one();
    return mul(base, series);
}

CElem ChainRing::div_uniformizer(const CElem& a) const
{
    if (valuation(a) < 1) throw std::domain_error("division by the uniformizer: not divisible");
    CElem r;
    if (kind_ == Kind::EqualChar) {
        for (int b = 1; b < e_; ++b)
            for (int i = 0; i < s_; ++i) r.c[(b - 1) * s_ + i] = a.c[b * s_ + i];
        return r;
    }
    if (e_ == 1) {
        for (int i = 0; i < s_; ++i) r.c[i] = a.c[i] / p_;
        return r;
    }
    for (int b = 1; b < e_; ++b)
        for (int i = 0; i < s_; ++i) r.c[(b - 1) * s_ + i] = a.c[b * s_ + i];
    CElem c0;
    for (int i = 0; i < s_; ++i) c0.c[i] = a.c[i] / p_;
    canonicalize(r);
    return add(r, mul(c0, p_over_y_));
}

CElem ChainRing::div(const CElem& a, const CElem& b) const
{
    int vb = valuation(b);
    if (vb >= n_) {
        if (!is_zero(a)) throw std::domain_error("division by zero");
        return zero();
    }
    if (valuation(a) < vb) throw std::domain_error("inexact division");
    CElem x = a, y = b;
    for (int i = 0; i < vb; ++i) {
        x = div_uniformizer(x);
        y = div_uniformizer(y);
    }
    return mul(x, inv(y));
}

CElem ChainRing::frob(const CElem& a, int k) const
{
    int kk = ((k % s_) + s_) % s_;
    if (kk == 0 || s_ == 1) return a;
    CElem cur = a;
    for (int step = 0; step < kk; ++step) {
        CElem nxt;
        for (int b = 0; b < e_; ++b) {
            std::vector<i128> acc(s_, 0);
            for (int i = 0; i < s_; ++i) {
                i64 c = cur.c[b * s_ + i];
                if (!c) continue;
                for (int t = 0; t < s_; ++t) acc[t] = (acc[t] + static_cast<i128>(c) * frob_cols_[i][t]) % M_;
            }
            for (int t = 0; t < s_; ++t) nxt.c[b * s_ + t] = mod_norm(acc[t], modb_[b]);
        }
        cur = nxt;
    }
    return cur;
}

CElem ChainRing::residue(const CElem& a) const
{
    CElem r;
    for (int i = 0; i < s_; ++i) r.c[i] = a.c[i] % p_;
    return r;
}

CElem ChainRing::teichmuller(const CElem& a) const
{
    CElem r = residue(a);
    if (N_ == 1) return r;
    mpz_class qe;
    mpz_ui_pow_ui(qe.get_mpz_t(), static_cast<unsigned long>(q_), static_cast<unsigned long>(N_ - 1));
    // Raising a pure Galois-ring lift to q^{N-1} kills the 1-unit part.
    return pow(r, qe);
}

CElem ChainRing::reduce_to(const CElem& a, const ChainRing& t) const
{
    if (t.kind_ != kind_ || t.p_ != p_ || t.s_ != s_ || t.n_ > n_ ||
        (kind_ == Kind::Mixed && t.eis_ != eis_))
        throw std::invalid_argument("reduce_to: incompatible rings");
    CElem r;
    for (int b = 0; b < t.e_; ++b)
        for (int i = 0; i < s_; ++i) r.c[b * s_ + i] = a.c[b * s_ + i] % t.modb_[b];
    return r;
}

CElem ChainRing::lift_from(const CElem& a, const ChainRing& src) const
{
    if (src.kind_ != kind_ || src.p_ != p_ || src.s_ != s_ || src.n_ > n_ ||
        (kind_ == Kind::Mixed && src.eis_ != eis_))
        throw std::invalid_argument("lift_from: incompatible rings");
    CElem r;
    for (int b = 0; b < src.e_; ++b)
        for (int i = 0; i < s_; ++i) r.c[b * s_ + i] = a.c[b * s_ + i];
    return r;
}

CElem ChainRing::random(std::mt19937_64& rng) const
{
    CElem r;
    for (int b = 0; b < e_; ++b)
        for (int i = 0; i < s_; ++i)
            r.c[b * s_ + i] = static_cast<i64>(rng() % static_cast<std::uint64_t>(modb_[b]));
    return r;
}

std::uint64_t ChainRing::cardinality() const
{
    std::uint64_t total = 1;
    for (int b = 0; b < e_; ++b)
        for (int i = 0; i < s_; ++i) {
            if (total > (std::uint64_t(1) << 62) / static_cast<std::uint64_t>(modb_[b])) return 0;
            total *= static_cast<std::uint64_t>(modb_[b]);
        }
    return total;
}

CElem ChainRing::element_at(std::uint64_t index) const
{
    CElem r;
    for (int b = 0; b < e_; ++b)
        for (int i = 0; i < s_; ++i) {
            std::uint64_t m = static_cast<std::uint64_t>(modb_[b]);
            r.c[b * s_ + i] = static_cast<i64>(index % m);
            index /= m;
        }
    return r;
}

std::string ChainRing::to_string(const CElem& a) const
{
    std::ostringstream os;
    bool first = true;
    for (int b = 0; b < e_; ++b)
        for (int i = 0; i < s_; ++i) {
            i64 v = a.c[b * s_ + i];
            if (!v) continue;
            if (!first) os << " + ";
            first = false;
            bool has_var = (i > 0) || (b > 0);
            if (v != 1 || !has_var) os << v;
            if (i > 0) os << (v != 1 ? "*" : "") << "x" << (i > 1 ? "^" + std::to_string(i) : "");
            if (b > 0) os << ((v != 1 || i > 0) ? "*" : "") << "y" << (b > 1 ? "^" + std::to_string(b) : "");
        }
    if (first) return "0";
    return os.str();
}

namespace {

class ElemParser {
public:
    ElemParser(const ChainRing& R, const std::string& s) : R_(R), s_(s) {}

    CElem run()
    {
        CElem v = expr();
        skip();
        if (pos_ != s_.size()) fail("trailing characters");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& why) const
    {
        throw std::invalid_argument("cannot parse ring element '" + s_ + "': " + why);
    }
    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    i64 integer()
    {
        skip();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return std::stoll(s_.substr(start, pos_ - start));
    }
    CElem expr()
    {
        CElem v = accept('-') ? R_.neg(term()) : term();
        for (;;) {
            if (accept('+'))
                v = R_.add(v, term());
            else if (accept('-'))
                v = R_.sub(v, term());
            else
                return v;
        }
    }
    CElem term()
    {
        CElem v = factor();
        while (accept('*')) v = R_.mul(v, factor());
        return v;
    }
    CElem factor()
    {
        CElem v = atom();
        if (accept('^')) v = R_.pow(v, mpz_class(static_cast<unsigned long>(integer())));
        return v;
    }
    CElem atom()
    {
        skip();
        if (accept('(')) {
            CElem v = expr();
            if (!accept(')')) fail("missing ')'");
            return v;
        }
        if (accept('x')) return R_.gen();
        if (accept('y') || accept('u') || accept('p') ) {
            char c = s_[pos_ - 1];
            return c == 'p' ? R_.from_int(R_.p()) : R_.uniformizer();
        }
        if (accept('-')) return R_.neg(atom());
        i64 v = integer();
        return R_.from_mpz(mpz_class(std::to_string(v)));
    }

    const ChainRing& R_;
    std::string s_;
    size_t pos_ = 0;
};

}  // namespace

CElem ChainRing::parse(const std::string& text) const
{
    return ElemParser(*this, text).run();
}

}  // namespace wittforge
