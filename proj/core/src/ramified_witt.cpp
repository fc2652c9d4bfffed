#include "wittforge/ramified_witt.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace wittforge {

namespace {

KPoly divide_by_pi_power(const NumberField& K, const KPoly& a, int n, const char* what)
{
    const auto f = K.pow(K.pi_inv(), static_cast<unsigned long>(n));
    KPoly r;
    r.terms.reserve(a.size());
    for (const auto& [m, c] : a.terms) {
        auto v = K.mul(c, f);
        if (!K.is_integral(v)) {
            std::ostringstream os;
            os << "inexact division by pi^" << n << " in ramified " << what << " polynomial";
            throw std::logic_error(os.str());
        }
        r.terms.emplace(m, std::move(v));
    }
    return r;
}

// S^{q^k} for growing k, by repeated multiplication with S.
class Ladder {
public:
    Ladder(const NumberField& K, std::int64_t q, KPoly base) : K_(K), q_(q), base_(std::move(base)) { lv_.push_back(base_); }
    const KPoly& get(int k)
    {
        while (static_cast<int>(lv_.size()) <= k) {
            const std::int64_t steps = ipow(q_, static_cast<int>(lv_.size())) - ipow(q_, static_cast<int>(lv_.size()) - 1);
            KPoly cur = lv_.back();
            for (std::int64_t s = 0; s < steps; ++s) cur = poly_mul(K_, cur, base_);
            lv_.push_back(std::move(cur));
        }
        return lv_[k];
    }

private:
    const NumberField& K_;
    std::int64_t q_;
    KPoly base_;
    std::vector<KPoly> lv_;
};

enum class Kind { Sum, Prod, Neg, Frob };

KPoly ghost_target(const BaseDVR& b, const NumberField& K, int n, Kind kind)
{
    switch (kind) {
    case Kind::Sum: return poly_add(K, ramified_ghost_poly(b, n, 2, 0), ramified_ghost_poly(b, n, 2, 1));
    case Kind::Prod: return poly_mul(K, ramified_ghost_poly(b, n, 2, 0), ramified_ghost_poly(b, n, 2, 1));
    case Kind::Neg: return poly_scale(K, ramified_ghost_poly(b, n), K.from_int(-1));
    case Kind::Frob: return ramified_ghost_poly(b, n + 1);
    }
    return {};
}

const char* kind_name(Kind k)
{
    switch (k) {
    case Kind::Sum: return "sum";
    case Kind::Prod: return "product";
    case Kind::Neg: return "negation";
    case Kind::Frob: return "Frobenius";
    }
    return "";
}

// Solves sum_{i<=n} pi^i P_i^{q^{n-i}} = target_n for P_n.
std::vector<KPoly> solve_family(const NumberField& K, std::int64_t q, int count,
                                const std::function<KPoly(int)>& target, const char* what)
{
    std::vector<KPoly> out;
    std::vector<Ladder> ladders;
    ladders.reserve(count);
    auto piw = K.one();
    for (int n = 0; n < count; ++n) {
        KPoly t = target(n);
        auto pii = K.one();
        for (int i = 0; i < n; ++i) {
            t = poly_sub(K, t, poly_scale(K, ladders[i].get(n - i), pii));
            pii = K.mul(pii, K.pi());
        }
        KPoly Pn = divide_by_pi_power(K, t, n, what);
        ladders.emplace_back(K, q, Pn);
        out.push_back(std::move(Pn));
    }
    return out;
}

TableCheck check_family(const NumberField& K, std::int64_t q, const std::vector<KPoly>& fam,
                        const std::function<KPoly(int)>& target, const std::string& name)
{
    TableCheck res;
    std::vector<Ladder> ladders;
    ladders.reserve(fam.size());
    for (std::size_t n = 0; n < fam.size(); ++n) {
        ladders.emplace_back(K, q, fam[n]);
        for (const auto& [m, c] : fam[n].terms)
            if (!K.is_integral(c)) {
                res.ok = false;
                res.detail += name + "[" + std::to_string(n) + "] has a non-integral coefficient; ";
                break;
            }
        KPoly lhs;
        auto pii = K.one();
        for (std::size_t i = 0; i <= n; ++i) {
            lhs = poly_add(K, lhs, poly_scale(K, ladders[i].get(static_cast<int>(n - i)), pii));
            pii = K.mul(pii, K.pi());
        }
        if (!poly_equal(K, lhs, target(static_cast<int>(n)))) {
            res.ok = false;
            res.detail += name + "[" + std::to_string(n) + "] ghost identity fails; ";
        }
    }
    return res;
}

void merge(TableCheck& into, const TableCheck& c)
{
    into.ok = into.ok && c.ok;
    into.detail += c.detail;
}

void check_base(const BaseDVR& b)
{
    if (!is_prime_i64(b.p)) throw std::invalid_argument("base DVR: p must be prime");
    if (b.f < 1) throw std::invalid_argument("base DVR: f must be >= 1");
    (void)b.field();  // validates the Eisenstein property
}

}  // namespace

std::string BaseDVR::describe() const
{
    std::ostringstream os;
    os << "O(p=" << p << ",f=" << f << ",e=" << e() << ",E=[";
    for (std::size_t i = 0; i < eisenstein.size(); ++i) os << (i ? "," : "") << eisenstein[i];
    os << "])";
    return os.str();
}

KPoly ramified_ghost_poly(const BaseDVR& base, int n, int stride, int offset)
{
    NumberField K = base.field();
    KPoly r;
    auto pii = K.one();
    const std::int64_t q = base.q();
    for (int i = 0; i <= n; ++i) {
        Mono m;
        const std::int64_t e = ipow(q, n - i);
        if (e > 255) throw std::overflow_error("ramified ghost exponent exceeds 255");
        m.set(stride * i + offset, static_cast<int>(e));
        poly_add_term(K, r, m, pii);
        pii = K.mul(pii, K.pi());
    }
    return r;
}

RamifiedWittStructureTable build_ramified_table(const BaseDVR& base, int depth)
{
    check_base(base);
    if (depth < 1) throw std::invalid_argument("ramified table: depth must be >= 1");
    NumberField K = base.field();
    const std::int64_t q = base.q();
    RamifiedWittStructureTable t;
    t.base = base;
    t.depth = depth;
    for (Kind k : {Kind::Sum, Kind::Prod, Kind::Neg, Kind::Frob}) {
        const int count = k == Kind::Frob ? depth - 1 : depth;
        auto fam = solve_family(K, q, count, [&](int n) { return ghost_target(base, K, n, k); }, kind_name(k));
        switch (k) {
        case Kind::Sum: t.sum = std::move(fam); break;
        case Kind::Prod: t.prod = std::move(fam); break;
        case Kind::Neg: t.neg = std::move(fam); break;
        case Kind::Frob: t.frob = std::move(fam); break;
        }
    }
    return t;
}

std::shared_ptr<const RamifiedWittStructureTable> ramified_table(const BaseDVR& base, int depth)
{
    static std::mutex mu;
    static std::map<std::string, std::shared_ptr<const RamifiedWittStructureTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = base.describe();
    auto it = cache.find(key);
    if (it != cache.end() && it->second->depth >= depth) return it->second;
    auto t = std::make_shared<const RamifiedWittStructureTable>(build_ramified_table(base, depth));
    cache[key] = t;
    return t;
}

TableCheck verify_ramified_table(const RamifiedWittStructureTable& t)
{
    NumberField K = t.base.field();
    const std::int64_t q = t.base.q();
    TableCheck res;
    merge(res, check_family(K, q, t.sum, [&](int n) { return ghost_target(t.base, K, n, Kind::Sum); }, "sum"));
    merge(res, check_family(K, q, t.prod, [&](int n) { return ghost_target(t.base, K, n, Kind::Prod); }, "prod"));
    merge(res, check_family(K, q, t.neg, [&](int n) { return ghost_target(t.base, K, n, Kind::Neg); }, "neg"));
    merge(res, check_family(K, q, t.frob, [&](int n) { return ghost_target(t.base, K, n, Kind::Frob); }, "frob"));
    return res;
}

TableCheck verify_ramified_frobenius_collapse(const RamifiedWittStructureTable& t)
{
    NumberField K = t.base.field();
    TableCheck res;
    for (std::size_t n = 0; n < t.frob.size(); ++n) {
        // O/pi = F_p, so reducing mod pi is the residue of each coefficient
        std::map<std::pair<std::uint64_t, std::uint64_t>, std::int64_t> red;
        for (const auto& [m, c] : t.frob[n].terms) {
            auto r = K.residue(c);
            if (r) red[{m.hi, m.lo}] = r;
        }
        Mono xn;
        xn.set(static_cast<int>(n), static_cast<int>(t.base.q()));
        if (red.size() != 1 || red.begin()->first != std::make_pair(xn.hi, xn.lo) || red.begin()->second != 1) {
            res.ok = false;
            res.detail += "F_pi[" + std::to_string(n) + "] mod pi is not x_n^q; ";
        }
    }
    return res;
}

TableCheck compare_with_classical(const RamifiedWittStructureTable& t)
{
    TableCheck res;
    if (t.base.e() != 1 || t.base.f != 1) {
        res.ok = false;
        res.detail = "not the base Z_p";
        return res;
    }
    auto C = witt_table(t.base.p, t.depth);
    IntDomain Z;
    auto to_int = [&](const KPoly& P) {
        Poly<IntDomain> r;
        for (const auto& [m, c] : P.terms) {
            if (c[0].get_den() != 1) throw std::logic_error("non-integer coefficient over Z_p");
            r.terms.emplace(m, c[0].get_num());
        }
        return r;
    };
    for (int n = 0; n < t.depth; ++n) {
        if (!poly_equal(Z, to_int(t.sum[n]), C->sum[n]) || !poly_equal(Z, to_int(t.prod[n]), C->prod[n]) ||
            !poly_equal(Z, to_int(t.neg[n]), C->neg[n])) {
            res.ok = false;
            res.detail += "level " + std::to_string(n) + " differs from the classical table; ";
        }
    }
    return res;
}

namespace {

KPoly classical_ghost_over_K(const NumberField& K, std::int64_t p, int n)
{
    KPoly r;
    mpz_class pi = 1;
    for (int i = 0; i <= n; ++i) {
        Mono m;
        const std::int64_t e = ipow(p, n - i);
        if (e > 255) throw std::overflow_error("ghost exponent exceeds 255");
        m.set(i, static_cast<int>(e));
        poly_add_term(K, r, m, K.from_int(pi));
        pi *= p;
    }
    return r;
}

}  // namespace

std::shared_ptr<const MuTable> mu_table(const BaseDVR& base, int depth)
{
    static std::mutex mu;
    static std::map<std::string, std::shared_ptr<const MuTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = base.describe();
    auto it = cache.find(key);
    if (it != cache.end() && it->second->depth >= depth) return it->second;
    check_base(base);
    if (base.f * (depth - 1) + 1 > Mono::kMaxVars) throw std::invalid_argument("mu table: depth too large");
    NumberField K = base.field();
    auto t = std::make_shared<MuTable>();
    t->base = base;
    t->depth = depth;
    t->mu = solve_family(K, base.q(), depth, [&](int n) { return classical_ghost_over_K(K, base.p, base.f * n); }, "mu");
    cache[key] = t;
    return t;
}

TableCheck verify_mu_table(const MuTable& t)
{
    NumberField K = t.base.field();
    return check_family(K, t.base.q(), t.mu,
                        [&](int n) { return classical_ghost_over_K(K, t.base.p, t.base.f * n); }, "mu");
}

WOk make_WO_of_k(const BaseDVR& base, int s, int level)
{
    check_base(base);
    if (s % base.f != 0) throw std::invalid_argument("residue field does not contain F_q");
    if (level < 1) throw std::invalid_argument("level must be >= 1");
    WOk r;
    r.base = base;
    r.sigma_pi_power = base.f;
    r.ring = base.e() == 1 ? ChainRing::galois(base.p, s, level) : ChainRing::ramified(base.p, s, base.eisenstein, level);
    return r;
}

}  // namespace wittforge
