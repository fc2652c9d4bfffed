#include "wittforge/witt.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#include "json.hpp"

namespace wittforge {

namespace {

using ZPoly = Poly<IntDomain>;

mpz_class zpow(std::int64_t p, int k)
{
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
    return r;
}

ZPoly exact_divide(const ZPoly& a, const mpz_class& d, const char* what, int n)
{
    ZPoly r;
    r.terms.reserve(a.size());
    for (const auto& [m, c] : a.terms) {
        if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t())) {
            std::ostringstream os;
            os << "inexact division by p^" << n << " in " << what << " polynomial " << n;
            throw std::logic_error(os.str());
        }
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
        r.terms.emplace(m, q);
    }
    return r;
}

// Tracks S^{p^k} for a growing k by multiplying with the base polynomial.
class PowerLadder {
public:
    PowerLadder(std::int64_t p, ZPoly base) : p_(p), base_(std::move(base))
    {
        levels_.push_back(base_);
    }
    const ZPoly& get(int k)
    {
        IntDomain Z;
        while (static_cast<int>(levels_.size()) <= k) {
            ZPoly cur = levels_.back();
            // multiply p^{j} - p^{j-1} more times by the base
            long steps = static_cast<long>(zpow(p_, static_cast<int>(levels_.size())).get_si() -
                                           zpow(p_, static_cast<int>(levels_.size()) - 1).get_si());
            for (long s = 0; s < steps; ++s) cur = poly_mul(Z, cur, base_);
            levels_.push_back(std::move(cur));
        }
        return levels_[k];
    }

private:
    std::int64_t p_;
    ZPoly base_;
    std::vector<ZPoly> levels_;
};

enum class Kind { Sum, Prod, Neg, Frob };

std::vector<ZPoly> build_family(std::int64_t p, int count, Kind kind)
{
    IntDomain Z;
    std::vector<ZPoly> out;
    std::vector<PowerLadder> ladders;
    for (int n = 0; n < count; ++n) {
        ZPoly target;
        switch (kind) {
        case Kind::Sum:
            target = poly_add(Z, ghost_poly(p, n, 2, 0), ghost_poly(p, n, 2, 1));
            break;
        case Kind::Prod:
            target = poly_mul(Z, ghost_poly(p, n, 2, 0), ghost_poly(p, n, 2, 1));
            break;
        case Kind::Neg:
            target = poly_scale(Z, ghost_poly(p, n), mpz_class(-1));
            break;
        case Kind::Frob:
            target = ghost_poly(p, n + 1);
            break;
        }
        for (int i = 0; i < n; ++i)
            target = poly_sub(Z, target, poly_scale(Z, ladders[i].get(n - i), zpow(p, i)));
        const char* what = kind == Kind::Sum ? "sum" : kind == Kind::Prod ? "product" : kind == Kind::Neg ? "negation" : "Frobenius";
        ZPoly Pn = exact_divide(target, zpow(p, n), what, n);
        ladders.emplace_back(p, Pn);
        out.push_back(std::move(Pn));
    }
    return out;
}

}  // namespace

Poly<IntDomain> ghost_poly(std::int64_t p, int n, int stride, int offset)
{
    IntDomain Z;
    Poly<IntDomain> r;
    for (int i = 0; i <= n; ++i) {
        Mono m;
        mpz_class e = zpow(p, n - i);
        if (e > 255) throw std::overflow_error("ghost polynomial exponent exceeds 255");
        m.set(stride * i + offset, static_cast<int>(e.get_si()));
        poly_add_term(Z, r, m, zpow(p, i));
    }
    return r;
}

WittStructureTable build_witt_table(std::int64_t p, int depth)
{
    if (!is_prime_i64(p)) throw std::invalid_argument("build_witt_table: p must be prime");
    if (depth < 1) throw std::invalid_argument("build_witt_table: depth must be >= 1");
    if (2 * depth > Mono::kMaxVars) throw std::invalid_argument("build_witt_table: depth too large");
    WittStructureTable t;
    t.p = p;
    t.depth = depth;
    t.sum = build_family(p, depth, Kind::Sum);
    t.prod = build_family(p, depth, Kind::Prod);
    t.neg = build_family(p, depth, Kind::Neg);
    t.frob = build_family(p, depth - 1, Kind::Frob);
    return t;
}

TableCheck verify_witt_table(const WittStructureTable& t)
{
    IntDomain Z;
    TableCheck res;
    auto check_family = [&](const std::vector<ZPoly>& fam, int count, Kind kind, const char* name) {
        std::vector<PowerLadder> ladders;
        for (int n = 0; n < count; ++n) {
            ladders.emplace_back(t.p, fam[n]);
            ZPoly lhs;
            for (int i = 0; i <= n; ++i) lhs = poly_add(Z, lhs, poly_scale(Z, ladders[i].get(n - i), zpow(t.p, i)));
            ZPoly rhs;
            switch (kind) {
            case Kind::Sum: rhs = poly_add(Z, ghost_poly(t.p, n, 2, 0), ghost_poly(t.p, n, 2, 1)); break;
            case Kind::Prod: rhs = poly_mul(Z, ghost_poly(t.p, n, 2, 0), ghost_poly(t.p, n, 2, 1)); break;
            case Kind::Neg: rhs = poly_scale(Z, ghost_poly(t.p, n), mpz_class(-1)); break;
            case Kind::Frob: rhs = ghost_poly(t.p, n + 1); break;
            }
            if (!poly_equal(Z, lhs, rhs)) {
                res.ok = false;
                res.detail += std::string(name) + "[" + std::to_string(n) + "] ghost identity fails; ";
            }
        }
    };
    check_family(t.sum, t.depth, Kind::Sum, "sum");
    check_family(t.prod, t.depth, Kind::Prod, "prod");
    check_family(t.neg, t.depth, Kind::Neg, "neg");
    check_family(t.frob, t.depth - 1, Kind::Frob, "frob");
    return res;
}

TableCheck verify_frobenius_collapse(const WittStructureTable& t)
{
    IntDomain Z;
    TableCheck res;
    mpz_class P = t.p;
    for (int n = 0; n + 1 < t.depth; ++n) {
        ZPoly reduced;
        for (const auto& [m, c] : t.frob[n].terms) {
            mpz_class r = c % P;
            if (r < 0) r += P;
            if (r != 0) reduced.terms.emplace(m, r);
        }
        Mono xn;
        xn.set(n, static_cast<int>(t.p));
        ZPoly expect;
        expect.terms.emplace(xn, mpz_class(1));
        if (!poly_equal(Z, reduced, expect)) {
            res.ok = false;
            res.detail += "F_" + std::to_string(n) + " mod p is not x_n^p; ";
        }
    }
    return res;
}

namespace {

nlohmann::json family_json(const std::vector<ZPoly>& fam)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& P : fam) {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& [m, c] : P.sorted()) {
            nlohmann::json ex = nlohmann::json::array();
            for (int v = 0; v < Mono::kMaxVars; ++v)
                if (int e = m.exp(v)) ex.push_back({v, e});
            terms.push_back({c.get_str(), ex});
        }
        arr.push_back(terms);
    }
    return arr;
}

std::vector<ZPoly> family_from_json(const nlohmann::json& arr)
{
    std::vector<ZPoly> fam;
    for (const auto& terms : arr) {
        ZPoly P;
        for (const auto& t : terms) {
            Mono m;
            for (const auto& ve : t[1]) m.set(ve[0].get<int>(), ve[1].get<int>());
            P.terms.emplace(m, mpz_class(t[0].get<std::string>()));
        }
        fam.push_back(std::move(P));
    }
    return fam;
}

}  // namespace

std::string table_to_json(const WittStructureTable& t)
{
    nlohmann::json j;
    j["p"] = t.p;
    j["depth"] = t.depth;
    j["sum"] = family_json(t.sum);
    j["prod"] = family_json(t.prod);
    j["neg"] = family_json(t.neg);
    j["frob"] = family_json(t.frob);
    return j.dump();
}

WittStructureTable table_from_json(const std::string& text)
{
    auto j = nlohmann::json::parse(text);
    WittStructureTable t;
    t.p = j.at("p").get<std::int64_t>();
    t.depth = j.at("depth").get<int>();
    t.sum = family_from_json(j.at("sum"));
    t.prod = family_from_json(j.at("prod"));
    t.neg = family_from_json(j.at("neg"));
    t.frob = family_from_json(j.at("frob"));
    if (static_cast<int>(t.sum.size()) != t.depth || static_cast<int>(t.prod.size()) != t.depth ||
        static_cast<int>(t.neg.size()) != t.depth || static_cast<int>(t.frob.size()) != t.depth - 1)
        throw std::invalid_argument("malformed Witt table");
    return t;
}

std::shared_ptr<const WittStructureTable> witt_table(std::int64_t p, int depth)
{
    static std::mutex mu;
    static std::map<std::int64_t, std::shared_ptr<const WittStructureTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(p);
    if (it != cache.end() && it->second->depth >= depth) return it->second;

    std::shared_ptr<const WittStructureTable> result;
    const char* dir = std::getenv("WITTFORGE_CACHE_DIR");
    std::filesystem::path file;
    if (dir && *dir) {
        file = std::filesystem::path(dir) / ("witt_p" + std::to_string(p) + "_m" + std::to_string(depth) + ".json");
        std::ifstream in(file);
        if (in) {
            std::stringstream ss;
            ss << in.rdbuf();
            try {
                auto t = table_from_json(ss.str());
                if (t.p == p && t.depth == depth && verify_witt_table(t).ok)
                    result = std::make_shared<const WittStructureTable>(std::move(t));
            } catch (const std::exception&) {
                result.reset();
            }
        }
    }
    if (!result) {
        result = std::make_shared<const WittStructureTable>(build_witt_table(p, depth));
        if (!file.empty()) {
            std::error_code ec;
            std::filesystem::create_directories(file.parent_path(), ec);
            std::ofstream out(file);
            if (out) out << table_to_json(*result);
        }
    }
    cache[p] = result;
    return result;
}

std::vector<NumberField::Elem> constant_coords(const NumberField& K, std::int64_t q, const NumberField::Elem& c,
                                               int length)
{
    std::vector<NumberField::Elem> x;
    const auto pi = K.pi();
    for (int n = 0; n < length; ++n) {
        NumberField::Elem acc = c, piw = K.one();
        for (int i = 0; i < n; ++i) {
            NumberField::Elem t = x[i];
            for (int k = 0; k < n - i; ++k) t = K.pow(t, static_cast<unsigned long>(q));
            acc = K.sub(acc, K.mul(piw, t));
            piw = K.mul(piw, pi);
        }
        NumberField::Elem xn = K.mul(acc, K.pow(K.pi_inv(), static_cast<unsigned long>(n)));
        if (!K.is_integral(xn)) throw std::logic_error("constant Witt coordinate is not integral");
        x.push_back(std::move(xn));
    }
    return x;
}

std::vector<mpq_class> artin_hasse_series(std::int64_t p, int N)
{
    if (N < 1) throw std::invalid_argument("artin_hasse_series: N must be >= 1");
    std::vector<mpq_class> l(N, 0), e(N, 0);
    mpz_class pk = 1;
    for (std::int64_t d = 1, i = 0; d < N; d *= p, ++i) {
        l[d] = mpq_class(1, pk);
        l[d].canonicalize();
        pk *= p;
    }
    e[0] = 1;
    for (int k = 1; k < N; ++k) {
        mpq_class acc = 0;
        for (int j = 1; j <= k; ++j)
            if (l[j] != 0) acc += j * l[j] * e[k - j];
        e[k] = acc / k;
        e[k].canonicalize();
        if (mpz_divisible_ui_p(e[k].get_den_mpz_t(), static_cast<unsigned long>(p)))
            throw std::logic_error("Artin-Hasse coefficient is not p-integral");
    }
    return e;
}

}  // namespace wittforge
