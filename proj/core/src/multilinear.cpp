#include "wittforge/multilinear.hpp"

#include <algorithm>
#include <stdexcept>

namespace wittforge {

namespace {

const CoeffRing& common_ring(const std::vector<DieudonneModule>& sources, const DieudonneModule& target)
{
    for (const auto& D : sources)
        if (!D.ring->same_as(*target.ring)) throw std::invalid_argument("multilinear map: coefficient rings differ");
    return *target.ring;
}

PVec unit_vec(const CoeffRing& R, int h, int i)
{
    PVec e(h, R.zero());
    e[i] = R.one();
    return e;
}

PVec column(const PMat& m, int j)
{
    PVec v(m.rows);
    for (int i = 0; i < m.rows; ++i) v[i] = m(i, j);
    return v;
}

void append_diff(const CoeffRing& R, PVec& out, const PVec& a, const PVec& b)
{
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(R.sub(a[i], b[i]));
}

bool all_zero(const CoeffRing& R, const PVec& v)
{
    return std::all_of(v.begin(), v.end(), [&R](const PElem& x) { return R.is_zero(x); });
}

int log_p(std::int64_t m, std::int64_t p)
{
    int k = 0;
    while (m > 1) {
        m /= p;
        ++k;
    }
    return k;
}

bool same_module(const DieudonneModule& a, const DieudonneModule& b)
{
    return a.h == b.h && a.ring->same_as(*b.ring) && mat_eq(*a.ring, a.F.A, b.F.A) && mat_eq(*a.ring, a.V.A, b.V.A);
}

}  // namespace

std::size_t tuple_count(const std::vector<DieudonneModule>& sources)
{
    std::size_t n = 1;
    for (const auto& D : sources) n *= static_cast<std::size_t>(D.h);
    return n;
}

std::vector<int> tuple_at(const std::vector<DieudonneModule>& sources, std::size_t index)
{
    std::vector<int> t(sources.size());
    for (int k = static_cast<int>(sources.size()) - 1; k >= 0; --k) {
        t[k] = static_cast<int>(index % sources[k].h);
        index /= sources[k].h;
    }
    return t;
}

namespace {
std::size_t tuple_index(const std::vector<DieudonneModule>& sources, const std::vector<int>& t)
{
    std::size_t idx = 0;
    for (std::size_t k = 0; k < sources.size(); ++k) idx = idx * sources[k].h + t[k];
    return idx;
}
}  // namespace

MultilinearMap zero_multilinear(const std::vector<DieudonneModule>& sources, const DieudonneModule& target)
{
    const auto& R = common_ring(sources, target);
    MultilinearMap m{sources, target, {}};
    m.tensor.assign(tuple_count(sources), PVec(target.h, R.zero()));
    return m;
}

PVec ml_eval(const MultilinearMap& m, const std::vector<PVec>& args)
{
    const auto& R = *m.target.ring;
    if (args.size() != m.sources.size()) throw std::invalid_argument("ml_eval: wrong number of arguments");
    PVec out(m.target.h, R.zero());
    const std::size_t n = m.tensor.size();
    for (std::size_t idx = 0; idx < n; ++idx) {
        auto t = tuple_at(m.sources, idx);
        PElem c = R.one();
        for (std::size_t k = 0; k < t.size() && !R.is_zero(c); ++k) c = R.mul(c, args[k][t[k]]);
        if (R.is_zero(c)) continue;
        for (int i = 0; i < m.target.h; ++i) out[i] = R.add(out[i], R.mul(c, m.tensor[idx][i]));
    }
    return out;
}

PVec v_condition_residuals(const MultilinearMap& m)
{
    const auto& R = common_ring(m.sources, m.target);
    PVec out;
    for (std::size_t idx = 0; idx < m.tensor.size(); ++idx) {
        auto t = tuple_at(m.sources, idx);
        std::vector<PVec> args;
        for (std::size_t k = 0; k < t.size(); ++k) args.push_back(column(m.sources[k].V.A, t[k]));
        append_diff(R, out, ml_eval(m, args), sl_apply(R, m.target.V, m.tensor[idx]));
    }
    return out;
}

namespace {
// l(m_1, .., F m_k, .., m_r) - F l(V m_1, .., m_k, .., V m_r)
PVec f_residual(const MultilinearMap& m, const std::vector<PVec>& ms, int k)
{
    const auto& R = *m.target.ring;
    std::vector<PVec> a = ms, b = ms;
    a[k] = sl_apply(R, m.sources[k].F, ms[k]);
    for (std::size_t t = 0; t < ms.size(); ++t)
        if (static_cast<int>(t) != k) b[t] = sl_apply(R, m.sources[t].V, ms[t]);
    PVec out;
    append_diff(R, out, ml_eval(m, a), sl_apply(R, m.target.F, ml_eval(m, b)));
    return out;
}
}  // namespace

PVec f_condition_residuals(const MultilinearMap& m)
{
    const auto& R = common_ring(m.sources, m.target);
    PVec out;
    for (int k = 0; k < m.arity(); ++k)
        for (std::size_t idx = 0; idx < m.tensor.size(); ++idx) {
            auto t = tuple_at(m.sources, idx);
            std::vector<PVec> ms;
            for (std::size_t s = 0; s < t.size(); ++s) ms.push_back(unit_vec(R, m.sources[s].h, t[s]));
            auto r = f_residual(m, ms, k);
            out.insert(out.end(), r.begin(), r.end());
        }
    return out;
}

bool check_V_condition(const MultilinearMap& m)
{
    return all_zero(*m.target.ring, v_condition_residuals(m));
}

bool check_F_conditions(const MultilinearMap& m, int samples, std::uint64_t seed)
{
    const auto& R = *m.target.ring;
    if (!all_zero(R, f_condition_residuals(m))) return false;
    std::mt19937_64 rng(seed);
    for (int s = 0; s < samples; ++s) {
        std::vector<PVec> ms;
        for (const auto& D : m.sources) {
            PVec v(D.h);
            for (auto& x : v) x = R.random(rng);
            ms.push_back(v);
        }
        for (int k = 0; k < m.arity(); ++k)
            if (!all_zero(R, f_residual(m, ms, k))) return false;
    }
    return true;
}

Flavor parse_flavor(const std::string& s)
{
    if (s == "all") return Flavor::All;
    if (s == "sym") return Flavor::Sym;
    if (s == "alt") return Flavor::Alt;
    throw std::invalid_argument("unknown flavor: " + s);
}

KernelResult additive_kernel(const CoeffRing& R, int unknowns, const std::function<PVec(const PVec&)>& map, int budget)
{
    const int fs = R.flat_size();
    const std::int64_t M = R.flat_modulus();
    const int N = log_p(M, R.p());
    const int cols = unknowns * fs;
    if (cols > budget) throw std::runtime_error("solution space exceeds the budget");
    KernelResult res;
    if (cols == 0) return res;

    std::vector<std::vector<std::int64_t>> columns;
    PVec x(unknowns, R.zero());
    for (int u = 0; u < unknowns; ++u)
        for (int t = 0; t < fs; ++t) {
            std::vector<std::int64_t> e(fs, 0);
            e[t] = 1;
            x[u] = R.unflatten(e);
            std::vector<std::int64_t> col;
            for (const auto& y : map(x)) {
                auto f = R.flatten(y);
                col.insert(col.end(), f.begin(), f.end());
            }
            columns.push_back(std::move(col));
            x[u] = R.zero();
        }
    auto Z = ChainRing::galois(R.p(), 1, N);
    const int rows = std::max<int>(1, static_cast<int>(columns[0].size()));
    CMat A = mat_zero(*Z, rows, cols);
    for (int j = 0; j < cols; ++j)
        for (std::size_t i = 0; i < columns[j].size(); ++i) A(static_cast<int>(i), j) = Z->from_int(columns[j][i]);
    auto sf = smith_form(*Z, A);
    const int diag_len = static_cast<int>(sf.diag.size());
    for (int i = 0; i < cols; ++i) {
        const int v = i < diag_len ? std::min(sf.diag[i], N) : N;
        if (v == 0) continue;
        const std::int64_t scale = ipow(R.p(), N - v);
        PVec g(unknowns);
        for (int u = 0; u < unknowns; ++u) {
            std::vector<std::int64_t> f(fs);
            for (int t = 0; t < fs; ++t) f[t] = static_cast<std::int64_t>((static_cast<__int128>(sf.V(u * fs + t, i).c[0]) * scale) % M);
            g[u] = R.unflatten(f);
        }
        res.generators.push_back(std::move(g));
        res.orders.push_back(v);
        res.log_size += v;
    }
    return res;
}

namespace {
MultilinearMap from_unknowns(const std::vector<DieudonneModule>& sources, const DieudonneModule& target, const PVec& x)
{
    MultilinearMap m{sources, target, {}};
    const int h0 = target.h;
    for (std::size_t idx = 0; idx < tuple_count(sources); ++idx)
        m.tensor.emplace_back(x.begin() + idx * h0, x.begin() + (idx + 1) * h0);
    return m;
}
}  // namespace

PVec flavor_residuals(const MultilinearMap& m, Flavor flavor)
{
    const auto& R = *m.target.ring;
    PVec out;
    if (flavor == Flavor::All) return out;
    for (std::size_t idx = 0; idx < m.tensor.size(); ++idx) {
        auto t = tuple_at(m.sources, idx);
        for (int k = 0; k + 1 < m.arity(); ++k) {
            if (flavor == Flavor::Alt && t[k] == t[k + 1]) {
                out.insert(out.end(), m.tensor[idx].begin(), m.tensor[idx].end());
                continue;
            }
            auto s = t;
            std::swap(s[k], s[k + 1]);
            const auto& other = m.tensor[tuple_index(m.sources, s)];
            for (int i = 0; i < m.target.h; ++i)
                out.push_back(flavor == Flavor::Sym ? R.sub(m.tensor[idx][i], other[i]) : R.add(m.tensor[idx][i], other[i]));
        }
    }
    return out;
}

LSpace solve_L_space(const std::vector<DieudonneModule>& sources, const DieudonneModule& target, Flavor flavor,
                     bool impose_f, int budget)
{
    const auto& R = common_ring(sources, target);
    if (flavor != Flavor::All)
        for (const auto& D : sources)
            if (!same_module(D, sources[0])) throw std::invalid_argument("symmetric and alternating maps need equal sources");
    const int unknowns = static_cast<int>(tuple_count(sources)) * target.h;
    auto map = [&](const PVec& x) {
        auto m = from_unknowns(sources, target, x);
        PVec out = v_condition_residuals(m);
        if (impose_f) {
            auto f = f_condition_residuals(m);
            out.insert(out.end(), f.begin(), f.end());
        }
        auto s = flavor_residuals(m, flavor);
        out.insert(out.end(), s.begin(), s.end());
        return out;
    };
    auto ker = additive_kernel(R, unknowns, map, budget);
    LSpace L;
    for (const auto& g : ker.generators) L.generators.push_back(from_unknowns(sources, target, g));
    L.orders = ker.orders;
    L.log_size = ker.log_size;
    return L;
}

HomSpace solve_hom_space(const DieudonneModule& S, const DieudonneModule& N, int budget)
{
    if (!S.ring->same_as(*N.ring)) throw std::invalid_argument("hom space: coefficient rings differ");
    const auto& R = *N.ring;
    const int rows = N.h, cols = S.h;
    auto to_mat = [&](const PVec& x) {
        PMat G(rows, cols, R.zero());
        G.a = x;
        return G;
    };
    auto map = [&](const PVec& x) {
        PMat G = to_mat(x);
        PMat a = mat_sub(R, mat_mul(R, G, S.F.A), mat_mul(R, N.F.A, mat_sigma(R, G, 1)));
        PMat b = mat_sub(R, mat_mul(R, G, S.V.A), mat_mul(R, N.V.A, mat_sigma(R, G, -1)));
        PVec out = a.a;
        out.insert(out.end(), b.a.begin(), b.a.end());
        return out;
    };
    auto ker = additive_kernel(R, rows * cols, map, budget);
    HomSpace H;
    for (const auto& g : ker.generators) H.generators.push_back(to_mat(g));
    H.orders = ker.orders;
    H.log_size = ker.log_size;
    return H;
}

ModuleUniversalReport module_universal_property(const DieudonneModule& D, int j, const DieudonneModule& N)
{
    const auto& R = *D.ring;
    auto E = exterior_power(D, j);
    std::vector<DieudonneModule> srcs(j, D);
    ModuleUniversalReport rep;
    auto hom = solve_hom_space(E.module, N);
    rep.hom_log = hom.log_size;
    rep.alt_log = solve_L_space(srcs, N, Flavor::Alt, true).log_size;
    rep.alt_v_only_log = solve_L_space(srcs, N, Flavor::Alt, false).log_size;
    rep.composition_in_alt = true;
    for (const auto& G : hom.generators) {
        // l = g o lambda, lambda(m_1, .., m_j) = m_1 ^ .. ^ m_j
        MultilinearMap m = zero_multilinear(srcs, N);
        for (std::size_t idx = 0; idx < m.tensor.size(); ++idx) {
            auto t = tuple_at(srcs, idx);
            std::vector<PVec> vecs;
            for (int s : t) vecs.push_back(unit_vec(R, D.h, s));
            m.tensor[idx] = mat_vec(R, G, wedge(R, D.h, vecs));
        }
        if (!check_V_condition(m) || !all_zero(R, f_condition_residuals(m)) ||
            !all_zero(R, flavor_residuals(m, Flavor::Alt)))
            rep.composition_in_alt = false;
    }
    return rep;
}

FConditionLiftReport f_condition_lift(const std::vector<DieudonneModule>& sources, const DieudonneModule& target, int level)
{
    FConditionLiftReport rep;
    rep.level = level;
    rep.buffer = target.level() - level;
    if (rep.buffer < 0) throw std::invalid_argument("f_condition_lift: level above the modules' level");
    std::vector<DieudonneModule> low;
    for (const auto& D : sources) low.push_back(reduce_module(D, level));
    DieudonneModule low_t = reduce_module(target, level);
    const auto& Rlow = *low_t.ring;

    auto top = solve_L_space(sources, target, Flavor::All, false);
    for (const auto& g : top.generators) {
        MultilinearMap m{low, low_t, {}};
        for (const auto& v : g.tensor) {
            PVec w;
            for (const auto& x : v) w.push_back(target.ring->reduce_to(x, Rlow));
            m.tensor.push_back(std::move(w));
        }
        ++rep.lifted_generators;
        if (!all_zero(Rlow, f_condition_residuals(m))) ++rep.lifted_failures;
    }
    auto direct = solve_L_space(low, low_t, Flavor::All, false);
    rep.direct_v_only_log = direct.log_size;
    for (const auto& g : direct.generators) {
        ++rep.direct_generators;
        if (!all_zero(Rlow, f_condition_residuals(g))) ++rep.direct_failures;
    }
    rep.direct_full_log = solve_L_space(low, low_t, Flavor::All, true).log_size;
    return rep;
}

bool is_valid(const IndexVector& v)
{
    if (v.d.empty() || v.M < 1) return false;
    return *std::min_element(v.d.begin(), v.d.end()) == 0 && *std::max_element(v.d.begin(), v.d.end()) < v.M;
}

IndexVector delta(const IndexVector& v)
{
    if (!is_valid(v)) throw std::invalid_argument("index vector must have minimum 0 and entries below M");
    const int d = *std::max_element(v.d.begin(), v.d.end());
    IndexVector r{v.d, v.M};
    for (auto& x : r.d) x = d - x;
    return r;
}

std::vector<IndexVector> all_index_vectors(int r, int M)
{
    std::vector<IndexVector> out;
    if (r < 1 || M < 1) return out;
    std::vector<int> cur(r, 0);
    for (;;) {
        IndexVector v{cur, M};
        if (is_valid(v)) out.push_back(v);
        int k = r - 1;
        while (k >= 0 && cur[k] == M - 1) cur[k--] = 0;
        if (k < 0) break;
        ++cur[k];
    }
    return out;
}

bool in_block(const IndexVector& v, int i)
{
    const int r = static_cast<int>(v.d.size());
    if (i < 1 || i > r) return false;
    for (int t = 0; t < r; ++t) {
        const int x = v.d[t];
        if (t < i - 1 && (x < 1 || x > v.M - 1)) return false;
        if (t == i - 1 && x != 0) return false;
        if (t > i - 1 && (x < 0 || x > v.M - 1)) return false;
    }
    return true;
}

bool killed_by_frobenius(const WittRing& W, const WVec& x, int k)
{
    WVec y = x;
    for (int i = 0; i < k; ++i) y = W.frob(y);
    return W.is_zero(y);
}

WVec zeta_d(const WittRing& W, const std::vector<WVec>& xs, const IndexVector& d, int n)
{
    if (!is_valid(d) || d.d.size() != xs.size()) throw std::invalid_argument("zeta_d: invalid index vector");
    if (!W.frob_componentwise()) throw std::invalid_argument("zeta_d: needs a base ring of characteristic p");
    WVec acc = W.one();
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!killed_by_frobenius(W, xs[i], n + d.d[i])) throw std::invalid_argument("zeta_d: argument not killed by F^(n+d_i)");
        acc = W.mul(acc, xs[i]);
    }
    if (!killed_by_frobenius(W, acc, n)) throw std::logic_error("zeta_d: product not killed by F^n");
    return acc;
}

WVec random_frobenius_torsion(const WittRing& W, int k, std::mt19937_64& rng)
{
    const auto& R = W.base();
    if (R.kind() != ChainRing::Kind::EqualChar) throw std::invalid_argument("random_frobenius_torsion: needs F_q[y]/(y^N)");
    std::int64_t pk = 1;
    for (int i = 0; i < k && pk < R.n(); ++i) pk *= W.q();
    const int v = static_cast<int>((R.n() + pk - 1) / pk);
    WVec x = W.zero();
    for (auto& c : x) c = v >= R.n() ? R.zero() : R.mul(R.random(rng), R.uniformizer_pow(v));
    return x;
}

WeakaltReport weakalt_relation_check(const DieudonneModule& D, int j)
{
    const auto& R = *D.ring;
    if (R.p() == 2) throw std::invalid_argument("weakalt relation check requires p > 2");
    auto E = exterior_power(D, j);
    const auto& Phi = E.module.F;
    const auto& Ups = E.module.V;
    WeakaltReport rep;
    const PMat scal = mat_scalar(R, E.module.h, D.scalar);
    rep.phi_upsilon_commute = sl_eq(R, sl_compose(R, Phi, Ups), {scal, 0}) && sl_eq(R, sl_compose(R, Ups, Phi), {scal, 0});
    rep.theta_section = true;
    for (int i = 0; i < E.module.h; ++i) {
        // theta(1 (x) x) = x and theta(FV (x) x) = p x
        auto x = unit_vec(R, E.module.h, i);
        if (sl_apply(R, Phi, sl_apply(R, Ups, x)) != mat_vec(R, scal, x)) rep.theta_section = false;
    }
    std::vector<DieudonneModule> srcs(j, D);
    for (std::size_t idx = 0; idx < tuple_count(srcs); ++idx) {
        auto t = tuple_at(srcs, idx);
        ++rep.tuples;
        std::vector<PVec> ms, vms;
        for (int s : t) {
            ms.push_back(unit_vec(R, D.h, s));
            vms.push_back(sl_apply(R, D.V, ms.back()));
        }
        if (sl_apply(R, Ups, wedge(R, D.h, ms)) != wedge(R, D.h, vms)) ++rep.rho1_failures;
        std::vector<PVec> a = vms, b = ms;
        a[0] = ms[0];
        b[0] = sl_apply(R, D.F, ms[0]);
        if (sl_apply(R, Phi, wedge(R, D.h, a)) != wedge(R, D.h, b)) ++rep.rho2_failures;
    }
    return rep;
}

}  // namespace wittforge
