#include "wittforge/dieudonne.hpp"

#include <set>
#include <stdexcept>

namespace wittforge {

namespace {

PMat scalar_matrix(const CoeffRing& R, int n, const PElem& c)
{
    return mat_scalar(R, n, c);
}

PElem natural_scalar(const CoeffRing& R)
{
    if (R.base().kind() == ChainRing::Kind::EqualChar || R.step() > 1) return R.uniformizer();
    return R.p_elem();
}

std::vector<std::int64_t> flat_key(const CoeffRing& R, const PVec& v)
{
    std::vector<std::int64_t> k;
    for (const auto& e : v)
        for (int i = 0; i < R.factors(); ++i)
            for (int s = 0; s < R.base().slot_count(); ++s) k.push_back(e.c[i].c[s]);
    return k;
}

// All vectors of R^r in index order.
PVec vector_at(const CoeffRing& R, int r, std::uint64_t idx)
{
    const std::uint64_t card = R.cardinality();
    PVec v(r);
    for (int i = 0; i < r; ++i) {
        v[i] = R.element_at(idx % card);
        idx /= card;
    }
    return v;
}

std::uint64_t checked_power(std::uint64_t b, int e, std::uint64_t limit)
{
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) {
        if (b != 0 && r > limit / b) throw std::overflow_error("enumeration budget exceeded");
        r *= b;
    }
    return r;
}

PVec column(const PMat& m, int j)
{
    PVec v(m.rows);
    for (int i = 0; i < m.rows; ++i) v[i] = m(i, j);
    return v;
}

PVec apply_power(const CoeffRing& R, const SemilinearMap& f, PVec v, int k)
{
    for (int i = 0; i < k; ++i) v = sl_apply(R, f, v);
    return v;
}

CElem residue_candidate(const ChainRing& base, std::mt19937_64& rng)
{
    auto k = base.residue_field();
    return base.lift_from(k->element_at(rng() % k->cardinality()), *k);
}

}  // namespace

DieudonneModule make_module(CoeffRingPtr ring, PMat F, PMat V, PElem scalar)
{
    if (!ring) throw std::invalid_argument("module without coefficient ring");
    if (F.rows != F.cols || V.rows != V.cols || F.rows != V.rows)
        throw std::invalid_argument("F and V must be square of the same size");
    DieudonneModule D;
    D.h = F.rows;
    D.F = {std::move(F), 1};
    D.V = {std::move(V), -1};
    D.scalar = scalar;
    D.ring = std::move(ring);
    return D;
}

bool is_connected(const DieudonneModule& D)
{
    auto k = D.ring->at_level(1);
    SemilinearMap v{pmat_reduce(*D.ring, *k, D.V.A), -1};
    return twisted_nilpotency(*k, v, D.h * D.ring->sigma_order());
}

ValidationReport validate(const DieudonneModule& D, bool expect_connected)
{
    ValidationReport r;
    const auto& R = *D.ring;
    if (D.F.A.rows != D.h || D.F.A.cols != D.h || D.V.A.rows != D.h || D.V.A.cols != D.h) {
        r.fail("matrix shapes do not match the rank");
        return r;
    }
    if (D.F.twist != 1) r.fail("F must have twist +1");
    if (D.V.twist != -1) r.fail("V must have twist -1");
    auto target = scalar_matrix(R, D.h, D.scalar);
    if (!mat_eq(R, sl_compose(R, D.F, D.V).A, target)) r.fail("FV != scalar");
    if (!mat_eq(R, sl_compose(R, D.V, D.F).A, target)) r.fail("VF != scalar");
    if (expect_connected && !is_connected(D)) r.fail("V is not nilpotent modulo the maximal ideal");
    return r;
}

DieudonneModule reduce_module(const DieudonneModule& D, int level)
{
    auto R2 = D.ring->at_level(level);
    DieudonneModule E = D;
    E.ring = R2;
    E.F.A = pmat_reduce(*D.ring, *R2, D.F.A);
    E.V.A = pmat_reduce(*D.ring, *R2, D.V.A);
    E.scalar = D.ring->reduce_to(D.scalar, *R2);
    return E;
}

DieudonneModule change_basis(const DieudonneModule& D, const PMat& T)
{
    const auto& R = *D.ring;
    auto Ti = prod_inverse(R, T);
    DieudonneModule E = D;
    E.F.A = mat_mul(R, Ti, mat_mul(R, D.F.A, mat_sigma(R, T, 1)));
    E.V.A = mat_mul(R, Ti, mat_mul(R, D.V.A, mat_sigma(R, T, -1)));
    return E;
}

ODecomposition decompose_by_idempotents(const DieudonneModule& D)
{
    const auto& R = *D.ring;
    ODecomposition d;
    d.f = R.factors();
    d.h = D.h;
    for (int i = 0; i < d.f; ++i) {
        d.v_maps.push_back(component_matrix(R, D.V.A, i));
        d.f_maps.push_back(component_matrix(R, D.F.A, i));
        d.tangent_lengths.push_back(coker_length(R.base(), d.v_maps.back()));
    }
    // V(e_{i-1} x) must land in e_i D.
    for (int i = 0; i < d.f; ++i) {
        PVec v(D.h, R.zero());
        const int src = (i + d.f - 1) % d.f;
        for (int a = 0; a < D.h; ++a) {
            v.assign(D.h, R.zero());
            v[a] = R.idempotent(src);
            auto w = sl_apply(R, D.V, v);
            for (const auto& x : w)
                for (int c = 0; c < d.f; ++c)
                    if (c != i && !R.base().is_zero(x.c[c]))
                        throw std::logic_error("V image escapes the expected component");
        }
    }
    return d;
}

bool has_scalar_action(const ODecomposition& d)
{
    for (int i = 1; i < d.f; ++i)
        if (d.tangent_lengths[i] != 0) return false;
    return true;
}

namespace {

// Finds eps in span(conn) (component by component) such that the columns
// [etale | V^{f a} eps] form an invertible matrix.
std::optional<PVec> search_epsilon(const DieudonneModule& D, const PMat& etale, const PMat& conn, std::string* why)
{
    const auto& R = *D.ring;
    const int r = etale.cols, h0 = conn.cols, f = R.factors();
    if (h0 == 0) return PVec(D.h, R.zero());
    PVec eps(D.h, R.zero());
    for (int comp = 0; comp < f; ++comp) {
        std::mt19937_64 rng(0x5eed + comp);
        bool found = false;
        for (int attempt = 0; attempt < h0 + 64 && !found; ++attempt) {
            std::vector<CElem> coef(h0, R.base().zero());
            if (attempt < h0)
                coef[attempt] = R.base().one();
            else
                for (auto& c : coef) c = residue_candidate(R.base(), rng);
            PVec cand(D.h, R.zero());
            for (int i = 0; i < D.h; ++i)
                for (int b = 0; b < h0; ++b) cand[i].c[comp] = R.base().add(cand[i].c[comp], R.base().mul(conn(i, b).c[comp], coef[b]));
            CMat M(D.h, D.h, R.base().zero());
            for (int i = 0; i < D.h; ++i)
                for (int a = 0; a < r; ++a) M(i, a) = etale(i, a).c[comp];
            PVec cur = cand;
            for (int a = 0; a < h0; ++a) {
                for (int i = 0; i < D.h; ++i) M(i, r + a) = cur[i].c[comp];
                cur = apply_power(R, D.V, cur, f);
            }
            if (R.base().is_unit(chain_det(R.base(), M))) {
                for (int i = 0; i < D.h; ++i) eps[i].c[comp] = cand[i].c[comp];
                found = true;
            }
        }
        if (!found) {
            if (why) *why = "no epsilon found in component " + std::to_string(comp) + " within the search budget";
            return std::nullopt;
        }
    }
    return eps;
}

}  // namespace

std::optional<PVec> find_epsilon(const DieudonneModule& D, std::string* why)
{
    const auto& R = *D.ring;
    return search_epsilon(D, PMat(D.h, 0, R.zero()), mat_identity(R, D.h), why);
}

PMat epsilon_basis(const DieudonneModule& D, const PVec& eps)
{
    const auto& R = *D.ring;
    PMat B(D.h, D.h, R.zero());
    PVec cur = eps;
    for (int a = 0; a < D.h; ++a) {
        for (int i = 0; i < D.h; ++i) B(i, a) = cur[i];
        cur = apply_power(R, D.V, cur, R.factors());
    }
    return B;
}

PVec wedge(const CoeffRing& R, int h, const std::vector<PVec>& vecs)
{
    const int j = static_cast<int>(vecs.size());
    PMat M(h, j, R.zero());
    for (int c = 0; c < j; ++c) {
        if (static_cast<int>(vecs[c].size()) != h) throw std::invalid_argument("wedge: vector length mismatch");
        for (int i = 0; i < h; ++i) M(i, c) = vecs[c][i];
    }
    // Componentwise minors.
    std::vector<CMat> comps;
    for (int i = 0; i < R.factors(); ++i) comps.push_back(compound(R.base(), component_matrix(R, M, i), j));
    return column(assemble_components(R, comps), 0);
}

ConnectedEtaleSplit split_connected_etale(const DieudonneModule& D)
{
    const auto& R = *D.ring;
    const int N = D.h * R.sigma_order() * R.level() + 1;
    auto W = sl_power(R, D.V, N).A;
    const int n = R.level();
    std::vector<std::vector<std::vector<CElem>>> et(R.factors()), co(R.factors());
    for (int c = 0; c < R.factors(); ++c) {
        auto s = smith_form(R.base(), component_matrix(R, W, c));
        auto Uinv = mat_inverse(R.base(), s.U);
        for (int i = 0; i < D.h; ++i) {
            const int d = s.diag[i];
            if (d != 0 && d != n) throw std::domain_error("V-power is not split into etale and connected parts");
            std::vector<CElem> col(D.h);
            for (int a = 0; a < D.h; ++a) col[a] = d == 0 ? Uinv(a, i) : s.V(a, i);
            (d == 0 ? et : co)[c].push_back(col);
        }
        if (et[c].size() != et[0].size()) throw std::domain_error("etale rank differs between components");
    }
    ConnectedEtaleSplit sp;
    const int r = static_cast<int>(et[0].size());
    sp.etale_basis = PMat(D.h, r, R.zero());
    sp.connected_basis = PMat(D.h, D.h - r, R.zero());
    for (int c = 0; c < R.factors(); ++c) {
        for (int b = 0; b < r; ++b)
            for (int a = 0; a < D.h; ++a) sp.etale_basis(a, b).c[c] = et[c][b][a];
        for (int b = 0; b < D.h - r; ++b)
            for (int a = 0; a < D.h; ++a) sp.connected_basis(a, b).c[c] = co[c][b][a];
    }
    return sp;
}

ExteriorPowerData exterior_power(const DieudonneModule& D, int j)
{
    const auto& R = *D.ring;
    if (j < 1 || j > D.h) throw std::invalid_argument("exterior power: j out of range");
    auto sp = split_connected_etale(D);
    const int r = sp.etale_basis.cols, h0 = D.h - r;
    std::string why;
    auto eps = search_epsilon(D, sp.etale_basis, sp.connected_basis, &why);
    if (!eps) throw std::domain_error("exterior power: " + why);

    // New basis: etale part, then V^{f a} eps.
    PMat T(D.h, D.h, R.zero());
    for (int i = 0; i < D.h; ++i)
        for (int a = 0; a < r; ++a) T(i, a) = sp.etale_basis(i, a);
    PVec cur = *eps;
    for (int a = 0; a < h0; ++a) {
        for (int i = 0; i < D.h; ++i) T(i, r + a) = cur[i];
        cur = apply_power(R, D.V, cur, R.factors());
    }
    auto Dp = change_basis(D, T);

    // V^{-1} on the etale block: V'(x) = A sigma^{-1}(x), so V'^{-1}(y) = sigma(A^{-1} y).
    PMat Aet(r, r, R.zero());
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) Aet(a, b) = Dp.V.A(a, b);
    for (int a = 0; a < r; ++a)
        for (int b = r; b < D.h; ++b)
            if (!R.is_zero(Dp.V.A(a, b)) || !R.is_zero(Dp.V.A(b, a)))
                throw std::logic_error("connected-etale split is not V-stable");
    PMat AetInv = r ? prod_inverse(R, Aet) : Aet;

    auto basis = wedge_basis(D.h, j);
    PMat Psi(static_cast<int>(basis.size()), static_cast<int>(basis.size()), R.zero());
    const int f = R.factors();
    for (std::size_t col = 0; col < basis.size(); ++col) {
        const auto& I = basis[col];
        std::vector<PVec> vecs;
        bool first_conn = true;
        for (int idx : I) {
            if (idx < r) {
                PVec y(D.h, R.zero());
                for (int a = 0; a < r; ++a) y[a] = R.sigma(AetInv(a, idx), 1);
                vecs.push_back(y);
            } else {
                const int alpha = idx - r;
                PVec e(D.h, R.zero());
                e[r] = R.one();
                if (first_conn) {
                    vecs.push_back(sl_apply(R, Dp.F, apply_power(R, Dp.V, e, f * alpha)));
                    first_conn = false;
                } else {
                    vecs.push_back(apply_power(R, Dp.V, e, f * alpha - 1));
                }
            }
        }
        PVec w = wedge(R, D.h, vecs);
        if (first_conn)
            for (auto& x : w) x = R.mul(D.scalar, x);
        for (int i = 0; i < Psi.rows; ++i) Psi(i, static_cast<int>(col)) = w[i];
    }

    // Back to the standard wedge basis: x = P x'.
    std::vector<CMat> pc;
    for (int c = 0; c < f; ++c) pc.push_back(compound(R.base(), component_matrix(R, T, c), j));
    PMat P = assemble_components(R, pc);
    PMat Phi = mat_mul(R, P, mat_mul(R, Psi, mat_sigma(R, prod_inverse(R, P), 1)));

    ExteriorPowerData E;
    E.j = j;
    E.module = make_module(D.ring, Phi, sl_exterior_power(R, D.V, j).A, D.scalar);
    E.epsilon = *eps;
    E.split_basis = T;
    E.etale_rank = r;
    auto target = scalar_matrix(R, E.module.h, D.scalar);
    if (!mat_eq(R, sl_compose(R, E.module.F, E.module.V).A, target) ||
        !mat_eq(R, sl_compose(R, E.module.V, E.module.F).A, target))
        throw std::logic_error("exterior power: Phi o Upsilon differs from the scalar");
    return E;
}

DiagramReport verify_diagrams(const DieudonneModule& D, const ExteriorPowerData& E, long long trials, std::uint64_t seed)
{
    const auto& R = *D.ring;
    DiagramReport rep;
    auto target = scalar_matrix(R, E.module.h, D.scalar);
    rep.phi_upsilon_ok = mat_eq(R, sl_compose(R, E.module.F, E.module.V).A, target);
    rep.upsilon_phi_ok = mat_eq(R, sl_compose(R, E.module.V, E.module.F).A, target);
    const int j = E.j;
    auto check = [&](const std::vector<PVec>& d) {
        std::vector<PVec> lhs_args{d[0]}, rhs_args{sl_apply(R, D.F, d[0])}, vd;
        for (int i = 1; i < j; ++i) {
            lhs_args.push_back(sl_apply(R, D.V, d[i]));
            rhs_args.push_back(d[i]);
        }
        for (int i = 0; i < j; ++i) vd.push_back(sl_apply(R, D.V, d[i]));
        if (sl_apply(R, E.module.F, wedge(R, D.h, lhs_args)) != wedge(R, D.h, rhs_args)) ++rep.f_failures;
        if (sl_apply(R, E.module.V, wedge(R, D.h, d)) != wedge(R, D.h, vd)) ++rep.v_failures;
        ++rep.checked;
    };
    if (trials < 0) {
        const std::uint64_t total = checked_power(R.cardinality(), D.h * j, std::uint64_t(1) << 24);
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            auto flat = vector_at(R, D.h * j, idx);
            std::vector<PVec> d(j);
            for (int i = 0; i < j; ++i) d[i].assign(flat.begin() + i * D.h, flat.begin() + (i + 1) * D.h);
            check(d);
        }
    } else {
        std::mt19937_64 rng(seed);
        for (long long t = 0; t < trials; ++t) {
            std::vector<PVec> d(j, PVec(D.h));
            for (auto& v : d)
                for (auto& x : v) x = R.random(rng);
            check(d);
        }
    }
    return rep;
}

bool upsilon_det_identity(const DieudonneModule& D, const ExteriorPowerData& E)
{
    const auto& R = *D.ring;
    auto dv = prod_det(R, D.V.A);
    auto du = prod_det(R, E.module.V.A);
    const long long ex = binomial(D.h - 1, E.j - 1);
    PElem pw = R.one();
    for (long long i = 0; i < ex; ++i) pw = R.mul(pw, dv);
    return du == pw;
}

bool phi_uniqueness(const ExteriorPowerData& E)
{
    const auto& M = E.module;
    const auto& R = *M.ring;
    // Upsilon o (X, 1) = (U sigma^{-1}(X), 0) = scalar: solve U Y = scalar, X = sigma(Y).
    auto Y = prod_solve(R, M.V.A, mat_scalar(R, M.h, M.scalar));
    if (!Y) return false;
    auto X = mat_sigma(R, *Y, 1);
    auto diff = mat_sigma(R, mat_sub(R, M.F.A, X), -1);
    if (!mat_is_zero(R, mat_mul(R, M.V.A, diff))) return false;
    // Whatever Upsilon kills has valuation >= n - (largest elementary divisor).
    for (int c = 0; c < R.factors(); ++c) {
        int dmax = 0;
        for (int d : elementary_divisors(R.base(), component_matrix(R, M.V.A, c))) dmax = std::max(dmax, d);
        for (const auto& e : diff.a)
            if (R.base().valuation(e.c[c]) < R.level() - dmax) return false;
    }
    return true;
}

long long order_exponent(const DieudonneModule& D, int j)
{
    if (j > D.h) return 0;
    if (j < 1) throw std::invalid_argument("order exponent: j must be >= 1");
    auto E = exterior_power(D, j);
    const auto& R = *D.ring;
    // Length of the free module wedge^j D: cokernel of the empty map into it.
    PMat empty(E.module.h, 0, R.zero());
    return coker_length(R, empty) / R.factors();
}

DimensionResult dimension(const DieudonneModule& D)
{
    DimensionResult r;
    r.level = D.level();
    r.value = coker_length(*D.ring, D.V.A);
    if (D.level() > 1) r.stabilized = coker_length(*reduce_module(D, D.level() - 1).ring,
                                                   reduce_module(D, D.level() - 1).V.A) == r.value;
    return r;
}

TowerReport tower_check(const DieudonneModule& D, int j, int n, int m)
{
    if (D.level() != n + m) throw std::invalid_argument("tower: module must be at level n + m");
    TowerReport rep;
    auto Ebig = exterior_power(D, j);
    auto Dm = reduce_module(D, m);
    auto Em = exterior_power(Dm, j);
    const auto& Rb = *D.ring;
    const auto& Rm = *Dm.ring;
    auto Rn = D.ring->at_level(n);
    const int rank = Ebig.module.h;
    const std::uint64_t limit = std::uint64_t(1) << 22;
    const std::uint64_t big_total = checked_power(Rb.cardinality(), rank, limit);
    const std::uint64_t small_total = checked_power(Rm.cardinality(), rank, limit);

    PElem pin = Rb.one(), pim = Rb.one();
    for (int i = 0; i < n; ++i) pin = Rb.mul(pin, Rb.uniformizer());
    for (int i = 0; i < m; ++i) pim = Rb.mul(pim, Rb.uniformizer());

    std::set<std::vector<std::int64_t>> ker, red_ker, image;
    for (std::uint64_t idx = 0; idx < big_total; ++idx) {
        auto x = vector_at(Rb, rank, idx);
        bool killed = true, reduces_to_zero = true;
        for (const auto& e : x) {
            killed = killed && Rb.is_zero(Rb.mul(pim, e));
            reduces_to_zero = reduces_to_zero && Rn->is_zero(Rb.reduce_to(e, *Rn));
        }
        if (killed) ker.insert(flat_key(Rb, x));
        if (reduces_to_zero) red_ker.insert(flat_key(Rb, x));
    }
    auto eta = [&](const PVec& y) {
        PVec z(y.size());
        for (std::size_t i = 0; i < y.size(); ++i) z[i] = Rb.mul(pin, Rb.lift_from(y[i], Rm));
        return z;
    };
    rep.upsilon_commutes = true;
    for (std::uint64_t idx = 0; idx < small_total; ++idx) {
        auto y = vector_at(Rm, rank, idx);
        auto z = eta(y);
        image.insert(flat_key(Rb, z));
        if (eta(sl_apply(Rm, Em.module.V, y)) != sl_apply(Rb, Ebig.module.V, z)) rep.upsilon_commutes = false;
    }
    rep.ker_size = ker.size();
    rep.image_size = image.size();
    rep.source_size = small_total;
    rep.eta_injective = image.size() == small_total;
    rep.contained = true;
    for (const auto& k : image)
        if (!ker.count(k)) rep.contained = false;
    rep.reduce_kernel_matches = red_ker == image;
    return rep;
}

PMat antidiag(const CoeffRing& R, const PElem& lower_left, const PElem& upper_right)
{
    PMat m = mat_zero(R, 2, 2);
    m(1, 0) = lower_left;
    m(0, 1) = upper_right;
    return m;
}

DieudonneModule supersingular_module(CoeffRingPtr R)
{
    auto s = natural_scalar(*R);
    auto A = antidiag(*R, R->one(), s);
    return make_module(R, A, A, s);
}

DieudonneModule etale_module(CoeffRingPtr R, int h)
{
    auto s = natural_scalar(*R);
    return make_module(R, mat_scalar(*R, h, s), mat_identity(*R, h), s);
}

DieudonneModule multiplicative_module(CoeffRingPtr R, int h)
{
    auto s = natural_scalar(*R);
    return make_module(R, mat_identity(*R, h), mat_scalar(*R, h, s), s);
}

DieudonneModule lubin_tate_module(CoeffRingPtr Rp, int h)
{
    const auto& R = *Rp;
    const auto& B = R.base();
    auto s = natural_scalar(R);
    const CElem pi = B.uniformizer();
    // V_pi: e_i -> e_{i+1}, e_h -> pi e_1;  N = pi V_pi^{-1}: e_{i+1} -> pi e_i, e_1 -> e_h.
    CMat Vpi = mat_zero(B, h, h), Nm = mat_zero(B, h, h);
    for (int i = 0; i + 1 < h; ++i) {
        Vpi(i + 1, i) = B.one();
        Nm(i, i + 1) = pi;
    }
    Vpi(0, h - 1) = B.add(Vpi(0, h - 1), pi);
    Nm(h - 1, 0) = B.add(Nm(h - 1, 0), B.one());
    if (s == R.uniformizer() && R.factors() == 1) {
        // ramified or equal-characteristic module itself
        std::vector<CMat> F{Nm}, V{Vpi};
        return make_module(Rp, assemble_components(R, F), assemble_components(R, V), s);
    }
    // D(H): V = (V_pi x_{f-1}, x_0, ..., x_{f-2}), F = (p x_1, ..., p/pi * N tau(x_0)).
    const int f = R.factors();
    const CElem p_over_pi = B.div(B.from_int(B.p()), pi);
    std::vector<CMat> Fc, Vc;
    for (int i = 0; i < f; ++i) {
        Vc.push_back(i == 0 ? Vpi : mat_identity(B, h));
        Fc.push_back(i == f - 1 ? mat_scale(B, p_over_pi, Nm) : mat_scalar(B, h, B.from_int(B.p())));
    }
    return make_module(Rp, assemble_components(R, Fc), assemble_components(R, Vc), s);
}

}  // namespace wittforge
