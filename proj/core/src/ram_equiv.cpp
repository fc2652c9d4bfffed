#include "wittforge/ram_equiv.hpp"

namespace wittforge {

namespace {

CMat frob_mat(const ChainRing& B, const CMat& m, int k)
{
    CMat r = m;
    for (auto& a : r.a) a = B.frob(a, k);
    return r;
}

// W_0 = I, W_i = V_i W_{i-1}: the matrices of V^i on M_0.
std::vector<CMat> v_powers(const ChainRing& B, const ODecomposition& d)
{
    std::vector<CMat> W{mat_identity(B, d.h)};
    for (int i = 1; i < d.f; ++i) W.push_back(mat_mul(B, d.v_maps[i], W.back()));
    return W;
}

std::vector<CMat> inverses(const ChainRing& B, const std::vector<CMat>& W)
{
    std::vector<CMat> out;
    for (const auto& w : W) out.push_back(mat_inverse(B, w));
    return out;
}

PMat lift(const CoeffRing& H, const CMat& m) { return assemble_components(H, {m}); }

PVec lift_vec(const std::vector<CElem>& v)
{
    PVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i].c[0] = v[i];
    return out;
}

std::vector<CElem> column_of(const CMat& m, int j)
{
    std::vector<CElem> v(m.rows);
    for (int i = 0; i < m.rows; ++i) v[i] = m(i, j);
    return v;
}

// s / pi for the scalar s on the D side.  p / pi is computed e levels up so
// that it stays meaningful when p vanishes in B.
CElem scalar_ratio(const ChainRing& B, const CElem& s)
{
    if (s == B.uniformizer() || B.e() == 1) return B.one();
    auto up = B.at_level(B.n() + B.e());
    return up->reduce_to(up->div(up->lift_from(s, B), up->uniformizer()), B);
}

CElem d_side_scalar(const ChainRing& B)
{
    return B.kind() == ChainRing::Kind::EqualChar ? B.uniformizer() : B.from_int(B.p());
}

bool pi_identities(const ChainRing& B, const CMat& Vpi, const CMat& Fpi, int tstep)
{
    const auto piI = mat_scalar(B, Vpi.rows, B.uniformizer());
    return mat_eq(B, mat_mul(B, Vpi, frob_mat(B, Fpi, -tstep)), piI) &&
           mat_eq(B, mat_mul(B, Fpi, frob_mat(B, Vpi, tstep)), piI);
}

// X0 is known modulo pi^c.  Returns the first X0 + pi^c K, K running over
// matrices with entries in B / pi^{n-c} in index order, that satisfies
// V_pi F_pi = F_pi V_pi = pi.
CMat fix_f_pi(const ChainRing& B, const CMat& Vpi, const CMat& X0, int c, int tstep)
{
    if (pi_identities(B, Vpi, X0, tstep)) return X0;
    if (c >= B.n()) throw std::runtime_error("F_pi solve failure: F_pi V_pi != pi");
    auto low = B.at_level(B.n() - c);
    const std::uint64_t digits = low->cardinality();
    const int cells = X0.rows * X0.cols;
    std::uint64_t total = 1;
    for (int i = 0; i < cells; ++i) {
        if (total > (std::uint64_t{1} << 20) / digits) throw std::runtime_error("F_pi solve failure: correction search too large");
        total *= digits;
    }
    const CElem pic = B.uniformizer_pow(c);
    for (std::uint64_t idx = 1; idx < total; ++idx) {
        CMat X = X0;
        std::uint64_t rest = idx;
        for (int i = 0; i < cells; ++i) {
            X.a[i] = B.add(X.a[i], B.mul(pic, B.lift_from(low->element_at(rest % digits), *low)));
            rest /= digits;
        }
        if (pi_identities(B, Vpi, X, tstep)) return X;
    }
    throw std::runtime_error("F_pi solve failure: F_pi V_pi != pi");
}

bool same_matrices(const DieudonneModule& a, const DieudonneModule& b)
{
    return a.h == b.h && mat_eq(*a.ring, a.F.A, b.F.A) && mat_eq(*a.ring, a.V.A, b.V.A);
}

}  // namespace

ScalarActionModule scalar_action_module(const DieudonneModule& D)
{
    ScalarActionModule s{D, decompose_by_idempotents(D), false};
    s.scalar_action = has_scalar_action(s.decomposition);
    return s;
}

CoeffRingPtr ramified_ring(const CoeffRing& R)
{
    return std::make_shared<const CoeffRing>(R.base_ptr(), 1, R.factors() * R.step());
}

HModule H_functor(const DieudonneModule& D)
{
    auto sa = scalar_action_module(D);
    if (!sa.scalar_action) throw ScalarActionError("O does not act on the tangent space by scalars");
    const auto& R = *D.ring;
    const auto& B = R.base();
    const int f = R.factors();
    const int tstep = f * R.step();
    for (int i = 1; i < f; ++i)
        if (D.scalar.c[i] != D.scalar.c[0]) throw std::invalid_argument("H functor: scalar is not diagonal");
    const auto& dec = sa.decomposition;
    auto W = v_powers(B, dec);
    CMat Vpi = mat_mul(B, dec.v_maps[0], frob_mat(B, W[f - 1], -tstep));
    CMat Y = mat_mul(B, mat_inverse(B, W[f - 1]), dec.f_maps[f - 1]);
    const CElem ratio = scalar_ratio(B, D.scalar.c[0]);
    CMat Fpi = Y;
    try {
        for (auto& a : Fpi.a) a = B.div(a, ratio);
    } catch (const std::domain_error&) {
        throw std::runtime_error("F_pi solve failure: F(M_0) not divisible by p/pi");
    }
    const CElem pi = B.uniformizer();
    Fpi = fix_f_pi(B, Vpi, Fpi, B.n() - B.valuation(ratio), tstep);
    auto Hr = ramified_ring(R);
    HModule out;
    out.module = make_module(Hr, lift(*Hr, Fpi), lift(*Hr, Vpi), Hr->diag(pi));
    out.f = f;
    out.f_pi_unique = B.is_unit(ratio);
    return out;
}

DieudonneModule D_functor(const DieudonneModule& H, int f)
{
    const auto& Hr = *H.ring;
    if (Hr.factors() != 1) throw std::invalid_argument("D functor: H must live over a single chain ring");
    if (f < 1 || Hr.step() % f != 0) throw std::invalid_argument("D functor: f does not divide the Frobenius step");
    auto R = std::make_shared<const CoeffRing>(Hr.base_ptr(), f, Hr.step() / f);
    const auto& B = R->base();
    const CElem s = d_side_scalar(B);
    const CElem ratio = scalar_ratio(B, s);
    CMat Vpi = component_matrix(Hr, H.V.A, 0), Fpi = component_matrix(Hr, H.F.A, 0);
    const int vs = B.valuation(s);
    for (int v : elementary_divisors(B, Vpi))
        if (v > vs) throw std::invalid_argument("D functor: pH is not contained in V_pi H");
    std::vector<CMat> Fc, Vc;
    for (int i = 0; i < f; ++i) {
        Vc.push_back(i == 0 ? Vpi : mat_identity(B, H.h));
        Fc.push_back(i == f - 1 ? mat_scale(B, ratio, Fpi) : mat_scalar(B, H.h, s));
    }
    return make_module(R, assemble_components(*R, Fc), assemble_components(*R, Vc), R->diag(s));
}

PMat v_power_iso(const DieudonneModule& D)
{
    auto sa = scalar_action_module(D);
    if (!sa.scalar_action) throw ScalarActionError("O does not act on the tangent space by scalars");
    return assemble_components(*D.ring, v_powers(D.ring->base(), sa.decomposition));
}

RoundtripReport equivalence_roundtrip(const DieudonneModule& D)
{
    const auto& R = *D.ring;
    const auto& B = R.base();
    RoundtripReport rep;
    auto H = H_functor(D);
    auto D2 = D_functor(H.module, H.f);
    auto H2 = H_functor(D2);
    const auto& Hr = *H.module.ring;
    rep.v_exact = mat_eq(Hr, H.module.V.A, H2.module.V.A);
    rep.f_exact = mat_eq(Hr, H.module.F.A, H2.module.F.A);
    // F_pi is only determined modulo the pi^{n - v(p/pi)}-torsion.
    const int slack = B.n() - B.valuation(scalar_ratio(B, D.scalar.c[0]));
    rep.f_congruent = true;
    for (std::size_t i = 0; i < H.module.F.A.a.size(); ++i)
        if (B.valuation(B.sub(H.module.F.A.a[i].c[0], H2.module.F.A.a[i].c[0])) < slack) rep.f_congruent = false;
    auto T = v_power_iso(D);
    rep.iso_invertible = R.is_unit(prod_det(R, T));
    if (rep.iso_invertible) {
        auto E = change_basis(D, T);
        rep.iso_intertwines = mat_eq(R, E.F.A, D2.F.A) && mat_eq(R, E.V.A, D2.V.A);
    }
    return rep;
}

MultilinearMap chi(const MultilinearMap& phi, const std::vector<DieudonneModule>& sources,
                   const DieudonneModule& target)
{
    const int r = static_cast<int>(sources.size());
    if (phi.arity() != r) throw std::invalid_argument("chi: arity mismatch");
    const auto& B = target.ring->base();
    const int f = target.ring->factors();
    std::vector<std::vector<CMat>> Winv;
    for (int k = 0; k < r; ++k) {
        if (!same_matrices(H_functor(sources[k]).module, phi.sources[k]))
            throw std::invalid_argument("chi: source is not H of the given module");
        Winv.push_back(inverses(B, v_powers(B, decompose_by_idempotents(sources[k]))));
    }
    if (!same_matrices(H_functor(target).module, phi.target)) throw std::invalid_argument("chi: target mismatch");
    auto Wt = v_powers(B, decompose_by_idempotents(target));
    auto m = zero_multilinear(sources, target);
    for (std::size_t idx = 0; idx < m.tensor.size(); ++idx) {
        auto t = tuple_at(sources, idx);
        for (int a = 0; a < f; ++a) {
            std::vector<PVec> args;
            for (int k = 0; k < r; ++k) args.push_back(lift_vec(column_of(Winv[k][a], t[k])));
            auto val = ml_eval(phi, args);
            std::vector<CElem> y(val.size());
            for (std::size_t i = 0; i < val.size(); ++i) y[i] = val[i].c[0];
            auto out = mat_vec(B, Wt[a], y);
            for (int i = 0; i < target.h; ++i) m.tensor[idx][i].c[a] = out[i];
        }
    }
    return m;
}

MultilinearMap xi(const MultilinearMap& psi)
{
    std::vector<DieudonneModule> srcs;
    for (const auto& D : psi.sources) srcs.push_back(H_functor(D).module);
    auto m = zero_multilinear(srcs, H_functor(psi.target).module);
    for (std::size_t idx = 0; idx < m.tensor.size(); ++idx)
        for (int i = 0; i < psi.target.h; ++i) m.tensor[idx][i].c[0] = psi.tensor[idx][i].c[0];
    return m;
}

ChiXiReport chi_xi_check(const DieudonneModule& D, int r, const DieudonneModule& N, Flavor flavor)
{
    ChiXiReport rep;
    const std::vector<DieudonneModule> srcs(r, D);
    const std::vector<DieudonneModule> hsrcs(r, H_functor(D).module);
    const auto HN = H_functor(N).module;
    auto flavor_ok = [&](const MultilinearMap& m) {
        for (const auto& x : flavor_residuals(m, flavor))
            if (!m.target.ring->is_zero(x)) return false;
        return true;
    };
    auto Lphi = solve_L_space(hsrcs, HN, flavor);
    rep.phi_generators = static_cast<int>(Lphi.generators.size());
    for (const auto& g : Lphi.generators) {
        auto c = chi(g, srcs, N);
        if (!check_V_condition(c) || !check_F_conditions(c, 20)) ++rep.condition_failures;
        if (!flavor_ok(c)) ++rep.flavor_failures;
        if (xi(c).tensor != g.tensor) ++rep.xi_chi_failures;
    }
    auto Lpsi = solve_L_space(srcs, N, flavor);
    rep.psi_generators = static_cast<int>(Lpsi.generators.size());
    for (const auto& g : Lpsi.generators) {
        auto x = xi(g);
        if (!check_V_condition(x) || !check_F_conditions(x, 20)) ++rep.condition_failures;
        if (!flavor_ok(x)) ++rep.flavor_failures;
        if (chi(x, srcs, N).tensor != g.tensor) ++rep.chi_xi_failures;
    }
    return rep;
}

PVec trace_map(const DieudonneModule& D, const PVec& x)
{
    auto sa = scalar_action_module(D);
    if (!sa.scalar_action) throw ScalarActionError("trace: no V-adapted decomposition without scalar action");
    if (static_cast<int>(x.size()) != D.h) throw std::invalid_argument("trace: vector has the wrong length");
    const auto& B = D.ring->base();
    auto Winv = inverses(B, v_powers(B, sa.decomposition));
    std::vector<CElem> sum(D.h, B.zero());
    for (int j = 0; j < D.ring->factors(); ++j) {
        std::vector<CElem> xj(D.h);
        for (int i = 0; i < D.h; ++i) xj[i] = x[i].c[j];
        auto part = mat_vec(B, Winv[j], xj);
        for (int i = 0; i < D.h; ++i) sum[i] = B.add(sum[i], part[i]);
    }
    return lift_vec(sum);
}

ExteriorCompatReport exterior_compatibility(const DieudonneModule& D, int r)
{
    ExteriorCompatReport rep;
    auto lhs = H_functor(exterior_power(D, r).module).module;
    auto rhs = exterior_power(H_functor(D).module, r).module;
    rep.rank_h_of_wedge = lhs.h;
    rep.rank_wedge_of_h = rhs.h;
    if (lhs.h != rhs.h) return rep;
    rep.v_equal = mat_eq(*lhs.ring, lhs.V.A, rhs.V.A);
    rep.f_equal = mat_eq(*lhs.ring, lhs.F.A, rhs.F.A);
    const auto& B = D.ring->base();
    const int slack = B.n() - B.valuation(scalar_ratio(B, D.scalar.c[0]));
    rep.f_congruent = true;
    for (std::size_t i = 0; i < lhs.F.A.a.size(); ++i)
        if (B.valuation(B.sub(lhs.F.A.a[i].c[0], rhs.F.A.a[i].c[0])) < slack) rep.f_congruent = false;
    return rep;
}

}  // namespace wittforge
