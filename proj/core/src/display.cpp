#include "wittforge/display.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace wittforge {

namespace {

WVec scalar_of(const WittRing& W) { return W.uniformizer(); }

WMat frob_mat(const WittRing& W, const WMat& m)
{
    return mat_map<WVec>(m, [&W](const WVec& x) { return W.frob(x); });
}

// Absolute q-Frobenius of the base ring, read off W.
CElem frob_base(const WittRing& W, const CElem& a) { return W.frob(W.teichmuller(a))[0]; }

CMat frob_cmat(const WittRing& W, const CMat& m)
{
    return mat_map<CElem>(m, [&W](const CElem& x) { return frob_base(W, x); });
}

WMat scale_columns(const WittRing& W, const WMat& m, int from, int to, const WVec& c)
{
    WMat r = m;
    for (int i = 0; i < m.rows; ++i)
        for (int j = from; j < to; ++j) r(i, j) = W.mul(c, m(i, j));
    return r;
}

WMat scale_rows(const WittRing& W, const WMat& m, int from, int to, const WVec& c)
{
    WMat r = m;
    for (int i = from; i < to; ++i)
        for (int j = 0; j < m.cols; ++j) r(i, j) = W.mul(c, m(i, j));
    return r;
}

void require_char_p(const ChainRing& R)
{
    if (!R.char_p()) throw std::invalid_argument("display base ring must have characteristic p");
}

// Residue field element of R placed into the first s slots of another ring.
CElem copy_field_slots(const CElem& a, int s)
{
    CElem r;
    for (int i = 0; i < s; ++i) r.c[i] = a.c[i];
    return r;
}

bool is_perfect_field(const ChainRing& R) { return R.char_p() && R.n() == 1 && (R.kind() == ChainRing::Kind::EqualChar || R.e() == 1); }

}  // namespace

WittRingPtr display_witt_ring(ChainRingPtr R, int depth)
{
    require_char_p(*R);
    const auto p = R->p();
    return std::make_shared<const WittRing>(classical_witt(std::move(R), p, depth));
}

WittRingPtr display_witt_ring(ChainRingPtr R, const BaseDVR& O, int depth)
{
    require_char_p(*R);
    if (R->p() != O.p) throw std::invalid_argument("display base ring has the wrong characteristic");
    return std::make_shared<const WittRing>(ramified_witt(std::move(R), O, depth));
}

Display make_display(WittRingPtr W, int rank_L, int rank_T, WMat structural)
{
    if (!W) throw std::invalid_argument("display without Witt ring");
    if (rank_L < 0 || rank_T < 0) throw std::invalid_argument("display ranks must be non-negative");
    const int h = rank_L + rank_T;
    if (structural.rows != h || structural.cols != h) throw std::invalid_argument("structural matrix has the wrong shape");
    for (const auto& x : structural.a)
        if (static_cast<int>(x.size()) != W->length()) throw std::invalid_argument("structural entry has the wrong depth");
    return Display{std::move(W), rank_L, rank_T, std::move(structural)};
}

ValidationReport validate(const Display& d, int samples, std::uint64_t seed)
{
    ValidationReport rep;
    const auto& W = *d.W;
    if (!W.base().char_p()) rep.fail("base ring is not of characteristic p");
    const int h = d.h(), a = d.rank_L;
    if (d.structural.rows != h || d.structural.cols != h) {
        rep.fail("structural matrix has the wrong shape");
        return rep;
    }
    if (h == 0) return rep;
    if (!W.is_unit(det(W, d.structural))) {
        rep.fail("structural matrix is not invertible");
        return rep;
    }
    // y = sum c_i l_i + sum V(w_j) t_j lies in Q; compare F(y) with scalar * V^{-1}(y).
    const WVec pi = scalar_of(W);
    const WMat fsharp = scale_columns(W, d.structural, 0, a, pi);
    std::mt19937_64 rng(seed);
    for (int s = 0; s < samples; ++s) {
        std::vector<WVec> y(h), vinv_coeff(h);
        for (int i = 0; i < h; ++i) {
            WVec c = W.random(rng);
            if (i < a) {
                y[i] = c;
                vinv_coeff[i] = W.frob(c);
            } else {
                y[i] = W.ver(c);
                vinv_coeff[i] = c;
            }
        }
        std::vector<WVec> fy(h);
        for (int i = 0; i < h; ++i) fy[i] = W.frob(y[i]);
        auto Fy = mat_vec(W, fsharp, fy);
        auto Vy = mat_vec(W, d.structural, vinv_coeff);
        for (int i = 0; i < h; ++i)
            if (!W.eq(Fy[i], W.mul(pi, Vy[i]))) {
                rep.fail("F(y) differs from scalar * V^{-1}(y) at sample " + std::to_string(s));
                return rep;
            }
    }
    return rep;
}

VSharpData v_sharp(const Display& d)
{
    const auto& W = *d.W;
    const int h = d.h(), a = d.rank_L;
    const WVec pi = scalar_of(W);
    VSharpData v;
    v.fsharp = scale_columns(W, d.structural, 0, a, pi);
    v.vsharp = scale_rows(W, mat_inverse(W, d.structural), a, h, pi);
    const auto P = mat_scalar(W, h, pi);
    if (!mat_eq(W, mat_mul(W, v.fsharp, v.vsharp), P) || !mat_eq(W, mat_mul(W, v.vsharp, v.fsharp), P))
        throw std::logic_error("V^# violates F^# V^# = V^# F^# = p");
    return v;
}

NilpotenceResult nilpotence_test(const Display& d)
{
    const auto& W = *d.W;
    const auto& R = W.base();
    const int h = d.h();
    if (h == 0) return {true, 0};
    const auto vs = v_sharp(d).vsharp;
    CMat N = mat_map<CElem>(vs, [](const WVec& x) { return x[0]; });
    // (V^#)^k reduces to Frob^{k-1}(N) ... Frob(N) N.
    CMat C = N;
    const int bound = h * (R.n() + 1) + 1;
    for (int k = 1; k <= bound; ++k) {
        if (mat_is_zero(R, C)) return {true, k};
        C = mat_mul(R, frob_cmat(W, C), N);
    }
    return {false, 0};
}

CElem witt_to_galois(const WittRing& W, const ChainRing& GR, const WVec& x)
{
    const auto& k = W.base();
    if (W.ramified() || !is_perfect_field(k) || GR.kind() != ChainRing::Kind::Mixed || GR.e() != 1 ||
        GR.s() != k.s() || GR.p() != k.p() || GR.n() != W.length())
        throw std::invalid_argument("witt_to_galois: incompatible rings");
    CElem y = GR.zero(), pw = GR.one();
    const CElem p = GR.from_int(GR.p());
    for (int i = 0; i < W.length(); ++i) {
        CElem t = GR.teichmuller(GR.frob(copy_field_slots(x[i], k.s()), -i));
        y = GR.add(y, GR.mul(pw, t));
        pw = GR.mul(pw, p);
    }
    return y;
}

WVec galois_to_witt(const WittRing& W, const ChainRing& GR, const CElem& y0)
{
    const auto& k = W.base();
    if (W.ramified() || !is_perfect_field(k) || GR.kind() != ChainRing::Kind::Mixed || GR.e() != 1 ||
        GR.s() != k.s() || GR.p() != k.p() || GR.n() != W.length())
        throw std::invalid_argument("galois_to_witt: incompatible rings");
    WVec x = W.zero();
    CElem y = y0;
    for (int i = 0; i < W.length(); ++i) {
        CElem r = GR.residue(y);
        x[i] = copy_field_slots(GR.residue(GR.frob(r, i)), k.s());
        if (i + 1 < W.length()) y = GR.div_uniformizer(GR.sub(y, GR.teichmuller(r)));
    }
    return x;
}

DisplayFromModule from_dieudonne(const DieudonneModule& D)
{
    const auto& CR = *D.ring;
    const auto& GR = CR.base();
    if (CR.factors() != 1 || CR.step() != 1 || GR.kind() != ChainRing::Kind::Mixed || GR.e() != 1)
        throw std::invalid_argument("from_dieudonne: needs a classical module over W(k)/p^n");
    const int h = D.h, n = GR.n();
    CMat AV = component_matrix(CR, D.V.A, 0);
    auto sf = smith_form(GR, AV);
    std::vector<int> perm;
    for (int want : {0, 1})
        for (int i = 0; i < h; ++i) {
            int v = sf.diag[i];
            if (v > 1 && !(n == 1 && v == 1)) throw std::invalid_argument("V not of the required shape");
            if (std::min(v, 1) == want) perm.push_back(i);
        }
    const int a = static_cast<int>(std::count_if(sf.diag.begin(), sf.diag.end(), [](int v) { return v == 0; }));
    CMat Uinv = mat_inverse(GR, sf.U);
    CMat B = mat_zero(GR, h, h);
    for (int j = 0; j < h; ++j)
        for (int i = 0; i < h; ++i) B(i, j) = Uinv(i, perm[j]);
    PMat Bp = assemble_components(CR, {B});
    DieudonneModule E = change_basis(D, Bp);
    CMat AV2 = component_matrix(CR, E.V.A, 0), AF2 = component_matrix(CR, E.F.A, 0);

    CMat Phi = mat_zero(GR, h, h);
    for (int k = 0; k < h; ++k) {
        if (k < a) {
            std::vector<CElem> ek(h, GR.zero());
            ek[k] = GR.one();
            auto y = chain_solve(GR, AV2, ek);
            if (!y) throw std::logic_error("from_dieudonne: L vector outside V M");
            for (int i = 0; i < h; ++i) Phi(i, k) = GR.frob((*y)[i], 1);
        } else {
            for (int i = 0; i < h; ++i) Phi(i, k) = AF2(i, k);
        }
    }
    auto W = display_witt_ring(GR.residue_field(), n);
    WMat S = mat_map<WVec>(Phi, [&](const CElem& x) { return galois_to_witt(*W, GR, x); });
    return {make_display(W, a, h - a, std::move(S)), Bp};
}

DieudonneModule to_dieudonne(const Display& d)
{
    const auto& W = *d.W;
    const auto& k = W.base();
    if (W.ramified() || !is_perfect_field(k)) throw std::invalid_argument("to_dieudonne: needs a classical display over a perfect field");
    auto GR = ChainRing::galois(k.p(), k.s(), W.length());
    auto CR = std::make_shared<const CoeffRing>(GR, 1, 1);
    auto vs = v_sharp(d);
    auto conv = [&](const WVec& x) { return witt_to_galois(W, *GR, x); };
    CMat AF = mat_map<CElem>(vs.fsharp, conv);
    CMat AV = mat_map<CElem>(vs.vsharp, [&](const WVec& x) { return GR->frob(conv(x), -1); });
    return make_module(CR, assemble_components(*CR, {AF}), assemble_components(*CR, {AV}), CR->p_elem());
}

std::vector<std::vector<int>> display_wedge_basis(int h, int r)
{
    auto lex = wedge_basis(h, r);
    std::stable_partition(lex.begin(), lex.end(), [h](const std::vector<int>& t) { return t.empty() || t.back() != h - 1; });
    return lex;
}

WMat display_compound(const WittRing& W, const WMat& m, int r)
{
    auto RB = display_wedge_basis(m.rows, r), CB = display_wedge_basis(m.cols, r);
    WMat out = mat_zero(W, static_cast<int>(RB.size()), static_cast<int>(CB.size()));
    for (std::size_t I = 0; I < RB.size(); ++I)
        for (std::size_t J = 0; J < CB.size(); ++J) {
            WMat sub = mat_zero(W, r, r);
            for (int x = 0; x < r; ++x)
                for (int y = 0; y < r; ++y) sub(x, y) = m(RB[I][x], CB[J][y]);
            out(static_cast<int>(I), static_cast<int>(J)) = det(W, sub);
        }
    return out;
}

Display exterior_power(const Display& d, int r)
{
    if (d.rank_T != 1) throw std::invalid_argument("display exterior power needs rank_T = 1");
    const int h = d.h();
    if (r < 1 || r > h) throw std::invalid_argument("display exterior power: r out of range");
    return make_display(d.W, static_cast<int>(binomial(h - 1, r)), static_cast<int>(binomial(h - 1, r - 1)),
                        display_compound(*d.W, d.structural, r));
}

IndependenceReport decomposition_independence_check(const Display& d, int r, int trials, std::uint64_t seed)
{
    if (d.rank_T != 1) throw std::invalid_argument("decomposition check needs rank_T = 1");
    const auto& W = *d.W;
    const int h = d.h(), a = d.rank_L;
    const WVec pi = scalar_of(W);
    std::mt19937_64 rng(seed);
    IndependenceReport rep;
    const Display E = exterior_power(d, r);
    const auto vs_old = v_sharp(E);
    for (int t = 0; t < trials; ++t) {
        ++rep.trials;
        // C = [[A, c], [0, lambda]]: new basis vectors in old coordinates.
        WMat C = mat_identity(W, h);
        if (t > 0) {
            WMat A = mat_identity(W, a);
            do {
                for (auto& x : A.a) x = W.random(rng);
            } while (a > 0 && !W.is_unit(det(W, A)));
            for (int i = 0; i < a; ++i)
                for (int j = 0; j < a; ++j) C(i, j) = A(i, j);
            for (int i = 0; i < a; ++i) C(i, h - 1) = W.random(rng);
            C(h - 1, h - 1) = W.add(W.one(), W.ver(W.random(rng)));
        }
        // Phi_new = C^{-1} Phi M with M = Frob(C), top-right block scaled by the scalar.
        WMat M = frob_mat(W, C);
        for (int i = 0; i < a; ++i) M(i, h - 1) = W.mul(pi, M(i, h - 1));
        Display dn = make_display(d.W, a, 1, mat_mul(W, mat_inverse(W, C), mat_mul(W, d.structural, M)));
        Display En = exterior_power(dn, r);

        WMat Cw = display_compound(W, C, r);
        const int aE = E.rank_L, hE = E.h();
        bool ok = true;
        for (int i = aE; i < hE && ok; ++i)
            for (int j = 0; j < aE; ++j)
                if (!W.is_zero(Cw(i, j))) ok = false;
        WMat Mw = frob_mat(W, Cw);
        for (int i = 0; i < aE; ++i)
            for (int j = aE; j < hE; ++j) Mw(i, j) = W.mul(pi, Mw(i, j));
        if (ok) ok = mat_eq(W, En.structural, mat_mul(W, mat_inverse(W, Cw), mat_mul(W, E.structural, Mw)));
        if (ok) {
            auto vs_new = v_sharp(En);
            WMat FC = frob_mat(W, Cw);
            ok = mat_eq(W, mat_mul(W, vs_old.fsharp, FC), mat_mul(W, Cw, vs_new.fsharp)) &&
                 mat_eq(W, mat_mul(W, vs_old.vsharp, Cw), mat_mul(W, FC, vs_new.vsharp));
        }
        if (!ok) ++rep.failures;
    }
    return rep;
}

RingHom ring_hom(const ChainRing& from, const ChainRing& to)
{
    if (!from.char_p() || !to.char_p() || from.p() != to.p()) throw std::invalid_argument("unsupported base change");
    auto shape_ok = [](const ChainRing& R) { return R.kind() == ChainRing::Kind::EqualChar || R.e() == 1; };
    if (!shape_ok(from) || !shape_ok(to)) throw std::invalid_argument("unsupported base change");
    if (from.s() == 1 && from.n() == 1) {
        const ChainRing* T = &to;
        return [T](const CElem& a) { return T->from_int(a.c[0]); };
    }
    if (from.s() != to.s() || (from.n() != 1 && to.n() > from.n())) throw std::invalid_argument("unsupported base change");
    const int slots = std::min(from.n(), to.n()) * from.s();
    return [slots](const CElem& a) {
        CElem r;
        for (int i = 0; i < slots; ++i) r.c[i] = a.c[i];
        return r;
    };
}

Display base_change(const Display& d, WittRingPtr target, const RingHom& hom)
{
    const auto& W = *d.W;
    if (target->p() != W.p() || target->q() != W.q() || target->length() != W.length() || target->ramified() != W.ramified())
        throw std::invalid_argument("base change: Witt rings of different type");
    WMat S = mat_map<WVec>(d.structural, [&](const WVec& x) {
        WVec y;
        for (const auto& c : x) y.push_back(hom(c));
        return y;
    });
    return make_display(std::move(target), d.rank_L, d.rank_T, std::move(S));
}

Display base_change(const Display& d, ChainRingPtr target)
{
    if (d.W->ramified()) throw std::invalid_argument("base change by ring only for classical displays");
    auto hom = ring_hom(d.base(), *target);
    auto W2 = display_witt_ring(target, d.depth());
    return base_change(d, W2, hom);
}

namespace {

std::vector<std::int64_t> encode(const CMat& m, int slots)
{
    std::vector<std::int64_t> v;
    for (const auto& x : m.a)
        for (int i = 0; i < slots; ++i) v.push_back(x.c[i]);
    return v;
}

// Coordinates of x ^ y in the display wedge basis of degree 2.
std::vector<CElem> wedge_coords(const ChainRing& R, const std::vector<std::vector<int>>& basis,
                                const std::vector<CElem>& x, const std::vector<CElem>& y)
{
    std::vector<CElem> w;
    for (const auto& t : basis)
        w.push_back(R.sub(R.mul(x[t[0]], y[t[1]]), R.mul(x[t[1]], y[t[0]])));
    return w;
}

std::vector<CElem> column(const CMat& m, int j)
{
    std::vector<CElem> v(m.rows);
    for (int i = 0; i < m.rows; ++i) v[i] = m(i, j);
    return v;
}

std::vector<CElem> frob_vec(const WittRing& W, std::vector<CElem> v)
{
    for (auto& x : v) x = frob_base(W, x);
    return v;
}

bool vec_eq(const std::vector<CElem>& a, const std::vector<CElem>& b) { return a == b; }

}  // namespace

UniversalPropertyReport universal_property_check(const Display& d, const Display& target, std::uint64_t budget)
{
    const auto& W = *d.W;
    const auto& R = W.base();
    if (d.depth() != 1 || target.depth() != 1) throw std::invalid_argument("universal property check runs at depth 1");
    if (!R.same_as(target.base()) || W.q() != target.W->q()) throw std::invalid_argument("displays over different rings");
    const Display E = exterior_power(d, 2);
    const int h = d.h(), a = d.rank_L, H = E.h(), aE = E.rank_L, ht = target.h(), at = target.rank_L;
    auto lvl0 = [](const WMat& m) { return mat_map<CElem>(m, [](const WVec& x) { return x[0]; }); };
    const CMat PhiD = lvl0(d.structural), PhiE = lvl0(E.structural), PhiT = lvl0(target.structural);
    const CMat FsD = lvl0(v_sharp(d).fsharp), FsE = lvl0(v_sharp(E).fsharp), FsT = lvl0(v_sharp(target).fsharp);
    const auto basis = display_wedge_basis(h, 2);

    const std::uint64_t card = R.cardinality();
    const int unknowns = ht * H;
    std::uint64_t total = 1;
    for (int i = 0; i < unknowns; ++i) {
        if (total > budget / card) throw std::runtime_error("universal property check: size budget exceeded");
        total *= card;
    }
    auto matrix_at = [&](std::uint64_t idx) {
        CMat G = mat_zero(R, ht, H);
        for (auto& x : G.a) {
            x = R.element_at(idx % card);
            idx /= card;
        }
        return G;
    };
    auto frobm = [&](const CMat& m) { return frob_cmat(W, m); };
    auto sub_cols = [](const CMat& m, int rows, int cols) { return mat_block(m, 0, 0, rows, cols); };

    // Display morphisms wedge^2 d -> target.
    auto is_hom = [&](const CMat& G) {
        for (int i = at; i < ht; ++i)
            for (int j = 0; j < aE; ++j)
                if (!R.is_zero(G(i, j))) return false;
        if (!mat_eq(R, mat_mul(R, G, FsE), mat_mul(R, FsT, frobm(G)))) return false;
        CMat lhs = mat_mul(R, G, sub_cols(PhiE, H, aE));
        CMat rhs = mat_mul(R, sub_cols(PhiT, ht, at), frobm(mat_block(G, 0, 0, at, aE)));
        return mat_eq(R, lhs, rhs);
    };
    // Alternating bilinear phi with phi(e_i, e_k) = column of Vphi at (i, k).
    auto phi = [&](const CMat& Vphi, const std::vector<CElem>& x, const std::vector<CElem>& y) {
        return mat_vec(R, Vphi, wedge_coords(R, basis, x, y));
    };
    auto unit = [&](int i) {
        std::vector<CElem> e(h, R.zero());
        e[i] = R.one();
        return e;
    };
    auto apply_T = [&](const CMat& Fs, const std::vector<CElem>& v) { return mat_vec(R, Fs, frob_vec(W, v)); };
    auto vinv_T = [&](const std::vector<CElem>& v) {
        std::vector<CElem> l(v.begin(), v.begin() + at);
        return mat_vec(R, sub_cols(PhiT, ht, at), frob_vec(W, l));
    };
    auto is_alt = [&](const CMat& Vphi, bool with_f) {
        for (int i = 0; i < a; ++i)
            for (int k = i + 1; k < a; ++k) {
                auto v = phi(Vphi, unit(i), unit(k));
                for (int j = at; j < ht; ++j)
                    if (!R.is_zero(v[j])) return false;
                if (!vec_eq(vinv_T(v), phi(Vphi, column(PhiD, i), column(PhiD, k)))) return false;
            }
        if (!with_f) return true;
        for (int i = 0; i < h; ++i)
            for (int k = 0; k < a; ++k)
                if (!vec_eq(apply_T(FsT, phi(Vphi, unit(i), unit(k))), phi(Vphi, column(FsD, i), column(PhiD, k))))
                    return false;
        return true;
    };

    UniversalPropertyReport rep;
    const int slots = R.slot_count();
    std::set<std::vector<std::int64_t>> alt;
    std::vector<CMat> homs;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        CMat M = matrix_at(idx);
        if (is_hom(M)) homs.push_back(M);
        if (is_alt(M, false)) {
            ++rep.alt_v_only;
            if (is_alt(M, true)) alt.insert(encode(M, slots));
        }
    }
    rep.hom_count = homs.size();
    rep.alt_count = alt.size();

    // g -> g o lambda, lambda(x, y) = x ^ y.
    std::set<std::vector<std::int64_t>> image;
    bool into = true;
    for (const auto& G : homs) {
        CMat Vphi = mat_zero(R, ht, H);
        for (int i = 0; i < h; ++i)
            for (int k = i + 1; k < h; ++k) {
                auto lam = wedge_coords(R, basis, unit(i), unit(k));
                auto v = mat_vec(R, G, lam);
                int col = static_cast<int>(std::find(basis.begin(), basis.end(), std::vector<int>{i, k}) - basis.begin());
                for (int j = 0; j < ht; ++j) Vphi(j, col) = v[j];
            }
        auto key = encode(Vphi, slots);
        if (!alt.count(key)) into = false;
        image.insert(key);
    }
    rep.composition_bijective = into && image.size() == homs.size() && image.size() == alt.size();
    if (target.rank_L == E.rank_L && target.rank_T == E.rank_T && mat_eq(W, target.structural, E.structural)) {
        auto I = mat_identity(R, H);
        rep.identity_is_lambda = is_hom(I) && alt.count(encode(I, slots)) > 0;
    }
    return rep;
}

Display multiplicative_display(WittRingPtr W)
{
    WMat S = mat_identity(*W, 1);
    return make_display(std::move(W), 0, 1, std::move(S));
}

Display etale_display(WittRingPtr W)
{
    WMat S = mat_identity(*W, 1);
    return make_display(std::move(W), 1, 0, std::move(S));
}

Display supersingular_display(WittRingPtr W)
{
    WMat S = mat_zero(*W, 2, 2);
    S(0, 1) = W->one();
    S(1, 0) = W->one();
    return make_display(std::move(W), 1, 1, std::move(S));
}

Display zero_display(WittRingPtr W) { return make_display(std::move(W), 0, 0, WMat(0, 0, WVec{})); }

}  // namespace wittforge
