#include "wittforge/semilinear.hpp"

#include <stdexcept>

namespace wittforge {

PMat mat_sigma(const CoeffRing& R, const PMat& m, int t)
{
    if (t == 0) return m;
    PMat r = m;
    for (auto& e : r.a) e = R.sigma(e, t);
    return r;
}

PVec vec_sigma(const CoeffRing& R, const PVec& v, int t)
{
    PVec r = v;
    if (t != 0)
        for (auto& e : r) e = R.sigma(e, t);
    return r;
}

PVec sl_apply(const CoeffRing& R, const SemilinearMap& f, const PVec& v)
{
    return mat_vec(R, f.A, vec_sigma(R, v, f.twist));
}

SemilinearMap sl_compose(const CoeffRing& R, const SemilinearMap& f, const SemilinearMap& g)
{
    return {mat_mul(R, f.A, mat_sigma(R, g.A, f.twist)), f.twist + g.twist};
}

SemilinearMap sl_power(const CoeffRing& R, const SemilinearMap& f, int k)
{
    if (f.A.rows != f.A.cols) throw std::invalid_argument("semilinear power of a non-square map");
    SemilinearMap r{mat_identity(R, f.A.rows), 0};
    for (int i = 0; i < k; ++i) r = sl_compose(R, r, f);
    return r;
}

SemilinearMap sl_exterior_power(const CoeffRing& R, const SemilinearMap& f, int r)
{
    if (f.A.rows != f.A.cols) throw std::invalid_argument("exterior power of a non-square map");
    if (r < 1 || r > f.A.rows) throw std::invalid_argument("exterior power: r out of range");
    // Minors are computed componentwise; the compound of a product is the
    // product of the compounds.
    std::vector<CMat> comps;
    for (int i = 0; i < R.factors(); ++i) comps.push_back(compound(R.base(), component_matrix(R, f.A, i), r));
    return {assemble_components(R, comps), f.twist};
}

bool sl_eq(const CoeffRing& R, const SemilinearMap& f, const SemilinearMap& g)
{
    return f.twist == g.twist && mat_eq(R, f.A, g.A);
}

CMat component_matrix(const CoeffRing& R, const PMat& m, int i)
{
    (void)R;
    return mat_map<CElem>(m, [i](const PElem& e) { return e.c[i]; });
}

PMat assemble_components(const CoeffRing& R, const std::vector<CMat>& comps)
{
    if (static_cast<int>(comps.size()) != R.factors()) throw std::invalid_argument("component count mismatch");
    PMat m(comps[0].rows, comps[0].cols, R.zero());
    for (int i = 0; i < R.factors(); ++i) {
        if (comps[i].rows != m.rows || comps[i].cols != m.cols) throw std::invalid_argument("component shape mismatch");
        for (std::size_t k = 0; k < m.a.size(); ++k) m.a[k].c[i] = comps[i].a[k];
    }
    return m;
}

namespace {

void swap_rows(CMat& m, int a, int b)
{
    if (a == b) return;
    for (int j = 0; j < m.cols; ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(CMat& m, int a, int b)
{
    if (a == b) return;
    for (int i = 0; i < m.rows; ++i) std::swap(m(i, a), m(i, b));
}

// row_dst -= t * row_src
void row_axpy(const ChainRing& R, CMat& m, int dst, int src, const CElem& t)
{
    for (int j = 0; j < m.cols; ++j) m(dst, j) = R.sub(m(dst, j), R.mul(t, m(src, j)));
}

void col_axpy(const ChainRing& R, CMat& m, int dst, int src, const CElem& t)
{
    for (int i = 0; i < m.rows; ++i) m(i, dst) = R.sub(m(i, dst), R.mul(m(i, src), t));
}

}  // namespace

SmithForm smith_form(const ChainRing& R, const CMat& A)
{
    const int m = A.rows, n = A.cols, top = R.n();
    SmithForm s{mat_identity(R, m), mat_identity(R, n), A, {}};
    CMat& D = s.D;
    const int k_max = std::min(m, n);
    for (int k = 0; k < k_max; ++k) {
        // Minimal valuation, ties by lowest (row, col).
        int bi = -1, bj = -1, bv = top;
        for (int i = k; i < m; ++i)
            for (int j = k; j < n; ++j) {
                const int v = R.valuation(D(i, j));
                if (v < bv) {
                    bv = v;
                    bi = i;
                    bj = j;
                }
            }
        if (bi < 0) {
            for (int r = k; r < k_max; ++r) s.diag.push_back(top);
            break;
        }
        swap_rows(D, k, bi);
        swap_rows(s.U, k, bi);
        swap_cols(D, k, bj);
        swap_cols(s.V, k, bj);
        const CElem yv = R.uniformizer_pow(bv);
        const CElem unit = R.div(D(k, k), yv);
        const CElem uinv = R.inv(unit);
        for (int i = 0; i < m; ++i) D(i, k) = R.mul(D(i, k), uinv);
        for (int i = 0; i < n; ++i) s.V(i, k) = R.mul(s.V(i, k), uinv);
        for (int i = k + 1; i < m; ++i) {
            if (R.is_zero(D(i, k))) continue;
            const CElem t = R.div(D(i, k), D(k, k));
            row_axpy(R, D, i, k, t);
            row_axpy(R, s.U, i, k, t);
        }
        for (int j = k + 1; j < n; ++j) {
            if (R.is_zero(D(k, j))) continue;
            const CElem t = R.div(D(k, j), D(k, k));
            col_axpy(R, D, j, k, t);
            col_axpy(R, s.V, j, k, t);
        }
        s.diag.push_back(bv);
    }
    return s;
}

std::vector<int> elementary_divisors(const ChainRing& R, const CMat& A)
{
    return smith_form(R, A).diag;
}

int coker_length(const ChainRing& R, const CMat& A)
{
    int len = 0;
    for (int d : elementary_divisors(R, A)) len += std::min(d, R.n());
    return len + R.n() * (A.rows - std::min(A.rows, A.cols));
}

int ker_length(const ChainRing& R, const CMat& A)
{
    int len = 0;
    for (int d : elementary_divisors(R, A)) len += std::min(d, R.n());
    return len + R.n() * (A.cols - std::min(A.rows, A.cols));
}

int coker_length(const CoeffRing& R, const PMat& A)
{
    int len = 0;
    for (int i = 0; i < R.factors(); ++i) len += coker_length(R.base(), component_matrix(R, A, i));
    return len;
}

int ker_length(const CoeffRing& R, const PMat& A)
{
    int len = 0;
    for (int i = 0; i < R.factors(); ++i) len += ker_length(R.base(), component_matrix(R, A, i));
    return len;
}

CElem chain_det(const ChainRing& R, const CMat& A0)
{
    if (A0.rows != A0.cols) throw std::invalid_argument("det: matrix not square");
    CMat A = A0;
    const int n = A.rows;
    CElem d = R.one();
    for (int k = 0; k < n; ++k) {
        int bi = -1, bv = R.n();
        for (int i = k; i < n; ++i) {
            const int v = R.valuation(A(i, k));
            if (v < bv) {
                bv = v;
                bi = i;
            }
        }
        if (bi < 0) return R.zero();
        if (bi != k) {
            swap_rows(A, k, bi);
            d = R.neg(d);
        }
        for (int i = k + 1; i < n; ++i)
            if (!R.is_zero(A(i, k))) row_axpy(R, A, i, k, R.div(A(i, k), A(k, k)));
        d = R.mul(d, A(k, k));
    }
    return d;
}

PElem prod_det(const CoeffRing& R, const PMat& A)
{
    PElem d;
    for (int i = 0; i < R.factors(); ++i) d.c[i] = chain_det(R.base(), component_matrix(R, A, i));
    return d;
}

PMat prod_inverse(const CoeffRing& R, const PMat& A)
{
    std::vector<CMat> comps;
    for (int i = 0; i < R.factors(); ++i) comps.push_back(mat_inverse(R.base(), component_matrix(R, A, i)));
    return assemble_components(R, comps);
}

std::optional<std::vector<CElem>> chain_solve(const ChainRing& R, const CMat& A, const std::vector<CElem>& b)
{
    if (static_cast<int>(b.size()) != A.rows) throw std::invalid_argument("solve: shape mismatch");
    auto s = smith_form(R, A);
    auto c = mat_vec(R, s.U, b);
    std::vector<CElem> y(A.cols, R.zero());
    for (int i = 0; i < A.rows; ++i) {
        const int d = i < static_cast<int>(s.diag.size()) ? s.diag[i] : R.n();
        if (R.valuation(c[i]) < d) return std::nullopt;
        if (i < A.cols && d < R.n()) y[i] = R.div(c[i], R.uniformizer_pow(d));
    }
    return mat_vec(R, s.V, y);
}

std::optional<PMat> prod_solve(const CoeffRing& R, const PMat& A, const PMat& B)
{
    if (A.rows != B.rows) throw std::invalid_argument("solve: shape mismatch");
    PMat X(A.cols, B.cols, R.zero());
    for (int comp = 0; comp < R.factors(); ++comp) {
        CMat Ac = component_matrix(R, A, comp);
        for (int j = 0; j < B.cols; ++j) {
            std::vector<CElem> b(B.rows);
            for (int i = 0; i < B.rows; ++i) b[i] = B(i, j).c[comp];
            auto x = chain_solve(R.base(), Ac, b);
            if (!x) return std::nullopt;
            for (int i = 0; i < A.cols; ++i) X(i, j).c[comp] = (*x)[i];
        }
    }
    return X;
}

bool twisted_nilpotency(const CoeffRing& R, const SemilinearMap& f, int bound)
{
    if (f.A.rows != f.A.cols) throw std::invalid_argument("nilpotency test of a non-square map");
    SemilinearMap g{mat_identity(R, f.A.rows), 0};
    for (int i = 0; i < bound; ++i) {
        g = sl_compose(R, f, g);
        if (mat_is_zero(R, g.A)) return true;
    }
    return mat_is_zero(R, g.A);
}

PMat pmat_from_strings(const CoeffRing& R, const std::vector<std::vector<std::string>>& rows)
{
    const int r = static_cast<int>(rows.size());
    const int c = r ? static_cast<int>(rows[0].size()) : 0;
    PMat m(r, c, R.zero());
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c) throw std::invalid_argument("ragged matrix");
        for (int j = 0; j < c; ++j) m(i, j) = R.parse(rows[i][j]);
    }
    return m;
}

std::vector<std::vector<std::string>> pmat_to_strings(const CoeffRing& R, const PMat& m)
{
    std::vector<std::vector<std::string>> out(m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) out[i].push_back(R.to_string(m(i, j)));
    return out;
}

PMat pmat_reduce(const CoeffRing& from, const CoeffRing& to, const PMat& m)
{
    return mat_map<PElem>(m, [&](const PElem& e) { return from.reduce_to(e, to); });
}

}  // namespace wittforge
