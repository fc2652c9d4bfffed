#ifndef WITTFORGE_MATRIX_HPP
#define WITTFORGE_MATRIX_HPP

#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace wittforge {

// Dense row-major matrix over any ring exposing zero/one/add/sub/mul/eq.
template <class E>
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<E> a;

    Mat() = default;
    Mat(int r, int c, const E& fill) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, fill) {}
    E& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    const E& operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
};

template <class R>
using MatOf = Mat<typename R::Elem>;

template <class R>
MatOf<R> mat_zero(const R& ring, int r, int c)
{
    return MatOf<R>(r, c, ring.zero());
}

template <class R>
MatOf<R> mat_identity(const R& ring, int n)
{
    auto m = mat_zero(ring, n, n);
    for (int i = 0; i < n; ++i) m(i, i) = ring.one();
    return m;
}

template <class R>
MatOf<R> mat_scalar(const R& ring, int n, const typename R::Elem& c)
{
    auto m = mat_zero(ring, n, n);
    for (int i = 0; i < n; ++i) m(i, i) = c;
    return m;
}

template <class R>
MatOf<R> mat_mul(const R& ring, const MatOf<R>& x, const MatOf<R>& y)
{
    if (x.cols != y.rows) throw std::invalid_argument("matrix product: shape mismatch");
    auto m = mat_zero(ring, x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const auto& xik = x(i, k);
            if (ring.is_zero(xik)) continue;
            for (int j = 0; j < y.cols; ++j) m(i, j) = ring.add(m(i, j), ring.mul(xik, y(k, j)));
        }
    return m;
}

template <class R>
std::vector<typename R::Elem> mat_vec(const R& ring, const MatOf<R>& x, const std::vector<typename R::Elem>& v)
{
    if (x.cols != static_cast<int>(v.size())) throw std::invalid_argument("matrix-vector product: shape mismatch");
    std::vector<typename R::Elem> out(x.rows, ring.zero());
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) out[i] = ring.add(out[i], ring.mul(x(i, k), v[k]));
    return out;
}

template <class R>
MatOf<R> mat_add(const R& ring, const MatOf<R>& x, const MatOf<R>& y)
{
    if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("matrix sum: shape mismatch");
    MatOf<R> m = x;
    for (std::size_t i = 0; i < m.a.size(); ++i) m.a[i] = ring.add(x.a[i], y.a[i]);
    return m;
}

template <class R>
MatOf<R> mat_sub(const R& ring, const MatOf<R>& x, const MatOf<R>& y)
{
    if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("matrix difference: shape mismatch");
    MatOf<R> m = x;
    for (std::size_t i = 0; i < m.a.size(); ++i) m.a[i] = ring.sub(x.a[i], y.a[i]);
    return m;
}

template <class R>
MatOf<R> mat_scale(const R& ring, const typename R::Elem& c, const MatOf<R>& x)
{
    MatOf<R> m = x;
    for (auto& e : m.a) e = ring.mul(c, e);
    return m;
}

template <class R>
bool mat_eq(const R& ring, const MatOf<R>& x, const MatOf<R>& y)
{
    if (x.rows != y.rows || x.cols != y.cols) return false;
    for (std::size_t i = 0; i < x.a.size(); ++i)
        if (!ring.eq(x.a[i], y.a[i])) return false;
    return true;
}

template <class R>
bool mat_is_zero(const R& ring, const MatOf<R>& x)
{
    for (const auto& e : x.a)
        if (!ring.is_zero(e)) return false;
    return true;
}

template <class E>
Mat<E> mat_transpose(const Mat<E>& x)
{
    Mat<E> m;
    m.rows = x.cols;
    m.cols = x.rows;
    m.a.resize(x.a.size());
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) m(j, i) = x(i, j);
    return m;
}

template <class E2, class E, class Fn>
Mat<E2> mat_map(const Mat<E>& x, Fn fn)
{
    Mat<E2> m;
    m.rows = x.rows;
    m.cols = x.cols;
    m.a.reserve(x.a.size());
    for (const auto& e : x.a) m.a.push_back(fn(e));
    return m;
}

template <class E>
Mat<E> mat_block(const Mat<E>& x, int r0, int c0, int nr, int nc)
{
    Mat<E> m;
    m.rows = nr;
    m.cols = nc;
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j) m.a.push_back(x(r0 + i, c0 + j));
    return m;
}

// Determinant by Laplace expansion along rows with memoization on column
// subsets; division-free, so valid over every commutative ring.
template <class R>
typename R::Elem det(const R& ring, const MatOf<R>& m)
{
    if (m.rows != m.cols) throw std::invalid_argument("det: matrix not square");
    const int n = m.rows;
    if (n == 0) return ring.one();
    if (n > 24) throw std::invalid_argument("det: matrix too large for expansion");
    std::unordered_map<unsigned, typename R::Elem> memo;
    // value(row, mask) = det of rows row..n-1 restricted to the columns in mask
    auto rec = [&](auto&& self, int row, unsigned mask) -> typename R::Elem {
        if (row == n) return ring.one();
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        typename R::Elem acc = ring.zero();
        int sign_pos = 0;
        for (int c = 0; c < n; ++c) {
            if (!(mask & (1u << c))) continue;
            const auto& x = m(row, c);
            if (!ring.is_zero(x)) {
                auto t = ring.mul(x, self(self, row + 1, mask & ~(1u << c)));
                acc = (sign_pos % 2 == 0) ? ring.add(acc, t) : ring.sub(acc, t);
            }
            ++sign_pos;
        }
        memo.emplace(mask, acc);
        return acc;
    };
    return rec(rec, 0, (n == 32 ? ~0u : ((1u << n) - 1)));
}

// Strictly increasing r-tuples of {0..h-1} in lexicographic order.
std::vector<std::vector<int>> wedge_basis(int h, int r);
// Position of a strictly increasing tuple in wedge_basis(h, r).
int wedge_index(int h, const std::vector<int>& tuple);
long long binomial(int n, int k);

// r-th compound matrix: entry (I, J) is the minor on rows I and columns J.
template <class R>
MatOf<R> compound(const R& ring, const MatOf<R>& m, int r)
{
    if (r < 0 || r > m.rows || r > m.cols) throw std::invalid_argument("compound: order out of range");
    auto RB = wedge_basis(m.rows, r), CB = wedge_basis(m.cols, r);
    auto out = mat_zero(ring, static_cast<int>(RB.size()), static_cast<int>(CB.size()));
    for (std::size_t I = 0; I < RB.size(); ++I)
        for (std::size_t J = 0; J < CB.size(); ++J) {
            auto sub = mat_zero(ring, r, r);
            for (int a = 0; a < r; ++a)
                for (int b = 0; b < r; ++b) sub(a, b) = m(RB[I][a], CB[J][b]);
            out(static_cast<int>(I), static_cast<int>(J)) = det(ring, sub);
        }
    return out;
}

// Gauss-Jordan inverse with unit pivots; valid over local rings and finite
// products of local rings whose units are detected componentwise.
template <class R>
MatOf<R> mat_inverse(const R& ring, const MatOf<R>& m)
{
    if (m.rows != m.cols) throw std::invalid_argument("inverse: matrix not square");
    const int n = m.rows;
    auto a = m;
    auto inv = mat_identity(ring, n);
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (ring.is_unit(a(r, c))) {
                piv = r;
                break;
            }
        if (piv < 0) {
            // Over a product of local rings a sum of rows may still give a unit.
            for (int r = c + 1; r < n && piv < 0; ++r) {
                auto s = ring.add(a(c, c), a(r, c));
                if (ring.is_unit(s)) {
                    for (int j = 0; j < n; ++j) {
                        a(c, j) = ring.add(a(c, j), a(r, j));
                        inv(c, j) = ring.add(inv(c, j), inv(r, j));
                    }
                    piv = c;
                }
            }
            if (piv < 0) throw std::domain_error("matrix is not invertible");
        }
        if (piv != c)
            for (int j = 0; j < n; ++j) {
                std::swap(a(piv, j), a(c, j));
                std::swap(inv(piv, j), inv(c, j));
            }
        auto pinv = ring.inv(a(c, c));
        for (int j = 0; j < n; ++j) {
            a(c, j) = ring.mul(pinv, a(c, j));
            inv(c, j) = ring.mul(pinv, inv(c, j));
        }
        for (int r = 0; r < n; ++r) {
            if (r == c || ring.is_zero(a(r, c))) continue;
            auto k = a(r, c);
            for (int j = 0; j < n; ++j) {
                a(r, j) = ring.sub(a(r, j), ring.mul(k, a(c, j)));
                inv(r, j) = ring.sub(inv(r, j), ring.mul(k, inv(c, j)));
            }
        }
    }
    return inv;
}

}  // namespace wittforge

#endif
