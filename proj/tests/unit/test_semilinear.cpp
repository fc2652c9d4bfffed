#include <set>

#include "doctest.h"
#include "wittforge/semilinear.hpp"

using namespace wittforge;

namespace {
PMat random_pmat(const CoeffRing& R, int r, int c, std::mt19937_64& rng)
{
    PMat m(r, c, R.zero());
    for (auto& e : m.a) e = R.random(rng);
    return m;
}
}  // namespace

TEST_CASE("wedge basis ordering")
{
    auto B = wedge_basis(4, 2);
    REQUIRE(B.size() == 6);
    CHECK(B[0] == std::vector<int>{0, 1});
    CHECK(B[5] == std::vector<int>{2, 3});
    for (std::size_t i = 0; i < B.size(); ++i) CHECK(wedge_index(4, B[i]) == static_cast<int>(i));
    auto B3 = wedge_basis(5, 3);
    for (std::size_t i = 0; i < B3.size(); ++i) CHECK(wedge_index(5, B3[i]) == static_cast<int>(i));
}

TEST_CASE("product ring sigma")
{
    CoeffRing R(ChainRing::galois(2, 2, 2), 2, 1);
    CHECK(R.sigma_order() == 2);
    CHECK(R.sigma(R.idempotent(1)) == R.idempotent(0));
    CHECK(R.sigma(R.idempotent(0)) == R.idempotent(1));
    std::mt19937_64 rng(2);
    for (int t = 0; t < 50; ++t) {
        auto a = R.random(rng), b = R.random(rng);
        CHECK(R.sigma(R.mul(a, b)) == R.mul(R.sigma(a), R.sigma(b)));
        CHECK(R.sigma(R.sigma(a, 1), -1) == a);
        CHECK(R.sigma(a, R.sigma_order()) == a);
        auto x = R.base().random(rng);
        CHECK(R.sigma(R.embed(x)) == R.embed(R.base().frob(x)));
    }
    CoeffRing H(ChainRing::galois(2, 4, 1), 1, 2);
    CHECK(H.sigma_order() == 2);
}

TEST_CASE("composition laws")
{
    CoeffRing R(ChainRing::galois(3, 2, 2));
    std::mt19937_64 rng(4);
    SemilinearMap id{mat_identity(R, 3), 0};
    for (int t = 0; t < 20; ++t) {
        SemilinearMap a{random_pmat(R, 3, 3, rng), 1}, b{random_pmat(R, 3, 3, rng), -1}, c{random_pmat(R, 3, 3, rng), 1};
        CHECK(sl_eq(R, sl_compose(R, id, a), a));
        CHECK(sl_eq(R, sl_compose(R, sl_compose(R, a, b), c), sl_compose(R, a, sl_compose(R, b, c))));
        PVec v{R.random(rng), R.random(rng), R.random(rng)};
        CHECK(sl_apply(R, sl_compose(R, a, c), v) == sl_apply(R, a, sl_apply(R, c, v)));
        auto ab = sl_compose(R, a, b);
        CHECK(sl_eq(R, sl_exterior_power(R, ab, 2), sl_compose(R, sl_exterior_power(R, a, 2), sl_exterior_power(R, b, 2))));
    }
}

TEST_CASE("exterior power of a map")
{
    CoeffRing R(ChainRing::galois(5, 1, 1));
    std::mt19937_64 rng(8);
    for (int t = 0; t < 20; ++t) {
        SemilinearMap f{random_pmat(R, 3, 3, rng), 1};
        CHECK(sl_eq(R, sl_exterior_power(R, f, 1), f));
        auto top = sl_exterior_power(R, f, 3);
        CHECK(top.A(0, 0) == prod_det(R, f.A));
        auto d = prod_det(R, f.A);
        CHECK(prod_det(R, sl_exterior_power(R, f, 2).A) == R.mul(d, d));
        CHECK(det(R, f.A) == d);
    }
}

TEST_CASE("Smith form against enumeration over Z/9")
{
    auto Z9 = ChainRing::galois(3, 1, 2);
    std::mt19937_64 rng(12);
    CHECK(coker_length(*Z9, mat_identity(*Z9, 3)) == 0);
    for (int t = 0; t < 30; ++t) {
        const int r = 2 + t % 2, c = 2 + (t / 2) % 2;
        CMat A(r, c, Z9->zero());
        for (auto& e : A.a) e = Z9->from_int(static_cast<std::int64_t>(rng() % 9) * (t % 3 == 0 ? 3 : 1));
        auto s = smith_form(*Z9, A);
        CHECK(mat_eq(*Z9, mat_mul(*Z9, mat_mul(*Z9, s.U, A), s.V), s.D));
        std::set<std::vector<std::int64_t>> image;
        std::uint64_t total = 1;
        for (int i = 0; i < c; ++i) total *= 9;
        std::uint64_t kernel = 0;
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            std::vector<CElem> x;
            std::uint64_t k = idx;
            for (int i = 0; i < c; ++i, k /= 9) x.push_back(Z9->from_int(static_cast<std::int64_t>(k % 9)));
            auto y = mat_vec(*Z9, A, x);
            std::vector<std::int64_t> key;
            bool zero = true;
            for (auto& e : y) {
                key.push_back(e.c[0]);
                zero = zero && Z9->is_zero(e);
            }
            kernel += zero;
            image.insert(key);
        }
        std::uint64_t target = 1;
        for (int i = 0; i < r; ++i) target *= 9;
        std::uint64_t coker = target / image.size();
        CHECK(coker == static_cast<std::uint64_t>(ipow(3, coker_length(*Z9, A))));
        CHECK(kernel == static_cast<std::uint64_t>(ipow(3, ker_length(*Z9, A))));
        if (r == c) CHECK(ker_length(*Z9, A) == coker_length(*Z9, A));
    }
}

TEST_CASE("uniformizer diagonal")
{
    auto R = ChainRing::equal_char(3, 1, 3);
    CMat A(2, 2, R->zero());
    A(0, 0) = R->uniformizer();
    A(1, 1) = R->uniformizer_pow(2);
    CHECK(coker_length(*R, A) == 3);
}

TEST_CASE("coker length of a direct sum is the determinant valuation")
{
    CoeffRing R(ChainRing::galois(2, 2, 3));
    std::mt19937_64 rng(21);
    int done = 0;
    while (done < 20) {
        std::vector<PMat> chis;
        int vsum = 0;
        for (int i = 0; i < 3; ++i) {
            chis.push_back(random_pmat(R, 2, 2, rng));
            vsum += R.valuation(prod_det(R, chis.back()));
        }
        if (vsum >= R.level()) continue;
        PMat big(6, 6, R.zero());
        for (int i = 0; i < 3; ++i)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) big(2 * i + a, 2 * i + b) = chis[i](a, b);
        CHECK(coker_length(R, big) == vsum);
        CHECK(R.valuation(prod_det(R, big)) == vsum);
        ++done;
    }
}

TEST_CASE("twisted nilpotency")
{
    CoeffRing R(ChainRing::galois(2, 2, 1));
    CHECK(twisted_nilpotency(R, {mat_zero(R, 3, 3), 1}, 3));
    CHECK(!twisted_nilpotency(R, {mat_identity(R, 3), 1}, 6));
    PMat shift = mat_zero(R, 3, 3);
    shift(1, 0) = R.embed(R.base().gen());
    shift(2, 1) = R.one();
    CHECK(twisted_nilpotency(R, {shift, 1}, 6));
}

TEST_CASE("solve and inverse")
{
    CoeffRing R(ChainRing::galois(3, 1, 3), 2, 1);
    std::mt19937_64 rng(33);
    for (int t = 0; t < 20; ++t) {
        auto A = random_pmat(R, 3, 3, rng);
        auto X = random_pmat(R, 3, 2, rng);
        auto B = mat_mul(R, A, X);
        auto Y = prod_solve(R, A, B);
        REQUIRE(Y.has_value());
        CHECK(mat_eq(R, mat_mul(R, A, *Y), B));
        if (R.is_unit(prod_det(R, A))) CHECK(mat_eq(R, mat_mul(R, A, prod_inverse(R, A)), mat_identity(R, 3)));
    }
}
