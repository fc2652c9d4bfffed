#include "doctest.h"
#include "wittforge/oracle_ring.hpp"
#include "wittforge/witt.hpp"

using namespace wittforge;

TEST_CASE("structure table small cases")
{
    IntDomain Z;
    auto t = build_witt_table(2, 2);
    Poly<IntDomain> expect;
    Mono a0, b0, a1, b1, ab;
    a1.set(2, 1);
    b1.set(3, 1);
    ab.set(0, 1);
    ab.set(1, 1);
    poly_add_term(Z, expect, a1, mpz_class(1));
    poly_add_term(Z, expect, b1, mpz_class(1));
    poly_add_term(Z, expect, ab, mpz_class(-1));
    CHECK(poly_equal(Z, t.sum[1], expect));
    CHECK(verify_witt_table(t).ok);
    CHECK(verify_frobenius_collapse(t).ok);
    CHECK(verify_witt_table(build_witt_table(3, 3)).ok);
}

TEST_CASE("json roundtrip")
{
    auto t = build_witt_table(3, 2);
    auto u = table_from_json(table_to_json(t));
    IntDomain Z;
    for (int n = 0; n < 2; ++n) CHECK(poly_equal(Z, t.prod[n], u.prod[n]));
}

TEST_CASE("W_2(F_3) addition oracle")
{
    auto F3 = ChainRing::galois(3, 1, 1);
    auto W = classical_witt(F3, 3, 2);
    auto one = W.one();
    auto s = W.add(one, one);
    CHECK(s[0] == F3->from_int(2));
    CHECK(s[1] == F3->from_int(1));
    CHECK(W.eq(W.add(s, W.zero()), s));
    CHECK(W.eq(W.from_int(2), s));
}

TEST_CASE("ghost over the integers")
{
    auto O = std::make_shared<const OracleRing>(NumberField::rationals(3), 0);
    auto W = classical_witt(O, 3, 2);
    auto g = W.ghost({O->from_int(2), O->from_int(-2)});
    CHECK(O->eq(g[0], O->from_int(2)));
    CHECK(O->eq(g[1], O->from_int(2)));
    auto O2 = std::make_shared<const OracleRing>(NumberField::rationals(2), 0);
    auto W2 = classical_witt(O2, 2, 2);
    auto h = W2.ghost({O2->from_int(1), O2->from_int(1)});
    CHECK(O2->eq(h[1], O2->from_int(3)));
}

TEST_CASE("p = 2 negation is not coordinatewise")
{
    auto F2 = ChainRing::galois(2, 1, 1);
    auto W = classical_witt(F2, 2, 2);
    auto m1 = W.neg(W.one());
    CHECK(W.is_zero(W.add(m1, W.one())));
    CHECK(m1[1] == F2->one());
}

TEST_CASE("Teichmueller multiplicativity over F_9")
{
    auto F9 = ChainRing::galois(3, 2, 1);
    auto W = classical_witt(F9, 3, 3);
    for (std::uint64_t i = 0; i < 9; ++i)
        for (std::uint64_t j = 0; j < 9; ++j) {
            auto a = F9->element_at(i), b = F9->element_at(j);
            CHECK(W.eq(W.mul(W.teichmuller(a), W.teichmuller(b)), W.teichmuller(F9->mul(a, b))));
        }
}

TEST_CASE("Artin-Hasse series integrality and multiplicativity")
{
    auto s = artin_hasse_series(2, 8);
    for (auto& c : s) CHECK(mpz_odd_p(c.get_den_mpz_t()));
    CHECK(s[1] == 1);
    auto R = ChainRing::equal_char(3, 1, 3);  // F_3[u]/u^3
    auto W = classical_witt(R, 3, 3);
    std::mt19937_64 rng(5);
    for (int t = 0; t < 10; ++t) {
        auto x = W.random(rng), y = W.random(rng);
        auto ex = artin_hasse_eval(W, x, 9), ey = artin_hasse_eval(W, y, 9), exy = artin_hasse_eval(W, W.add(x, y), 9);
        std::vector<CElem> prod(9, R->zero());
        for (int i = 0; i < 9; ++i)
            for (int j = 0; i + j < 9; ++j) prod[i + j] = R->add(prod[i + j], R->mul(ex[i], ey[j]));
        CHECK(prod == exy);
    }
}
