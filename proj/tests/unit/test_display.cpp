#include "doctest.h"
#include "wittforge/display.hpp"

using namespace wittforge;

namespace {
CoeffRingPtr witt(std::int64_t p, int s, int n)
{
    return std::make_shared<const CoeffRing>(ChainRing::galois(p, s, n), 1, 1);
}

WittRingPtr wring(std::int64_t p, int s, int m) { return display_witt_ring(ChainRing::galois(p, s, 1), m); }
}  // namespace

TEST_CASE("display validation examples")
{
    auto W = wring(3, 1, 2);
    CHECK(validate(multiplicative_display(W)).ok);
    CHECK(validate(supersingular_display(W)).ok);
    WMat S = mat_identity(*W, 2);
    S(0, 0) = W->from_int(3);
    CHECK(!validate(make_display(W, 1, 1, S)).ok);
    CHECK_THROWS(make_display(W, 1, 1, mat_identity(*W, 3)));
}

TEST_CASE("V sharp and nilpotence")
{
    auto W = wring(5, 1, 2);
    auto vs = v_sharp(multiplicative_display(W));
    CHECK(W->eq(vs.vsharp(0, 0), W->from_int(5)));
    auto m = nilpotence_test(multiplicative_display(W));
    CHECK(m.nilpotent);
    CHECK(m.exponent == 1);
    CHECK(!nilpotence_test(etale_display(W)).nilpotent);
    auto s = nilpotence_test(supersingular_display(W));
    CHECK(s.nilpotent);
    CHECK(s.exponent == 2);
}

TEST_CASE("Witt vectors of a perfect field against the Galois ring")
{
    auto GR = ChainRing::galois(3, 2, 3);
    auto W = wring(3, 2, 3);
    std::mt19937_64 rng(11);
    for (int t = 0; t < 40; ++t) {
        auto x = W->random(rng), y = W->random(rng);
        auto gx = witt_to_galois(*W, *GR, x), gy = witt_to_galois(*W, *GR, y);
        CHECK(W->eq(galois_to_witt(*W, *GR, gx), x));
        CHECK(GR->add(gx, gy) == witt_to_galois(*W, *GR, W->add(x, y)));
        CHECK(GR->mul(gx, gy) == witt_to_galois(*W, *GR, W->mul(x, y)));
        CHECK(GR->frob(gx, 1) == witt_to_galois(*W, *GR, W->frob(x)));
    }
    CHECK(witt_to_galois(*W, *GR, W->from_int(3)) == GR->from_int(3));
}

TEST_CASE("Dieudonne modules to displays and back")
{
    auto R = witt(3, 1, 2);
    auto et = from_dieudonne(etale_module(R, 1));
    CHECK(et.display.rank_T == 0);
    CHECK(!nilpotence_test(et.display).nilpotent);

    auto ss = from_dieudonne(supersingular_module(R));
    CHECK(ss.display.rank_T == 1);
    CHECK(mat_eq(*ss.display.W, ss.display.structural, supersingular_display(ss.display.W).structural));

    for (auto Rk : {witt(3, 1, 2), witt(2, 2, 3), witt(5, 1, 1)}) {
        for (int h = 1; h <= 4; ++h) {
            auto D = lubin_tate_module(Rk, h);
            auto dd = from_dieudonne(D);
            REQUIRE(validate(dd.display).ok);
            CHECK(dd.display.rank_T == 1);
            CHECK(nilpotence_test(dd.display).nilpotent == is_connected(D));
            auto back = to_dieudonne(dd.display);
            auto expect = change_basis(D, dd.iso);
            CHECK(mat_eq(*Rk, back.F.A, expect.F.A));
            CHECK(mat_eq(*Rk, back.V.A, expect.V.A));
        }
    }
    auto mix = from_dieudonne(multiplicative_module(R, 2));
    CHECK(mix.display.rank_T == 2);
    CHECK(nilpotence_test(mix.display).nilpotent);
}

TEST_CASE("display exterior powers: heights and tangent ranks")
{
    for (int h = 1; h <= 5; ++h) {
        auto d = from_dieudonne(lubin_tate_module(witt(3, 1, 2), h)).display;
        for (int r = 1; r <= h; ++r) {
            auto E = exterior_power(d, r);
            CHECK(E.h() == binomial(h, r));
            CHECK(E.rank_T == binomial(h - 1, r - 1));
            CHECK(validate(E).ok);
            CHECK(nilpotence_test(E).nilpotent);
            if (r == 1) CHECK(mat_eq(*d.W, E.structural, d.structural));
            auto M = to_dieudonne(E);
            CHECK(dimension(M).value == binomial(h - 1, r - 1));
        }
        CHECK_THROWS(exterior_power(d, h + 1));
    }
    auto W = wring(3, 1, 1);
    CHECK_THROWS(exterior_power(etale_display(W), 1));
}

TEST_CASE("exterior power does not depend on the normal decomposition")
{
    auto ss = supersingular_display(wring(3, 1, 2));
    auto one = decomposition_independence_check(ss, 2, 1);
    CHECK(one.trials == 1);
    CHECK(one.ok());
    CHECK(decomposition_independence_check(ss, 2, 6, 3).ok());
    auto d3 = from_dieudonne(lubin_tate_module(witt(3, 1, 2), 3)).display;
    for (int r = 1; r <= 3; ++r) {
        auto rep = decomposition_independence_check(d3, r, r == 2 ? 50 : 10, 17 + r);
        CHECK(rep.trials == (r == 2 ? 50 : 10));
        CHECK(rep.ok());
    }
}

TEST_CASE("base change commutes with exterior powers")
{
    auto k = ChainRing::galois(3, 1, 1);
    auto d = from_dieudonne(lubin_tate_module(witt(3, 1, 2), 3)).display;
    auto same = base_change(d, k);
    CHECK(mat_eq(*d.W, same.structural, d.structural));

    auto ss = supersingular_display(d.W);
    auto ss9 = base_change(ss, ChainRing::galois(3, 2, 1));
    CHECK(validate(ss9).ok);
    CHECK(mat_eq(*ss9.W, ss9.structural, supersingular_display(ss9.W).structural));

    for (auto S : {ChainRing::galois(3, 2, 1), ChainRing::equal_char(3, 1, 2)}) {
        auto dS = base_change(d, S);
        CHECK(validate(dS).ok);
        for (int r = 1; r <= 3; ++r) {
            auto a = exterior_power(dS, r);
            auto b = base_change(exterior_power(d, r), S);
            CHECK(mat_eq(*a.W, a.structural, b.structural));
        }
        CHECK(nilpotence_test(dS).nilpotent);
    }
    auto F9 = ChainRing::galois(3, 2, 1);
    auto d9 = base_change(d, F9);
    auto d9e = base_change(d9, ChainRing::equal_char(3, 2, 2));
    CHECK(validate(d9e).ok);
    CHECK_THROWS(ring_hom(*ChainRing::equal_char(3, 1, 2), *ChainRing::equal_char(3, 1, 3)));
    CHECK_THROWS(ring_hom(*F9, *ChainRing::galois(3, 1, 1)));
}

TEST_CASE("display universal property at level 1")
{
    for (auto k : {ChainRing::galois(3, 1, 1), ChainRing::galois(2, 2, 1)}) {
        auto W = display_witt_ring(k, 1);
        auto d = supersingular_display(W);
        auto E = exterior_power(d, 2);
        auto z = universal_property_check(d, zero_display(W));
        CHECK(z.hom_count == 1);
        CHECK(z.alt_count == 1);
        CHECK(z.ok());
        auto self = universal_property_check(d, E);
        CHECK(self.ok());
        CHECK(self.identity_is_lambda);
        CHECK(self.hom_count >= 2);
        for (const auto& t : {d, multiplicative_display(W), etale_display(W)}) {
            auto rep = universal_property_check(d, t);
            CHECK(rep.ok());
            CHECK(rep.alt_count <= rep.alt_v_only);
        }
    }
}
