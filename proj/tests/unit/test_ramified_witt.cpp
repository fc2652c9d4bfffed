#include "doctest.h"
#include "wittforge/oracle_ring.hpp"
#include "wittforge/ramified_witt.hpp"

using namespace wittforge;

namespace {
const BaseDVR kB221{2, 1, {-2, 0, 1}};
const BaseDVR kB312{3, 2, {-3, 1}};
const BaseDVR kB222{2, 2, {2, 2, 1}};
}  // namespace

TEST_CASE("ramified tables satisfy the ghost identities")
{
    for (const auto& b : {kB221, kB312, kB222}) {
        auto t = build_ramified_table(b, 3);
        CHECK(verify_ramified_table(t).ok);
        CHECK(verify_ramified_frobenius_collapse(t).ok);
        CHECK(t.sum[0].size() == 2);
    }
}

TEST_CASE("O = Z_p reproduces the classical table")
{
    auto t = build_ramified_table(BaseDVR::unramified(3, 1), 3);
    auto c = compare_with_classical(t);
    CHECK_MESSAGE(c.ok, c.detail);
}

TEST_CASE("F_pi V_pi = pi on W_{O,2}(F_4)")
{
    for (const auto& b : {kB221, kB222}) {
        auto k = ChainRing::galois(2, 2, 1);
        auto W = ramified_witt(k, b, 2);
        CHECK(W.frob_componentwise());
        for (std::uint64_t i = 0; i < 4; ++i)
            for (std::uint64_t j = 0; j < 4; ++j) {
                auto x = typename decltype(W)::Elem{k->element_at(i), k->element_at(j)};
                auto pix = W.mul(W.uniformizer(), x);
                CHECK(W.eq(W.frob(W.ver(x)), pix));
                CHECK(W.eq(W.ver(W.frob(x)), pix));
            }
    }
}

TEST_CASE("V_pi(F_pi(x) y) = x V_pi(y)")
{
    auto R = ChainRing::equal_char(3, 2, 2);
    auto W = ramified_witt(R, kB312, 3);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 30; ++t) {
        auto x = W.random(rng), y = W.random(rng);
        CHECK(W.eq(W.ver(W.mul(W.frob(x), y)), W.mul(x, W.ver(y))));
    }
}

TEST_CASE("mu is ghost compatible and preserves Teichmueller lifts")
{
    for (const auto& b : {kB221, kB312, kB222}) {
        CHECK(verify_mu_table(*mu_table(b, 2)).ok);
        NumberField K = b.field();
        auto O = std::make_shared<const OracleRing>(K, 3);
        const int m = 2, len = b.f * (m - 1) + 1;
        auto Wc = classical_witt(O, b.p, len);
        auto Wr = ramified_witt(O, b, m);
        std::mt19937_64 rng(11);
        for (int t = 0; t < 5; ++t) {
            auto x = Wc.random(rng);
            auto y = mu_transform(Wc, Wr, b, x);
            auto gx = Wc.ghost(x), gy = Wr.ghost(y);
            for (int n = 0; n < m; ++n) CHECK(O->eq(gy[n], gx[b.f * n]));
        }
        auto k = ChainRing::galois(b.p, b.f, 1);
        auto Wck = classical_witt(k, b.p, len);
        auto Wrk = ramified_witt(k, b, m);
        for (std::uint64_t i = 0; i < k->cardinality(); ++i) {
            auto a = k->element_at(i);
            CHECK(Wrk.eq(mu_transform(Wck, Wrk, b, Wck.teichmuller(a)), Wrk.teichmuller(a)));
        }
    }
}

TEST_CASE("W_O(k) presentations")
{
    auto r = make_WO_of_k(BaseDVR::unramified(3, 1), 1, 2);
    CHECK(r.ring->cardinality() == 9);
    auto r2 = make_WO_of_k(kB221, 1, 2);
    CHECK(r2.ring->cardinality() == 4);
    CHECK(!r2.ring->is_zero(r2.ring->uniformizer()));
    CHECK(r2.ring->is_zero(r2.ring->mul(r2.ring->uniformizer(), r2.ring->uniformizer())));
    CHECK(make_WO_of_k(kB312, 2, 1).ring->cardinality() == 9);
    CHECK_THROWS(make_WO_of_k(kB312, 1, 1));
}
