#include "doctest.h"
#include "wittforge/dieudonne.hpp"

using namespace wittforge;

namespace {
CoeffRingPtr witt(std::int64_t p, int s, int n, int f = 1)
{
    return std::make_shared<const CoeffRing>(ChainRing::galois(p, s, n), f, 1);
}
}  // namespace

TEST_CASE("validation examples")
{
    auto R = witt(3, 1, 2);
    auto ok = make_module(R, mat_scalar(*R, 1, R->p_elem()), mat_identity(*R, 1), R->p_elem());
    CHECK(validate(ok).ok);
    auto bad = make_module(R, mat_identity(*R, 1), mat_identity(*R, 1), R->p_elem());
    CHECK(!validate(bad).ok);
    CHECK(validate(supersingular_module(witt(5, 1, 3)), true).ok);
    CHECK(!validate(etale_module(R, 2), true).ok);
}

TEST_CASE("epsilon search")
{
    auto D = supersingular_module(witt(3, 1, 1));
    auto eps = find_epsilon(D);
    REQUIRE(eps.has_value());
    CHECK((*eps)[0] == D.ring->one());
    auto L = lubin_tate_module(witt(3, 1, 2), 4);
    auto e2 = find_epsilon(L);
    REQUIRE(e2.has_value());
    auto B = epsilon_basis(L, *e2);
    CHECK(mat_eq(*L.ring, B, mat_identity(*L.ring, 4)));
}

TEST_CASE("exterior powers of Lubin-Tate modules")
{
    for (auto R : {witt(3, 1, 2), witt(2, 2, 2, 2)}) {
        for (int h = 2; h <= 4; ++h) {
            auto D = lubin_tate_module(R, h);
            REQUIRE(validate(D, true).ok);
            for (int j = 1; j <= h; ++j) {
                auto E = exterior_power(D, j);
                CHECK(validate(E.module).ok);
                CHECK(upsilon_det_identity(D, E));
                CHECK(phi_uniqueness(E));
                CHECK(order_exponent(D, j) == R->level() * binomial(h, j));
                auto dim = dimension(E.module);
                CHECK(dim.value == binomial(h - 1, j - 1));
                if (j == 1) {
                    CHECK(mat_eq(*R, E.module.F.A, D.F.A));
                    CHECK(mat_eq(*R, E.module.V.A, D.V.A));
                }
            }
            CHECK(order_exponent(D, h + 1) == 0);
        }
    }
}

TEST_CASE("equal characteristic coefficients")
{
    auto R = std::make_shared<const CoeffRing>(ChainRing::equal_char(3, 1, 3));
    for (int h = 2; h <= 4; ++h) {
        auto D = lubin_tate_module(R, h);
        REQUIRE(validate(D, true).ok);
        for (int j = 1; j <= h; ++j) CHECK(dimension(exterior_power(D, j).module).value == binomial(h - 1, j - 1));
    }
}

TEST_CASE("F- and V-diagrams")
{
    auto D = supersingular_module(witt(3, 1, 1));
    auto E = exterior_power(D, 2);
    auto rep = verify_diagrams(D, E, -1);
    CHECK(rep.checked == 81);
    CHECK(rep.ok());
    auto L = lubin_tate_module(witt(3, 1, 2), 3);
    auto rep2 = verify_diagrams(L, exterior_power(L, 2), 200, 9);
    CHECK(rep2.ok());
    // top power: Upsilon = det V, Phi = p / det V
    auto top = exterior_power(D, 2);
    CHECK(top.module.V.A(0, 0) == prod_det(*D.ring, D.V.A));
}

TEST_CASE("general modules via the etale-connected split")
{
    auto R = witt(3, 1, 2);
    auto ss = supersingular_module(R);
    auto et = etale_module(R, 1);
    PMat F = mat_zero(*R, 3, 3), V = mat_zero(*R, 3, 3);
    F(0, 0) = et.F.A(0, 0);
    V(0, 0) = et.V.A(0, 0);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            F(1 + a, 1 + b) = ss.F.A(a, b);
            V(1 + a, 1 + b) = ss.V.A(a, b);
        }
    auto D = make_module(R, F, V, R->p_elem());
    REQUIRE(validate(D).ok);
    auto sp = split_connected_etale(D);
    CHECK(sp.etale_basis.cols == 1);
    for (int j = 1; j <= 3; ++j) {
        auto E = exterior_power(D, j);
        CHECK(E.etale_rank == 1);
        CHECK(verify_diagrams(D, E, 100, 3).ok());
    }
    auto Et = exterior_power(etale_module(R, 2), 2);
    CHECK(dimension(Et.module).value == 0);
}

TEST_CASE("idempotent decomposition")
{
    auto R = witt(2, 2, 2, 2);
    auto D = lubin_tate_module(R, 3);
    auto d = decompose_by_idempotents(D);
    CHECK(d.f == 2);
    CHECK(has_scalar_action(d));
    CHECK(d.tangent_lengths[0] == 1);
    auto d1 = decompose_by_idempotents(supersingular_module(witt(3, 1, 2)));
    CHECK(d1.f == 1);
}

TEST_CASE("level tower")
{
    for (int h : {2, 3}) {
        auto D = lubin_tate_module(witt(3, 1, 2), h);
        for (int j = 1; j <= h; ++j) {
            auto rep = tower_check(D, j, 1, 1);
            CHECK(rep.ok());
            CHECK(rep.ker_size == static_cast<std::uint64_t>(ipow(3, static_cast<int>(binomial(h, j)))));
        }
    }
    auto D = supersingular_module(witt(3, 1, 3));
    CHECK(order_exponent(D, 2) == order_exponent(reduce_module(D, 1), 2) + order_exponent(reduce_module(D, 2), 2));
    // reduction commutes with the exterior power
    auto E = exterior_power(D, 2);
    auto E1 = exterior_power(reduce_module(D, 1), 2);
    CHECK(mat_eq(*E1.module.ring, pmat_reduce(*D.ring, *E1.module.ring, E.module.F.A), E1.module.F.A));
}
