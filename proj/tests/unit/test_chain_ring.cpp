#include "doctest.h"
#include "wittforge/chain_ring.hpp"
#include "wittforge/number_field.hpp"

using namespace wittforge;

TEST_CASE("galois ring arithmetic and Frobenius")
{
    auto R = ChainRing::galois(3, 2, 2);  // W_2(F_9)
    CHECK(R->cardinality() == 81);
    std::mt19937_64 rng(1);
    for (int t = 0; t < 200; ++t) {
        auto a = R->random(rng), b = R->random(rng);
        CHECK(R->frob(R->mul(a, b)) == R->mul(R->frob(a), R->frob(b)));
        CHECK(R->frob(R->add(a, b)) == R->add(R->frob(a), R->frob(b)));
        CHECK(R->frob(a, 2) == a);
        if (R->is_unit(a)) CHECK(R->is_one(R->mul(a, R->inv(a))));
    }
    // sigma lifts x -> x^3 on the residue field
    auto x = R->gen();
    auto k = R->residue_field();
    CHECK(R->reduce_to(R->frob(x), *k) == k->pow(R->reduce_to(x, *k), 3));
}

TEST_CASE("ramified ring valuation and division")
{
    auto R = ChainRing::ramified(2, 1, {-2, 0, 1}, 4);  // Z_2[y]/(y^2-2) mod y^4
    CHECK(R->cardinality() == 16);
    auto y = R->uniformizer();
    CHECK(R->valuation(R->from_int(2)) == 2);
    CHECK(R->mul(y, y) == R->from_int(2));
    CHECK(R->is_zero(R->uniformizer_pow(4)));
    for (std::uint64_t i = 0; i < R->cardinality(); ++i) {
        auto a = R->element_at(i);
        if (R->valuation(a) >= 1 && R->valuation(a) < 4) CHECK(R->mul(R->div_uniformizer(a), y) == a);
    }
}

TEST_CASE("equal characteristic ring")
{
    auto R = ChainRing::equal_char(2, 2, 3);  // F_4[y]/y^3
    CHECK(R->cardinality() == 64);
    CHECK(R->char_p());
    CHECK(R->is_zero(R->from_int(2)));
    CHECK(R->valuation(R->uniformizer()) == 1);
}

TEST_CASE("parse and print roundtrip")
{
    auto R = ChainRing::galois(5, 2, 3);
    std::mt19937_64 rng(7);
    for (int t = 0; t < 50; ++t) {
        auto a = R->random(rng);
        CHECK(R->parse(R->to_string(a)) == a);
    }
}
