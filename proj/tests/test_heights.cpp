#include "core/heights.hpp"

#include <doctest.h>

#include <random>

using namespace hc;

namespace {

// random unimodular triple built from elementary column operations
TriangleTriple random_unimodular_triple(std::mt19937_64& rng, int ops = 10)
{
    std::uniform_int_distribution<int> pick(0, 2);
    std::uniform_int_distribution<int> coef(-2, 2);
    std::array<std::array<long, 3>, 3> col{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    for (int k = 0; k < ops; ++k) {
        int i = pick(rng), j = pick(rng);
        if (i == j)
            continue;
        long c = coef(rng);
        bool overflow = false;
        for (int t = 0; t < 3; ++t)
            if (std::abs(col[i][t] + c * col[j][t]) > 60)
                overflow = true;
        if (overflow)
            continue;
        for (int t = 0; t < 3; ++t)
            col[i][t] += c * col[j][t];
    }
    return TriangleTriple(IntVector{col[0][0], col[0][1], col[0][2]},
                          IntVector{col[1][0], col[1][1], col[1][2]},
                          IntVector{col[2][0], col[2][1], col[2][2]});
}

} // namespace

TEST_CASE("quadric pair instances")
{
    QuadricPairInstance def = QuadricPairInstance::preset("default");
    QuadricPairInstance split = QuadricPairInstance::preset("split");
    CHECK(def.q1()[1][1] == -2);
    CHECK(split.q1()[0][1] == 1);
    CHECK_THROWS_AS(QuadricPairInstance::preset("nope"), std::invalid_argument);

    SUBCASE("signature checks reject wrong shapes")
    {
        std::array<std::array<Int, 2>, 2> pos{{{Int(1), Int(0)}, {Int(0), Int(1)}}};
        CHECK_THROWS_AS(QuadricPairInstance(pos, def.q2()), std::invalid_argument);
        std::array<std::array<Int, 4>, 4> degen{};
        degen[0][0] = 1;
        degen[1][1] = -1;
        degen[2][2] = 1;
        CHECK_THROWS_AS(QuadricPairInstance(def.q1(), degen), std::invalid_argument);
    }
}

TEST_CASE("example I height")
{
    QuadricPairInstance inst = QuadricPairInstance::preset("default");
    std::array<std::array<Int, 4>, 2> cols{};
    cols[0][0] = 1; // e1
    cols[1][1] = 1; // e2
    QuadricPoint m0(cols, inst);
    CHECK(ht_ex1_sq(m0) == 2);

    std::array<std::array<Int, 4>, 2> zero{};
    CHECK(ht_ex1_sq_raw(zero) == 0);

    std::array<std::array<Int, 4>, 2> four{};
    four[0][0] = 1;
    four[0][1] = 1;
    four[1][2] = 1;
    four[1][3] = 1;
    CHECK(ht_ex1_sq_raw(four) == 4);

    SUBCASE("constructor validates the matrix equation")
    {
        std::array<std::array<Int, 4>, 2> bad{};
        bad[0][0] = 1;
        bad[1][0] = 1;
        CHECK_THROWS_AS(QuadricPoint(bad, inst), std::invalid_argument);
    }
}

TEST_CASE("example II height")
{
    CHECK(ht_ex2_sq(Splitting(IntVector{1, 0}, IntVector{1, 0}), 1, 1) == 1);
    CHECK(ht_ex2_sq(Splitting(IntVector{1, 1}, IntVector{1, 0}), 1, 1) == 2);
    CHECK(ht_ex2_sq(Splitting(IntVector{1, 0}, IntVector{1, 3}), 2, 1) == 10);
    CHECK_THROWS_AS(Splitting(IntVector{1, 0}, IntVector{0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Splitting(IntVector{2, 0}, IntVector{1, 1}), std::invalid_argument);
}

TEST_CASE("triangle triple heights")
{
    TriangleTriple std_basis(IntVector{1, 0, 0}, IntVector{0, 1, 0}, IntVector{0, 0, 1});
    CHECK(ht1_sq(std_basis) == 1);
    CHECK(ht2_sq(std_basis) == 1);

    TriangleTriple t(IntVector{1, 0, 0}, IntVector{0, 1, 0}, IntVector{1, 1, 1});
    CHECK(ht1_sq(t) == Rat(9, 4));
    CHECK(ht2_sq(t) == Rat(16, 3));

    SUBCASE("product identity")
    {
        std::mt19937_64 rng(5);
        for (int i = 0; i < 100; ++i) {
            TriangleTriple r = random_unimodular_triple(rng);
            Int np = norm_sq(r.v(0)) * norm_sq(r.v(1)) * norm_sq(r.v(2));
            Int wp = wedge_sq_norm(r.v(0), r.v(1)).value().get_num() *
                     wedge_sq_norm(r.v(0), r.v(2)).value().get_num() *
                     wedge_sq_norm(r.v(1), r.v(2)).value().get_num();
            CHECK(ht1_sq(r) * ht2_sq(r) == Rat(np) * Rat(wp));
        }
    }

    SUBCASE("membership test")
    {
        CHECK(ht_ex3_leq(std_basis, 3, 5, Rat(1)));
        CHECK_FALSE(ht_ex3_leq(t, 1, 1, Rat(3))); // height^2 = 12 > 9
        CHECK(ht_ex3_leq(t, 1, 1, Rat(4)));       // 12 <= 16
    }

    SUBCASE("rejects non-unimodular triples")
    {
        CHECK_THROWS_AS(TriangleTriple(IntVector{1, 0, 0}, IntVector{0, 1, 0},
                                       IntVector{1, 1, 2}),
                        std::invalid_argument);
    }
}

TEST_CASE("duality, Hadamard bound and sign invariance on random triples")
{
    std::mt19937_64 rng(20240812);
    for (int i = 0; i < 1000; ++i) {
        TriangleTriple t = random_unimodular_triple(rng, 12);
        Rat h1 = ht1_sq(t), h2 = ht2_sq(t);
        CHECK(h1 >= 1);
        CHECK(h2 >= 1);
        CHECK(ht2_sq(t) == ht1_sq(t.cofactor()));
        TriangleTriple flipped(t.v(0).negated(), t.v(1).negated(), t.v(2).negated());
        CHECK(ht1_sq(flipped) == h1);
        CHECK(ht2_sq(flipped) == h2);
    }
}
