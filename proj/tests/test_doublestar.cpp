#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "doublestar/doublestar.hpp"
#include "oracle.hpp"

using namespace doublestar;

TEST_CASE("spec normalises and validates") {
    DoubleStarSpec s(1, 3);
    CHECK(s.m1 == 3);
    CHECK(s.m2 == 1);
    CHECK(s.vertex_count() == 6);
    CHECK(s.name() == "S(3,1)");
    CHECK(DoubleStarSpec(2, 2) == DoubleStarSpec(2, 2));
    CHECK_THROWS_AS(DoubleStarSpec(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(DoubleStarSpec(-1, 2), std::invalid_argument);
}

TEST_CASE("centre_feasible needs the central edge in the right colour") {
    ColouringBuilder b(6);
    b.fill(Colour::Red);
    b.set(0, 1, Colour::Blue);
    Colouring2 c = b.build();
    DoubleStarSpec spec(2, 1);
    CHECK_THROWS_AS(centre_feasible(c, Colour::Red, 0, 1, spec), std::invalid_argument);
    CHECK(centre_feasible(c, Colour::Red, 2, 3, spec));
}

TEST_CASE("centre_feasible agrees with subset enumeration everywhere") {
    // every colouring of K_5 x every centre pair x both colours, S(2,1) and S(1,1)
    for (DoubleStarSpec spec : {DoubleStarSpec(2, 1), DoubleStarSpec(1, 1)}) {
        for (std::uint64_t bits = 0; bits < (1u << 10); ++bits) {
            Colouring2 c = colouring_from_bits(5, bits);
            for (int v = 0; v < 5; ++v) {
                for (int w = 0; w < 5; ++w) {
                    if (v == w) continue;
                    Colour col = c.edge_colour(v, w);
                    CHECK(centre_feasible(c, col, v, w, spec) == oracle::embeddable_at(c, col, v, w, spec));
                }
            }
        }
    }
}

TEST_CASE("centre_feasible agrees with the oracle on random larger graphs") {
    std::mt19937_64 rng(2026);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 6 + static_cast<int>(rng() % 5); // 6..10
        Colouring2 c = random_colouring(n, rng);
        DoubleStarSpec spec(1 + static_cast<int>(rng() % 3), 1 + static_cast<int>(rng() % 2));
        for (int v = 0; v < n; ++v) {
            for (int w = 0; w < n; ++w) {
                if (v == w) continue;
                Colour col = c.edge_colour(v, w);
                CHECK(centre_feasible(c, col, v, w, spec) == oracle::embeddable_at(c, col, v, w, spec));
            }
        }
    }
}

TEST_CASE("embed_at succeeds exactly at feasible pairs and validates") {
    std::mt19937_64 rng(99);
    int embedded = 0;
    for (int trial = 0; trial < 40; ++trial) {
        int n = 6 + static_cast<int>(rng() % 4);
        Colouring2 c = random_colouring(n, rng);
        DoubleStarSpec spec(2, 2);
        for (int v = 0; v < n; ++v) {
            for (int w = 0; w < n; ++w) {
                if (v == w) continue;
                Colour col = c.edge_colour(v, w);
                if (centre_feasible(c, col, v, w, spec)) {
                    Embedding e = embed_at(c, col, v, w, spec);
                    CHECK(e.centre1 == v);
                    CHECK(e.centre2 == w);
                    CHECK(e.colour == col);
                    CHECK(validate_embedding(c, spec, e));
                    ++embedded;
                } else {
                    CHECK_THROWS_AS(embed_at(c, col, v, w, spec), std::invalid_argument);
                }
            }
        }
    }
    CHECK(embedded > 0); // the sweep actually exercised the embedder
}

TEST_CASE("embed_at picks deterministic lowest-index leaves") {
    // all-red K_6, S(2,1): at centres (1,4) the private neighbours of 1 are
    // none (everything is shared), so leaves1 = two lowest shared = {0,2},
    // then leaves2 = lowest remaining neighbour of 4 = {3}... shared pool is
    // everything, so private-first contributes nothing and the order is by
    // index throughout.
    ColouringBuilder b(6);
    b.fill(Colour::Red);
    Colouring2 c = b.build();
    Embedding e = embed_at(c, Colour::Red, 1, 4, DoubleStarSpec(2, 1));
    CHECK(e.leaves1 == std::vector<int>{0, 2});
    CHECK(e.leaves2 == std::vector<int>{3});
}

TEST_CASE("embed_at prefers private neighbours of the first centre") {
    // K_7: red star edges 0-{1,2,3,4}, 5-{0,6}, nothing else red except 0-5.
    // At red centres (0,5) with S(3,1): N_red(0)={1,2,3,4,5}, N_red(5)={0,6}.
    // All of 1,2,3,4 are private to 0; leaves1 takes the three lowest {1,2,3},
    // leaving 6 for centre 5.
    ColouringBuilder b(7);
    b.fill(Colour::Blue);
    for (int x : {1, 2, 3, 4}) b.set(0, x, Colour::Red);
    b.set(0, 5, Colour::Red);
    b.set(5, 6, Colour::Red);
    Colouring2 c = b.build();
    DoubleStarSpec spec(3, 1);
    REQUIRE(centre_feasible(c, Colour::Red, 0, 5, spec));
    Embedding e = embed_at(c, Colour::Red, 0, 5, spec);
    CHECK(e.leaves1 == std::vector<int>{1, 2, 3});
    CHECK(e.leaves2 == std::vector<int>{6});
}

TEST_CASE("find_monochromatic agrees with the oracle over all of K_4 and K_5") {
    DoubleStarSpec spec(1, 1);
    int k4_missing = 0, k5_missing = 0;
    for (std::uint64_t bits = 0; bits < (1u << 6); ++bits) {
        Colouring2 c = colouring_from_bits(4, bits);
        std::optional<Embedding> e = find_monochromatic(c, spec);
        CHECK(e.has_value() == oracle::contains_copy(c, spec));
        if (e) {
            CHECK(validate_embedding(c, spec, *e));
        } else {
            ++k4_missing;
        }
    }
    for (std::uint64_t bits = 0; bits < (1u << 10); ++bits) {
        Colouring2 c = colouring_from_bits(5, bits);
        std::optional<Embedding> e = find_monochromatic(c, spec);
        CHECK(e.has_value() == oracle::contains_copy(c, spec));
        if (e) {
            CHECK(validate_embedding(c, spec, *e));
        } else {
            ++k5_missing;
        }
    }
    CHECK(k4_missing > 0);  // good colourings of K_4 exist (the canonical one)
    CHECK(k5_missing == 0); // but none on K_5: R(S(1,1)) = 5
}

TEST_CASE("find_monochromatic scans red before blue, centres in order") {
    ColouringBuilder b(6);
    b.fill(Colour::Red);
    Colouring2 c = b.build();
    std::optional<Embedding> e = find_monochromatic(c, DoubleStarSpec(2, 1));
    REQUIRE(e.has_value());
    CHECK(e->colour == Colour::Red);
    // ordered pairs (0,1),(0,2),... : (0,1) infeasible for S(2,1) on K_6?
    // d(0)=5>2, d(1)=5>1, union size 6 >= 5, so (0,1) is already feasible.
    CHECK(e->centre1 == 0);
    CHECK(e->centre2 == 1);
}

TEST_CASE("a too-small host graph never contains a copy") {
    ColouringBuilder b(4);
    b.fill(Colour::Red);
    CHECK_FALSE(find_monochromatic(b.build(), DoubleStarSpec(2, 1)).has_value());
}

TEST_CASE("validate_embedding rejects malformed certificates") {
    ColouringBuilder b(6);
    b.fill(Colour::Red);
    Colouring2 c = b.build();
    DoubleStarSpec spec(2, 1);
    Embedding good{Colour::Red, 0, 1, {2, 3}, {4}};
    CHECK(validate_embedding(c, spec, good));

    Embedding wrong = good;
    wrong.colour = Colour::Blue;
    CHECK_FALSE(validate_embedding(c, spec, wrong)); // colour mismatch

    wrong = good;
    wrong.leaves1 = {2};
    CHECK_FALSE(validate_embedding(c, spec, wrong)); // wrong leaf count

    wrong = good;
    wrong.leaves2 = {3};
    CHECK_FALSE(validate_embedding(c, spec, wrong)); // leaf reused

    wrong = good;
    wrong.leaves2 = {0};
    CHECK_FALSE(validate_embedding(c, spec, wrong)); // centre reused as leaf

    wrong = good;
    wrong.centre2 = 0;
    CHECK_FALSE(validate_embedding(c, spec, wrong)); // centres collide

    wrong = good;
    wrong.leaves2 = {6};
    CHECK_FALSE(validate_embedding(c, spec, wrong)); // out of range
}

TEST_CASE("certificate text lists the copy line by line") {
    Embedding e{Colour::Red, 0, 1, {2, 3}, {4}};
    CHECK(render_certificate(e) == "colour R\ncentre1 0\ncentre2 1\nleaves1 2 3\nleaves2 4\n");
}
