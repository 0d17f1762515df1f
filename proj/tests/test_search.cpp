#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "doublestar/search.hpp"

using namespace doublestar;

namespace {

// No-pruning, no-symmetry ground truth: try every colouring of K_n.
bool good_colouring_exists_by_enumeration(int n, const DoubleStarSpec& spec) {
    std::uint64_t total = std::uint64_t{1} << edge_count(n);
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        if (!find_monochromatic(colouring_from_bits(n, bits), spec)) return true;
    }
    return false;
}

} // namespace

TEST_CASE("worked verdicts for the smallest specs") {
    DoubleStarSpec s21(2, 1), s11(1, 1);

    SearchResult r = exists_good_colouring(5, s21);
    CHECK(r.verdict == Verdict::Yes);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->order() == 5);
    CHECK_FALSE(find_monochromatic(*r.witness, s21).has_value());

    CHECK(exists_good_colouring(6, s21).verdict == Verdict::No);
    CHECK(exists_good_colouring(4, s11).verdict == Verdict::Yes);
    CHECK(exists_good_colouring(5, s11).verdict == Verdict::No);
}

TEST_CASE("search agrees with full enumeration for n <= 6, m1 <= 3") {
    for (int m1 = 1; m1 <= 3; ++m1) {
        for (int m2 = 1; m2 <= m1; ++m2) {
            DoubleStarSpec spec(m1, m2);
            for (int n = 2; n <= 6; ++n) {
                bool expect = good_colouring_exists_by_enumeration(n, spec);
                SearchResult r = exists_good_colouring(n, spec);
                CHECK(r.verdict == (expect ? Verdict::Yes : Verdict::No));
                if (r.witness) CHECK_FALSE(find_monochromatic(*r.witness, spec).has_value());
            }
        }
    }
}

TEST_CASE("verdict, witness, and stats are identical across thread counts") {
    DoubleStarSpec spec(2, 1);
    for (int n : {5, 6}) {
        SearchResult one = exists_good_colouring(n, spec, 0, 1);
        SearchResult four = exists_good_colouring(n, spec, 0, 4);
        CHECK(one.verdict == four.verdict);
        CHECK(one.stats.nodes == four.stats.nodes);
        CHECK(one.stats.prunes == four.stats.prunes);
        CHECK(one.witness.has_value() == four.witness.has_value());
        if (one.witness) CHECK(serialize_colouring(*one.witness) == serialize_colouring(*four.witness));

        SearchResult again = exists_good_colouring(n, spec, 0, 4);
        CHECK(again.stats.nodes == four.stats.nodes);
        CHECK(again.stats.prunes == four.stats.prunes);
    }
}

TEST_CASE("a starved budget yields Unknown, a generous one does not") {
    DoubleStarSpec spec(2, 1);
    // split depth 1 keeps the whole tree inside one budgeted task
    CHECK(exists_good_colouring(6, spec, 2, 1, 1).verdict == Verdict::Unknown);
    CHECK(exists_good_colouring(6, spec, 0, 1, 1).verdict == Verdict::No);
    CHECK(exists_good_colouring(6, spec, 0).verdict == Verdict::No);
}

TEST_CASE("input validation") {
    DoubleStarSpec spec(1, 1);
    CHECK_THROWS_AS(exists_good_colouring(1, spec), std::invalid_argument);
    CHECK_THROWS_AS(exists_good_colouring(65, spec), std::invalid_argument);
    CHECK_THROWS_AS(random_witness_search(65, spec, 0, 10), std::invalid_argument);
}

TEST_CASE("tiny hosts are trivially good, whatever the split depth") {
    DoubleStarSpec spec(3, 3);
    for (int n : {2, 3, 4}) {
        SearchResult r = exists_good_colouring(n, spec); // depth clamps to edge count
        CHECK(r.verdict == Verdict::Yes);
        REQUIRE(r.witness.has_value());
        CHECK_FALSE(find_monochromatic(*r.witness, spec).has_value());
    }
}

TEST_CASE("after a No, every random colouring one level up contains a copy") {
    DoubleStarSpec spec(2, 1);
    REQUIRE(exists_good_colouring(6, spec).verdict == Verdict::No);
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 1000; ++trial) {
        CHECK(find_monochromatic(random_colouring(7, rng), spec).has_value());
    }
}

TEST_CASE("ramsey_exact pins the two known small values") {
    SearchOutcome path = ramsey_exact(DoubleStarSpec(1, 1), 7);
    CHECK(path.ramsey_value == 5);
    CHECK(path.exhausted_at == 5);
    REQUIRE(path.witnesses.count(4) == 1);
    CHECK_FALSE(find_monochromatic(path.witnesses.at(4), DoubleStarSpec(1, 1)).has_value());
    REQUIRE(path.levels.size() == 2);
    CHECK(path.levels[0].n == 4);
    CHECK(path.levels[0].canonical);
    CHECK(path.levels[1].n == 5);
    CHECK(path.levels[1].verdict == Verdict::No);

    SearchOutcome s21 = ramsey_exact(DoubleStarSpec(2, 1), 8);
    CHECK(s21.ramsey_value == 6);
    CHECK(s21.witnesses.count(5) == 1);
}

TEST_CASE("a starved budget never fabricates an answer") {
    // budget can downgrade a level to Unknown but a No it does report is a
    // genuine refutation, so any pinned value must be the true one
    SearchOutcome o = ramsey_exact(DoubleStarSpec(2, 1), 8, 2);
    if (o.ramsey_value) CHECK(*o.ramsey_value == 6);
    CHECK(o.witnesses.count(5) == 1); // canonical witness always recorded
}

TEST_CASE("ramsey_exact stops at max_n without overclaiming") {
    SearchOutcome o = ramsey_exact(DoubleStarSpec(2, 1), 5);
    CHECK_FALSE(o.ramsey_value.has_value());
    CHECK(o.witnesses.count(5) == 1);
}

TEST_CASE("local search finds witnesses where they exist and verifies them") {
    // (3,2): r_b = 9, so K_8 has the canonical witness; local search must
    // find some witness too
    std::optional<Colouring2> w = random_witness_search(8, DoubleStarSpec(3, 2), 0, 100'000);
    REQUIRE(w.has_value());
    CHECK_FALSE(find_monochromatic(*w, DoubleStarSpec(3, 2)).has_value());

    std::optional<Colouring2> small = random_witness_search(5, DoubleStarSpec(2, 1), 1, 10'000);
    REQUIRE(small.has_value());
    CHECK_FALSE(find_monochromatic(*small, DoubleStarSpec(2, 1)).has_value());
}

TEST_CASE("local search cannot find what does not exist") {
    CHECK_FALSE(random_witness_search(6, DoubleStarSpec(2, 1), 3, 3000).has_value());
}

TEST_CASE("local search is deterministic in the seed") {
    auto a = random_witness_search(7, DoubleStarSpec(2, 2), 42, 50'000);
    auto b = random_witness_search(7, DoubleStarSpec(2, 2), 42, 50'000);
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(serialize_colouring(*a) == serialize_colouring(*b));
}
