#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "doublestar/doublestar.hpp"

namespace doublestar {

enum class Verdict { Yes, No, Unknown };

struct SearchStats {
    std::uint64_t nodes = 0;  // edge assignments attempted
    std::uint64_t prunes = 0; // assignments that completed a monochromatic copy
    double wall_seconds = 0;  // not deterministic; reporting keeps it off stdout
};

// Does some 2-colouring of K_n avoid a monochromatic copy of the double
// star? Exhaustive DFS over edges in lexicographic order, edge (0,1) fixed
// Red (colour swap symmetry), branches Red before Blue, pruning as soon as
// the partial colour graph contains a copy. The tree splits into independent
// tasks at a fixed edge-prefix depth; tasks are merged in prefix order, so
// the verdict, any witness, and the reported stats are identical for every
// thread count. `budget` caps the nodes of each task (0 = unlimited); a task
// over budget makes the answer Unknown unless an earlier task said Yes.
// Reported stats cover the tasks a sequential run would execute: everything
// up to and including the first Yes task, or all tasks otherwise.
struct SearchResult {
    Verdict verdict;
    std::optional<Colouring2> witness; // good colouring, present iff Yes
    SearchStats stats;
};
SearchResult exists_good_colouring(int n, const DoubleStarSpec& spec, std::uint64_t budget = 0, int threads = 1,
                                   int split_depth = 12);

// Climb n = r_b .. max_n, reusing the canonical witness at n = r_b - 1.
// The first exhausted level pins the Ramsey number exactly; Unknown or
// running past max_n leaves it undetermined.
struct LevelReport {
    int n;
    Verdict verdict;
    bool canonical; // witness came from the construction, no search ran
    std::uint64_t nodes;
    std::uint64_t prunes;
};

struct SearchOutcome {
    DoubleStarSpec spec;
    std::optional<int> ramsey_value;
    std::optional<int> exhausted_at;
    std::map<int, Colouring2> witnesses; // n -> good colouring of K_n
    std::vector<LevelReport> levels;
    SearchStats stats;
};
SearchOutcome ramsey_exact(const DoubleStarSpec& spec, int max_n, std::uint64_t budget = 0, int threads = 1);

// Seeded local search for a single good colouring of K_n: start uniformly
// random, repeatedly apply the edge flip that lowers the number of feasible
// monochromatic centre pairs the most (ties to the lowest edge index),
// restart from fresh random bits when no flip strictly improves. Each flip
// or restart consumes one iteration. Deterministic in (seed, iterations).
std::optional<Colouring2> random_witness_search(int n, const DoubleStarSpec& spec, std::uint64_t seed,
                                                std::uint64_t iterations);

} // namespace doublestar
