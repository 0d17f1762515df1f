#include "doublestar/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cassert>
#include <chrono>
#include <random>
#include <stdexcept>
#include <thread>

#include "doublestar/constructions.hpp"

namespace doublestar {

namespace {

constexpr int kMaxSearchVertices = 64; // adjacency rows live in single words here

// Mutable 2-coloured partial graph on <= 64 vertices. Rows are plain words;
// feasible-pair tests reduce to a handful of popcounts, which is what keeps
// the exhaustive search affordable.
struct PartialGraph {
    int n, m1, m2, need;
    std::array<std::array<std::uint64_t, kMaxSearchVertices>, 2> adj{};
    std::array<std::array<int, kMaxSearchVertices>, 2> deg{};

    PartialGraph(int n_, const DoubleStarSpec& spec) : n(n_), m1(spec.m1), m2(spec.m2), need(spec.vertex_count()) {}

    void add(int ci, int u, int v) {
        adj[ci][u] |= std::uint64_t{1} << v;
        adj[ci][v] |= std::uint64_t{1} << u;
        ++deg[ci][u];
        ++deg[ci][v];
    }

    void remove(int ci, int u, int v) {
        adj[ci][u] &= ~(std::uint64_t{1} << v);
        adj[ci][v] &= ~(std::uint64_t{1} << u);
        --deg[ci][u];
        --deg[ci][v];
    }

    bool pair_feasible(int ci, int a, int b) const {
        int da = deg[ci][a], db = deg[ci][b];
        if (!((da > m1 && db > m2) || (db > m1 && da > m2))) return false;
        return std::popcount(adj[ci][a] | adj[ci][b]) >= need;
    }

    // Whether adding edge {u,v} in colour ci completed a copy. Only pairs
    // touching u or v can newly become feasible, everything else kept its
    // degrees and neighbourhoods.
    bool copy_through(int ci, int u, int v) const {
        for (int x : {u, v}) {
            std::uint64_t w = adj[ci][x];
            while (w != 0) {
                int y = std::countr_zero(w);
                if (pair_feasible(ci, x, y)) return true;
                w &= w - 1;
            }
        }
        return false;
    }

    Colouring2 snapshot() const {
        ColouringBuilder b(n);
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                b.set(u, v, adj[0][u] >> v & 1 ? Colour::Red : Colour::Blue);
            }
        }
        return b.build();
    }
};

struct TaskResult {
    Verdict verdict = Verdict::No;
    std::optional<Colouring2> witness;
    std::uint64_t nodes = 0;
    std::uint64_t prunes = 0;
    bool cancelled = false;
};

struct TaskContext {
    const std::vector<std::pair<int, int>>& edges;
    int split_depth;
    std::uint64_t budget;
    std::atomic<std::uint32_t>& min_yes;
    std::uint32_t index;
};

// Depth-first over edges[idx..]; Red branch first. Returns Yes as soon as a
// complete assignment survives every incremental check, Unknown when the
// task's node budget runs dry.
Verdict dfs(PartialGraph& g, const TaskContext& ctx, std::size_t idx, TaskResult& out) {
    if (idx == ctx.edges.size()) {
        out.witness = g.snapshot();
        return Verdict::Yes;
    }
    auto [u, v] = ctx.edges[idx];
    for (int ci : {0, 1}) {
        if (ctx.budget != 0 && out.nodes >= ctx.budget) return Verdict::Unknown;
        ++out.nodes;
        if ((out.nodes & 1023) == 0 && ctx.index > ctx.min_yes.load(std::memory_order_relaxed)) {
            out.cancelled = true;
            return Verdict::Unknown;
        }
        g.add(ci, u, v);
        if (g.copy_through(ci, u, v)) {
            ++out.prunes;
            g.remove(ci, u, v);
            continue;
        }
        Verdict sub = dfs(g, ctx, idx + 1, out);
        g.remove(ci, u, v);
        if (sub != Verdict::No) return sub;
    }
    return Verdict::No;
}

TaskResult run_task(int n, const DoubleStarSpec& spec, const TaskContext& ctx, std::uint32_t prefix_bits) {
    TaskResult out;
    PartialGraph g(n, spec);

    // Replay the prefix this task owns: edge 0 is pinned Red, and edge j
    // takes bit depth-1-j of prefix_bits (0 = Red). The highest bit colours
    // the earliest free edge, so ascending task index is exactly
    // lexicographic prefix order with Red before Blue.
    for (int j = 0; j < ctx.split_depth; ++j) {
        int ci = j == 0 ? 0 : (prefix_bits >> (ctx.split_depth - 1 - j)) & 1;
        auto [u, v] = ctx.edges[static_cast<std::size_t>(j)];
        ++out.nodes;
        g.add(ci, u, v);
        if (g.copy_through(ci, u, v)) {
            ++out.prunes;
            out.verdict = Verdict::No;
            return out;
        }
    }
    out.verdict = dfs(g, ctx, static_cast<std::size_t>(ctx.split_depth), out);
    if (out.cancelled) out.verdict = Verdict::Unknown;
    return out;
}

} // namespace

SearchResult exists_good_colouring(int n, const DoubleStarSpec& spec, std::uint64_t budget, int threads,
                                   int split_depth) {
    if (n < 2) throw std::invalid_argument("exists_good_colouring needs n >= 2");
    if (n > kMaxSearchVertices) throw std::invalid_argument("exhaustive search supports n <= 64");
    if (threads < 1) threads = 1;

    auto t0 = std::chrono::steady_clock::now();

    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(edge_count(n)));
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    }
    int depth = std::min<int>(split_depth, static_cast<int>(edges.size()));
    if (depth < 1) depth = 1;
    std::uint32_t task_count = std::uint32_t{1} << (depth - 1);

    std::vector<TaskResult> results(task_count);
    std::atomic<std::uint32_t> next{0};
    std::atomic<std::uint32_t> min_yes{task_count}; // nothing beyond this index can matter

    auto worker = [&] {
        for (;;) {
            std::uint32_t p = next.fetch_add(1, std::memory_order_relaxed);
            if (p >= task_count) return;
            if (p > min_yes.load(std::memory_order_relaxed)) {
                results[p].cancelled = true;
                results[p].verdict = Verdict::Unknown;
                continue;
            }
            TaskContext ctx{edges, depth, budget, min_yes, p};
            results[p] = run_task(n, spec, ctx, p);
            if (results[p].verdict == Verdict::Yes) {
                std::uint32_t seen = min_yes.load(std::memory_order_relaxed);
                while (p < seen && !min_yes.compare_exchange_weak(seen, p, std::memory_order_relaxed)) {
                }
            }
        }
    };

    if (threads == 1 || task_count == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        int w = std::min<int>(threads, static_cast<int>(task_count));
        pool.reserve(static_cast<std::size_t>(w));
        for (int i = 0; i < w; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    // Merge in prefix order; a sequential run would stop at the first Yes.
    SearchResult res{Verdict::No, std::nullopt, {}};
    for (std::uint32_t p = 0; p < task_count; ++p) {
        const TaskResult& r = results[p];
        assert(!r.cancelled || p > min_yes.load());
        res.stats.nodes += r.nodes;
        res.stats.prunes += r.prunes;
        if (r.verdict == Verdict::Yes) {
            res.verdict = Verdict::Yes;
            res.witness = r.witness;
            break;
        }
        if (r.verdict == Verdict::Unknown) res.verdict = Verdict::Unknown;
    }

    if (res.witness && find_monochromatic(*res.witness, spec)) {
        throw std::logic_error("search produced a witness that fails independent verification");
    }
    res.stats.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

SearchOutcome ramsey_exact(const DoubleStarSpec& spec, int max_n, std::uint64_t budget, int threads) {
    auto t0 = std::chrono::steady_clock::now();
    SearchOutcome out{spec, std::nullopt, std::nullopt, {}, {}, {}};

    int base = static_cast<int>(r_b(spec)) - 1;
    if (base <= max_n) {
        Colouring2 canonical = canonical_colouring(spec);
        if (find_monochromatic(canonical, spec)) {
            throw std::logic_error("canonical colouring failed verification for " + spec.name());
        }
        out.witnesses.emplace(base, std::move(canonical));
        out.levels.push_back({base, Verdict::Yes, true, 0, 0});
    }

    for (int n = base + 1; n <= max_n; ++n) {
        SearchResult r = exists_good_colouring(n, spec, budget, threads);
        out.levels.push_back({n, r.verdict, false, r.stats.nodes, r.stats.prunes});
        out.stats.nodes += r.stats.nodes;
        out.stats.prunes += r.stats.prunes;
        if (r.verdict == Verdict::Yes) {
            out.witnesses.emplace(n, std::move(*r.witness));
            continue;
        }
        if (r.verdict == Verdict::No) {
            out.ramsey_value = n;
            out.exhausted_at = n;
        }
        break;
    }

    out.stats.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

namespace {

// Number of ordered feasible centre pairs across both colours; zero means
// the colouring is free of monochromatic copies.
int objective(const PartialGraph& g) {
    int count = 0;
    for (int ci : {0, 1}) {
        for (int v = 0; v < g.n; ++v) {
            if (g.deg[ci][v] <= g.m1) continue;
            std::uint64_t w = g.adj[ci][v];
            while (w != 0) {
                int x = std::countr_zero(w);
                w &= w - 1;
                if (g.deg[ci][x] <= g.m2) continue;
                if (std::popcount(g.adj[ci][v] | g.adj[ci][x]) >= g.need) ++count;
            }
        }
    }
    return count;
}

} // namespace

std::optional<Colouring2> random_witness_search(int n, const DoubleStarSpec& spec, std::uint64_t seed,
                                                std::uint64_t iterations) {
    if (n < 2) throw std::invalid_argument("random_witness_search needs n >= 2");
    if (n > kMaxSearchVertices) throw std::invalid_argument("random_witness_search supports n <= 64");

    std::mt19937_64 rng(seed);
    PartialGraph g(n, spec);

    auto scramble = [&] {
        g = PartialGraph(n, spec);
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) g.add(rng() & 1 ? 0 : 1, u, v);
        }
    };
    auto flip = [&](int u, int v) {
        int ci = g.adj[0][u] >> v & 1 ? 0 : 1;
        g.remove(ci, u, v);
        g.add(1 - ci, u, v);
    };

    scramble();
    int current = objective(g);
    for (std::uint64_t it = 0; it < iterations && current > 0; ++it) {
        int best_value = current, best_u = -1, best_v = -1;
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                flip(u, v);
                int value = objective(g);
                flip(u, v);
                if (value < best_value) {
                    best_value = value;
                    best_u = u;
                    best_v = v;
                }
            }
        }
        if (best_u < 0) {
            scramble(); // plateau: no flip strictly improves
            current = objective(g);
        } else {
            flip(best_u, best_v);
            current = best_value;
        }
    }
    if (current > 0) return std::nullopt;

    Colouring2 witness = g.snapshot();
    if (find_monochromatic(witness, spec)) {
        throw std::logic_error("local search accepted a colouring that fails independent verification");
    }
    return witness;
}

} // namespace doublestar
