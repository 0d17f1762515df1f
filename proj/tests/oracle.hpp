#pragma once

// Brute-force reference implementations for the tests. Deliberately naive
// and independent of the library's feasibility shortcut: centre pairs and
// leaf subsets are enumerated directly.

#include <algorithm>
#include <vector>

#include "doublestar/doublestar.hpp"

namespace oracle {

using doublestar::Colour;
using doublestar::Colouring2;
using doublestar::DoubleStarSpec;

// Does a copy with ordered centres (v, w) exist in this colour? Tries every
// m1-subset of v's other neighbours as leaves1, then counts what is left
// for w.
inline bool embeddable_at(const Colouring2& c, Colour col, int v, int w, const DoubleStarSpec& spec) {
    if (c.edge_colour(v, w) != col) return false;

    std::vector<int> cand1;
    for (int x = 0; x < c.order(); ++x) {
        if (x != v && x != w && c.edge_colour(v, x) == col) cand1.push_back(x);
    }
    if (static_cast<int>(cand1.size()) < spec.m1) return false;

    std::vector<int> pick(static_cast<std::size_t>(spec.m1));
    for (int i = 0; i < spec.m1; ++i) pick[static_cast<std::size_t>(i)] = i;
    for (;;) {
        std::vector<char> used(static_cast<std::size_t>(c.order()), 0);
        for (int i : pick) used[static_cast<std::size_t>(cand1[static_cast<std::size_t>(i)])] = 1;
        int free_for_w = 0;
        for (int x = 0; x < c.order(); ++x) {
            if (x != v && x != w && !used[static_cast<std::size_t>(x)] && c.edge_colour(w, x) == col) ++free_for_w;
        }
        if (free_for_w >= spec.m2) return true;

        // next m1-combination of cand1 indices
        int i = spec.m1 - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == static_cast<int>(cand1.size()) - spec.m1 + i) --i;
        if (i < 0) return false;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < spec.m1; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
}

inline bool contains_copy(const Colouring2& c, const DoubleStarSpec& spec) {
    for (Colour col : doublestar::kColours) {
        for (int v = 0; v < c.order(); ++v) {
            for (int w = 0; w < c.order(); ++w) {
                if (v != w && c.edge_colour(std::min(v, w), std::max(v, w)) == col && embeddable_at(c, col, v, w, spec)) {
                    return true;
                }
            }
        }
    }
    return false;
}

} // namespace oracle
