#pragma once

#include <optional>
#include <string>
#include <vector>

#include "doublestar/colouring.hpp"

namespace doublestar {

// The double star S(m1, m2): two adjacent centres, one with m1 pendant
// leaves and one with m2. Construction normalises to m1 >= m2 >= 1.
struct DoubleStarSpec {
    int m1;
    int m2;

    DoubleStarSpec(int a, int b);

    int vertex_count() const { return m1 + m2 + 2; }
    std::string name() const { return "S(" + std::to_string(m1) + "," + std::to_string(m2) + ")"; }

    bool operator==(const DoubleStarSpec&) const = default;
};

// A concrete monochromatic copy: centre1 carries leaves1 (|leaves1| = m1),
// centre2 carries leaves2, and centre1-centre2 is the central edge. Leaves
// are listed in ascending vertex order.
struct Embedding {
    Colour colour;
    int centre1;
    int centre2;
    std::vector<int> leaves1;
    std::vector<int> leaves2;

    bool operator==(const Embedding&) const = default;
};

// Exact test for "some copy of S(m1,m2) in colour `col` has centres (v, w)",
// with v taking the m1 leaves. Requires edge {v,w} to exist in that colour.
// The three degree/union conditions are necessary (count the copy's vertices)
// and sufficient (the greedy below always completes), so no search is needed.
bool centre_feasible(const Colouring2& c, Colour col, int v, int w, const DoubleStarSpec& spec);

// Deterministic greedy embedding at a feasible centre pair: leaves1 takes up
// to m1 lowest-index vertices of N(v) \ (N(w) ∪ {w}) and tops up from
// N(v) ∩ N(w); leaves2 takes the m2 lowest-index vertices of N(w) left over.
// Throws std::invalid_argument when the pair is not feasible.
Embedding embed_at(const Colouring2& c, Colour col, int v, int w, const DoubleStarSpec& spec);

// First monochromatic copy in scan order: colour Red then Blue, ordered
// centre pairs (v, w) lexicographically. Returns nullopt when the colouring
// contains no copy in either colour.
std::optional<Embedding> find_monochromatic(const Colouring2& c, const DoubleStarSpec& spec);

// True iff e is a well-formed monochromatic copy of spec inside c.
bool validate_embedding(const Colouring2& c, const DoubleStarSpec& spec, const Embedding& e);

// Witness certificate text: colour / centre1 / centre2 / leaves1 / leaves2,
// one "key value..." line each, LF terminated.
std::string render_certificate(const Embedding& e);

} // namespace doublestar
