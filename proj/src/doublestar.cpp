#include "doublestar/doublestar.hpp"

#include <algorithm>
#include <stdexcept>

namespace doublestar {

DoubleStarSpec::DoubleStarSpec(int a, int b) : m1(std::max(a, b)), m2(std::min(a, b)) {
    if (m2 < 1) throw std::invalid_argument("double star needs m1 >= m2 >= 1");
}

bool centre_feasible(const Colouring2& c, Colour col, int v, int w, const DoubleStarSpec& spec) {
    if (c.edge_colour(v, w) != col) throw std::invalid_argument("centre_feasible: {v,w} is not an edge of that colour");
    if (c.degree(v, col) <= spec.m1) return false;
    if (c.degree(w, col) <= spec.m2) return false;
    return union_count(c.neighbourhood(v, col), c.neighbourhood(w, col)) >= spec.vertex_count();
}

Embedding embed_at(const Colouring2& c, Colour col, int v, int w, const DoubleStarSpec& spec) {
    if (!centre_feasible(c, col, v, w, spec)) throw std::invalid_argument("embed_at: centre pair is not feasible");

    const VertexSet& nv = c.neighbourhood(v, col);
    const VertexSet& nw = c.neighbourhood(w, col);

    Embedding e{col, v, w, {}, {}};
    e.leaves1.reserve(static_cast<std::size_t>(spec.m1));
    // Prefer private neighbours of v so w keeps as much of its own
    // neighbourhood as possible; the union bound guarantees the top-up from
    // the shared part never starves leaves2.
    nv.for_each([&](int x) {
        if (static_cast<int>(e.leaves1.size()) == spec.m1) return false;
        if (x != w && !nw.contains(x)) e.leaves1.push_back(x);
        return true;
    });
    nv.for_each([&](int x) {
        if (static_cast<int>(e.leaves1.size()) == spec.m1) return false;
        if (nw.contains(x)) e.leaves1.push_back(x);
        return true;
    });

    VertexSet taken(c.order());
    for (int x : e.leaves1) taken.insert(x);
    e.leaves2.reserve(static_cast<std::size_t>(spec.m2));
    nw.for_each([&](int x) {
        if (static_cast<int>(e.leaves2.size()) == spec.m2) return false;
        if (x != v && !taken.contains(x)) e.leaves2.push_back(x);
        return true;
    });

    if (static_cast<int>(e.leaves1.size()) != spec.m1 || static_cast<int>(e.leaves2.size()) != spec.m2) {
        throw std::logic_error("embed_at: greedy fell short at a feasible pair");
    }
    std::sort(e.leaves1.begin(), e.leaves1.end());
    std::sort(e.leaves2.begin(), e.leaves2.end());
    return e;
}

std::optional<Embedding> find_monochromatic(const Colouring2& c, const DoubleStarSpec& spec) {
    if (spec.vertex_count() > c.order()) return std::nullopt;
    for (Colour col : kColours) {
        for (int v = 0; v < c.order(); ++v) {
            if (c.degree(v, col) <= spec.m1) continue;
            std::optional<Embedding> hit;
            c.neighbourhood(v, col).for_each([&](int w) {
                if (centre_feasible(c, col, v, w, spec)) {
                    hit = embed_at(c, col, v, w, spec);
                    return false;
                }
                return true;
            });
            if (hit) return hit;
        }
    }
    return std::nullopt;
}

bool validate_embedding(const Colouring2& c, const DoubleStarSpec& spec, const Embedding& e) {
    int n = c.order();
    auto in_range = [n](int v) { return v >= 0 && v < n; };
    if (!in_range(e.centre1) || !in_range(e.centre2) || e.centre1 == e.centre2) return false;
    if (static_cast<int>(e.leaves1.size()) != spec.m1) return false;
    if (static_cast<int>(e.leaves2.size()) != spec.m2) return false;

    VertexSet seen(n);
    seen.insert(e.centre1);
    seen.insert(e.centre2);
    for (const auto* leaves : {&e.leaves1, &e.leaves2}) {
        for (int x : *leaves) {
            if (!in_range(x) || seen.contains(x)) return false;
            seen.insert(x);
        }
    }

    if (c.edge_colour(e.centre1, e.centre2) != e.colour) return false;
    for (int x : e.leaves1) {
        if (c.edge_colour(e.centre1, x) != e.colour) return false;
    }
    for (int x : e.leaves2) {
        if (c.edge_colour(e.centre2, x) != e.colour) return false;
    }
    return true;
}

std::string render_certificate(const Embedding& e) {
    std::string out;
    out += "colour ";
    out += colour_char(e.colour);
    out += "\ncentre1 " + std::to_string(e.centre1);
    out += "\ncentre2 " + std::to_string(e.centre2);
    out += "\nleaves1";
    for (int x : e.leaves1) out += " " + std::to_string(x);
    out += "\nleaves2";
    for (int x : e.leaves2) out += " " + std::to_string(x);
    out += "\n";
    return out;
}

} // namespace doublestar
