#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "doublestar/colour.hpp"
#include "doublestar/vertexset.hpp"

namespace doublestar {

// Immutable edge 2-colouring of the complete graph K_n, vertices 0..n-1.
// Every unordered pair carries exactly one colour; adjacency is stored per
// colour as bitset rows so degree and neighbourhood queries are O(1) lookups
// plus word scans. Build instances through ColouringBuilder or the parsers.
class Colouring2 {
public:
    static constexpr int kMaxVertices = 4096;

    int order() const { return n_; }

    Colour edge_colour(int u, int v) const;
    const VertexSet& neighbourhood(int v, Colour c) const;
    int degree(int v, Colour c) const;
    int max_degree(Colour c) const;

    bool operator==(const Colouring2& rhs) const { return n_ == rhs.n_ && adj_[0] == rhs.adj_[0]; }

private:
    friend class ColouringBuilder;
    Colouring2() = default;

    void check_vertex(int v) const;

    int n_ = 0;
    std::array<std::vector<VertexSet>, 2> adj_;
    std::array<std::vector<int>, 2> degree_;
    std::array<int, 2> max_degree_{0, 0};
};

// Accumulates edge colours for a K_n and freezes them into a Colouring2.
// Re-setting a pair overwrites; build() demands every pair was assigned.
class ColouringBuilder {
public:
    explicit ColouringBuilder(int n);

    void set(int u, int v, Colour c);
    void fill(Colour c);
    bool complete() const;
    Colouring2 build() const;

    int order() const { return n_; }

private:
    int n_;
    std::vector<VertexSet> red_;
    std::vector<VertexSet> assigned_;
};

// Lexicographic edge enumeration of K_n: (0,1), (0,2), ..., (n-2,n-1).
int edge_count(int n);
int edge_index(int n, int u, int v);
std::pair<int, int> edge_at(int n, int k);

// Colouring where edge k is Red iff bit k of red_bits is set. Requires
// edge_count(n) <= 64; used by exhaustive sweeps.
Colouring2 colouring_from_bits(int n, std::uint64_t red_bits);

// Uniformly random colouring: one engine draw per edge, in lexicographic
// order, low bit decides (1 = Red). Raw mt19937_64 output keeps the stream
// identical across platforms.
Colouring2 random_colouring(int n, std::mt19937_64& rng);

// Text format, one colouring per stream:
//   line 1:            "n <count>"
//   next n-1 lines:    row i holds n-1-i characters from {R,B}; the char at
//                      offset j-i-1 is the colour of edge {i,j}
// '#' comment lines and blank lines are ignored; a trailing CR per line is
// tolerated on input. Output is LF-only and canonical (no comments).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, int line);
    int line() const { return line_; }

private:
    int line_;
};

Colouring2 parse_colouring(std::istream& in);
Colouring2 parse_colouring(const std::string& text);
std::string serialize_colouring(const Colouring2& c);

} // namespace doublestar
