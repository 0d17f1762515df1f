#include "doublestar/colouring.hpp"

#include <istream>
#include <sstream>

namespace doublestar {

void Colouring2::check_vertex(int v) const {
    if (v < 0 || v >= n_) {
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n_));
    }
}

Colour Colouring2::edge_colour(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("edge_colour: endpoints must differ");
    return adj_[0][static_cast<std::size_t>(u)].contains(v) ? Colour::Red : Colour::Blue;
}

const VertexSet& Colouring2::neighbourhood(int v, Colour c) const {
    check_vertex(v);
    return adj_[colour_index(c)][static_cast<std::size_t>(v)];
}

int Colouring2::degree(int v, Colour c) const {
    check_vertex(v);
    return degree_[colour_index(c)][static_cast<std::size_t>(v)];
}

int Colouring2::max_degree(Colour c) const { return max_degree_[colour_index(c)]; }

ColouringBuilder::ColouringBuilder(int n) : n_(n) {
    if (n < 2) throw std::invalid_argument("colouring needs at least 2 vertices");
    if (n > Colouring2::kMaxVertices) {
        throw std::invalid_argument("colouring rejects n > " + std::to_string(Colouring2::kMaxVertices));
    }
    red_.assign(static_cast<std::size_t>(n), VertexSet(n));
    assigned_.assign(static_cast<std::size_t>(n), VertexSet(n));
}

void ColouringBuilder::set(int u, int v, Colour c) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) throw std::out_of_range("builder vertex out of range");
    if (u == v) throw std::invalid_argument("builder: no self loops in K_n");
    if (c == Colour::Red) {
        red_[static_cast<std::size_t>(u)].insert(v);
        red_[static_cast<std::size_t>(v)].insert(u);
    } else {
        red_[static_cast<std::size_t>(u)].erase(v);
        red_[static_cast<std::size_t>(v)].erase(u);
    }
    assigned_[static_cast<std::size_t>(u)].insert(v);
    assigned_[static_cast<std::size_t>(v)].insert(u);
}

void ColouringBuilder::fill(Colour c) {
    for (int u = 0; u < n_; ++u) {
        for (int v = u + 1; v < n_; ++v) set(u, v, c);
    }
}

bool ColouringBuilder::complete() const {
    for (int v = 0; v < n_; ++v) {
        if (assigned_[static_cast<std::size_t>(v)].count() != n_ - 1) return false;
    }
    return true;
}

Colouring2 ColouringBuilder::build() const {
    if (!complete()) throw std::logic_error("builder: not every edge of K_n was assigned a colour");
    Colouring2 c;
    c.n_ = n_;
    c.adj_[0] = red_;
    c.adj_[1].assign(static_cast<std::size_t>(n_), VertexSet(n_));
    for (int u = 0; u < n_; ++u) {
        for (int v = u + 1; v < n_; ++v) {
            if (!red_[static_cast<std::size_t>(u)].contains(v)) {
                c.adj_[1][static_cast<std::size_t>(u)].insert(v);
                c.adj_[1][static_cast<std::size_t>(v)].insert(u);
            }
        }
    }
    for (int ci = 0; ci < 2; ++ci) {
        c.degree_[ci].resize(static_cast<std::size_t>(n_));
        int best = 0;
        for (int v = 0; v < n_; ++v) {
            int d = c.adj_[ci][static_cast<std::size_t>(v)].count();
            c.degree_[ci][static_cast<std::size_t>(v)] = d;
            if (d > best) best = d;
        }
        c.max_degree_[ci] = best;
    }
    return c;
}

int edge_count(int n) { return n * (n - 1) / 2; }

int edge_index(int n, int u, int v) {
    if (u > v) std::swap(u, v);
    // edges (u, u+1..n-1) start after all edges with smaller first endpoint
    return u * n - u * (u + 1) / 2 + (v - u - 1);
}

std::pair<int, int> edge_at(int n, int k) {
    for (int u = 0; u < n - 1; ++u) {
        int row = n - 1 - u;
        if (k < row) return {u, u + 1 + k};
        k -= row;
    }
    throw std::out_of_range("edge index past the end of K_n");
}

Colouring2 colouring_from_bits(int n, std::uint64_t red_bits) {
    if (edge_count(n) > 64) throw std::invalid_argument("colouring_from_bits: K_n has more than 64 edges");
    ColouringBuilder b(n);
    int k = 0;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v, ++k) b.set(u, v, (red_bits >> k) & 1 ? Colour::Red : Colour::Blue);
    }
    return b.build();
}

Colouring2 random_colouring(int n, std::mt19937_64& rng) {
    ColouringBuilder b(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) b.set(u, v, rng() & 1 ? Colour::Red : Colour::Blue);
    }
    return b.build();
}

ParseError::ParseError(const std::string& message, int line)
    : std::runtime_error(message + " at line " + std::to_string(line)), line_(line) {}

namespace {

bool significant_line(const std::string& raw) {
    std::size_t i = 0;
    while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) ++i;
    return i < raw.size() && raw[i] != '#';
}

// Pulls the next content line, stripping one trailing CR. Returns false at
// end of stream; line_no always tracks the physical line number.
bool next_significant(std::istream& in, std::string& out, int& line_no) {
    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        if (significant_line(raw)) {
            out = raw;
            return true;
        }
    }
    return false;
}

} // namespace

Colouring2 parse_colouring(std::istream& in) {
    int line_no = 0;
    std::string line;
    if (!next_significant(in, line, line_no)) throw ParseError("missing header", line_no + 1);

    int header_line = line_no;
    std::istringstream hs(line);
    std::string tag, extra;
    long long n = 0;
    if (!(hs >> tag >> n) || tag != "n" || (hs >> extra)) throw ParseError("malformed header", header_line);
    if (n < 2) throw ParseError("vertex count must be at least 2", header_line);
    if (n > Colouring2::kMaxVertices) {
        throw ParseError("vertex count exceeds " + std::to_string(Colouring2::kMaxVertices), header_line);
    }

    ColouringBuilder b(static_cast<int>(n));
    for (int i = 0; i + 1 < n; ++i) {
        if (!next_significant(in, line, line_no)) throw ParseError("unexpected end of input", line_no + 1);
        for (char ch : line) {
            if (ch != 'R' && ch != 'B') throw ParseError("invalid colour character", line_no);
        }
        std::size_t expect = static_cast<std::size_t>(n - 1 - i);
        if (line.size() != expect) {
            throw ParseError("wrong row length: expected " + std::to_string(expect) + " characters, got " +
                                 std::to_string(line.size()),
                             line_no);
        }
        for (int j = i + 1; j < n; ++j) {
            b.set(i, j, line[static_cast<std::size_t>(j - i - 1)] == 'R' ? Colour::Red : Colour::Blue);
        }
    }
    if (next_significant(in, line, line_no)) throw ParseError("unexpected trailing content", line_no);
    return b.build();
}

Colouring2 parse_colouring(const std::string& text) {
    std::istringstream in(text);
    return parse_colouring(in);
}

std::string serialize_colouring(const Colouring2& c) {
    std::string out = "n " + std::to_string(c.order()) + "\n";
    for (int i = 0; i + 1 < c.order(); ++i) {
        for (int j = i + 1; j < c.order(); ++j) out.push_back(colour_char(c.edge_colour(i, j)));
        out.push_back('\n');
    }
    return out;
}

} // namespace doublestar
