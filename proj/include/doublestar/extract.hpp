#pragma once

#include <optional>
#include <string>
#include <variant>

#include "doublestar/bounds.hpp"
#include "doublestar/doublestar.hpp"

namespace doublestar {

// Colour whose maximum degree is at most cap, preferring Blue when both
// qualify (so the replayed argument keeps Red as the high-degree colour).
// nullopt when both colours exceed the cap somewhere.
std::optional<Colour> select_low_colour(const Colouring2& c, int cap);

// Record of the deterministic replay that pins down a monochromatic copy in
// any colouring of K_n, n >= m1+m2+m3+1, inside the golden range. The steps:
// minor colour capped at m1, v = vertex 0, A = the m2+m3 lowest-index major
// neighbours of v, z = the vertex outside A ∪ {v} with fewest major edges
// into A (ties to the lowest index), u = the lowest-index major neighbour of
// z inside A, and the copy is embedded at centres (u, z).
struct ExtractionTrace {
    std::optional<Colour> minor_colour;
    std::optional<Colour> major_colour;
    long long m3 = 0;
    std::optional<int> v;
    std::optional<std::vector<int>> a_set;
    std::optional<int> z;
    std::optional<int> u;
    std::optional<int> z_major_into_a;
    Embedding embedding;
    bool used_fallback = false;
    std::string fallback_reason;
};

struct FallbackNeeded {
    std::string reason;
    ExtractionTrace partial; // steps completed before the replay stopped
};

// Replay alone: either a complete trace (used_fallback = false) or the
// reason the replay could not finish. Throws std::domain_error when the
// preconditions (golden range, n >= m1+m2+m3+1) do not hold.
std::variant<ExtractionTrace, FallbackNeeded> extract_via_proof(const Colouring2& c, const DoubleStarSpec& spec);

// Raised when neither the replay nor the full scan finds a copy on an input
// meeting the preconditions. No such colouring should exist; the offending
// input is carried along so it can be recorded.
class CounterexampleAlarm : public std::logic_error {
public:
    CounterexampleAlarm(std::string colouring_text, const DoubleStarSpec& spec);
    const std::string& colouring_text() const { return colouring_text_; }

private:
    std::string colouring_text_;
};

// Replay first, full scan on FallbackNeeded. Always yields an embedding;
// throws CounterexampleAlarm if the scan comes back empty.
ExtractionTrace extract_trace(const Colouring2& c, const DoubleStarSpec& spec);
Embedding extract(const Colouring2& c, const DoubleStarSpec& spec);

// Ordered key/value text mirroring the replay steps, then the embedding
// certificate. Unknown fields render as "-".
std::string render_trace(const ExtractionTrace& t);

} // namespace doublestar
