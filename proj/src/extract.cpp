#include "doublestar/extract.hpp"

#include <cassert>
#include <limits>

namespace doublestar {

std::optional<Colour> select_low_colour(const Colouring2& c, int cap) {
    if (c.max_degree(Colour::Blue) <= cap) return Colour::Blue;
    if (c.max_degree(Colour::Red) <= cap) return Colour::Red;
    return std::nullopt;
}

namespace {

void require_preconditions(const Colouring2& c, const DoubleStarSpec& spec, long long m3) {
    // m3_of itself rejects specs outside the golden range
    long long need = spec.m1 + spec.m2 + m3 + 1;
    if (c.order() < need) {
        throw std::domain_error("extract needs n >= " + std::to_string(need) + " for " + spec.name() + ", got n=" +
                                std::to_string(c.order()));
    }
}

} // namespace

std::variant<ExtractionTrace, FallbackNeeded> extract_via_proof(const Colouring2& c, const DoubleStarSpec& spec) {
    ExtractionTrace t;
    t.m3 = m3_of(spec);
    require_preconditions(c, spec, t.m3);

    std::optional<Colour> minor = select_low_colour(c, spec.m1);
    if (!minor) return FallbackNeeded{"no colour has maximum degree <= m1", t};
    t.minor_colour = *minor;
    Colour major = other(*minor);
    t.major_colour = major;

    int v = 0;
    t.v = v;
    long long a_size = spec.m2 + t.m3;
    if (c.degree(v, major) < a_size) {
        // impossible while the minor cap holds: v has at least n-1-m1 >= m2+m3
        // major neighbours
        return FallbackNeeded{"v has fewer than m2+m3 major-colour neighbours", t};
    }

    VertexSet a(c.order());
    {
        std::vector<int> a_list;
        a_list.reserve(static_cast<std::size_t>(a_size));
        c.neighbourhood(v, major).for_each([&](int x) {
            if (static_cast<long long>(a_list.size()) == a_size) return false;
            a_list.push_back(x);
            a.insert(x);
            return true;
        });
        t.a_set = std::move(a_list);
    }

    int z = -1, z_count = std::numeric_limits<int>::max();
    for (int x = 0; x < c.order(); ++x) {
        if (x == v || a.contains(x)) continue;
        int into_a = intersection_count(c.neighbourhood(x, major), a);
        if (into_a < z_count) {
            z = x;
            z_count = into_a;
        }
    }
    assert(z >= 0); // n >= m1+m2+m3+1 leaves at least m1 vertices outside A ∪ {v}
    t.z = z;
    t.z_major_into_a = z_count;
    // the minor cap leaves z at most m1 < |A| non-major edges into A
    assert(z_count >= 1);
    if (z_count < 1) return FallbackNeeded{"chosen z has no major-colour edge into A", t};

    int u = -1;
    c.neighbourhood(z, major).for_each([&](int x) {
        if (a.contains(x)) {
            u = x;
            return false;
        }
        return true;
    });
    t.u = u;

    if (!centre_feasible(c, major, u, z, spec)) {
        // The counting argument certifies this pair only on copy-free
        // colourings; a real input can park its copies elsewhere.
        return FallbackNeeded{"final centre pair (u,z) is not feasible", t};
    }
    t.embedding = embed_at(c, major, u, z, spec);
    t.used_fallback = false;
    return t;
}

CounterexampleAlarm::CounterexampleAlarm(std::string colouring_text, const DoubleStarSpec& spec)
    : std::logic_error("counterexample alarm: no monochromatic " + spec.name() +
                       " found although the bound guarantees one"),
      colouring_text_(std::move(colouring_text)) {}

ExtractionTrace extract_trace(const Colouring2& c, const DoubleStarSpec& spec) {
    auto replay = extract_via_proof(c, spec);
    if (auto* done = std::get_if<ExtractionTrace>(&replay)) return *done;

    auto& fb = std::get<FallbackNeeded>(replay);
    ExtractionTrace t = fb.partial;
    t.used_fallback = true;
    t.fallback_reason = fb.reason;
    std::optional<Embedding> found = find_monochromatic(c, spec);
    if (!found) throw CounterexampleAlarm(serialize_colouring(c), spec);
    t.embedding = *found;
    return t;
}

Embedding extract(const Colouring2& c, const DoubleStarSpec& spec) { return extract_trace(c, spec).embedding; }

namespace {

std::string opt_str(const std::optional<int>& x) { return x ? std::to_string(*x) : "-"; }

} // namespace

std::string render_trace(const ExtractionTrace& t) {
    std::string out;
    out += "minor_colour ";
    out += t.minor_colour ? std::string(1, colour_char(*t.minor_colour)) : "-";
    out += "\nmajor_colour ";
    out += t.major_colour ? std::string(1, colour_char(*t.major_colour)) : "-";
    out += "\nm3 " + std::to_string(t.m3);
    out += "\nv " + opt_str(t.v);
    out += "\nA";
    if (t.a_set) {
        for (int x : *t.a_set) out += " " + std::to_string(x);
    } else {
        out += " -";
    }
    out += "\nz " + opt_str(t.z);
    out += "\nu " + opt_str(t.u);
    out += "\nz_major_into_A " + opt_str(t.z_major_into_a);
    out += "\nused_fallback ";
    out += t.used_fallback ? "1" : "0";
    if (!t.fallback_reason.empty()) out += "\nfallback_reason " + t.fallback_reason;
    out += "\n";
    out += render_certificate(t.embedding);
    return out;
}

} // namespace doublestar
