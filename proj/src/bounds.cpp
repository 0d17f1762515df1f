#include "doublestar/bounds.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace doublestar {

namespace {

using u128 = unsigned __int128;

u128 sq(long long x) { return static_cast<u128>(x) * static_cast<u128>(x); }

// Floor of the integer square root; seeded from a double estimate and fixed
// up with exact 128-bit comparisons, so the result never depends on rounding.
unsigned long long isqrt_floor(u128 x) {
    auto r = static_cast<unsigned long long>(__builtin_sqrt(static_cast<double>(x)));
    while (r > 0 && static_cast<u128>(r) * r > x) --r;
    while (static_cast<u128>(r + 1) * (r + 1) <= x) ++r;
    return r;
}

unsigned long long ceil_sqrt(u128 x) {
    unsigned long long r = isqrt_floor(x);
    return static_cast<u128>(r) * r == x ? r : r + 1;
}

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

// 8*m1^2 + (2*m1 + m2)^2: both bound formulas compare squares against this.
u128 radicand(const DoubleStarSpec& spec) { return 8 * sq(spec.m1) + sq(2LL * spec.m1 + spec.m2); }

void require_golden(const DoubleStarSpec& spec, const char* what) {
    if (!range_flags(spec).golden) {
        throw std::domain_error(std::string(what) + " is only defined inside the golden range, not for " + spec.name());
    }
}

} // namespace

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

long long r_b(const DoubleStarSpec& spec) {
    long long t1 = spec.m1 + 1, t2 = spec.m2 + 1;
    return std::max(2 * t1, t1 + 2 * t2) - 1;
}

RangeFlags range_flags(const DoubleStarSpec& spec) {
    long long m1 = spec.m1, m2 = spec.m2;
    // (sqrt(5)+1)/2 * m2 < m1  <=>  sqrt(5)*m2 < 2*m1 - m2, squared exactly
    bool golden = 2 * m1 - m2 > 0 && sq(2 * m1 - m2) > 5 * sq(m2) && m1 < 3 * m2;
    bool gap = 1000 * m1 > 1699 * (m2 + 1) && m1 < 3 * m2;
    return {golden, gap};
}

long long m3_of(const DoubleStarSpec& spec) {
    require_golden(spec, "m3");
    long long q = static_cast<long long>(ceil_sqrt(radicand(spec)));
    long long b = 2LL * spec.m1 + spec.m2;
    // least t with 2t + b >= sqrt(radicand); q > b since the radicand
    // strictly exceeds b^2
    return ceil_div(q - b, 2);
}

long long theorem_bound(const DoubleStarSpec& spec) {
    require_golden(spec, "theorem_bound");
    long long q = static_cast<long long>(ceil_sqrt(radicand(spec)));
    // least t with 2t - m2 >= sqrt(radicand) (which forces 2t >= m2), plus 1
    return ceil_div(q + spec.m2, 2) + 1;
}

long long corollary_bound(long long m) {
    if (m < 1) throw std::invalid_argument("corollary_bound needs m >= 1");
    if (m > 20'000'000'000'000LL) throw std::invalid_argument("corollary_bound: m too large for exact arithmetic");
    return ceil_div(427492 * m, 100000) + 1;
}

long long classical_bound(const DoubleStarSpec& spec) {
    return std::max(2LL * spec.m1, spec.m1 + 2LL * spec.m2) + 2;
}

long long weak_bound(const DoubleStarSpec& spec) { return 2LL * spec.m1 + spec.m2 + 2; }

const char* upper_bound_kind_name(UpperBoundKind k) {
    switch (k) {
    case UpperBoundKind::Theorem: return "theorem";
    case UpperBoundKind::Classical: return "classical";
    default: return "weak";
    }
}

BestUpper best_upper(const DoubleStarSpec& spec) {
    RangeFlags flags = range_flags(spec);
    std::optional<BestUpper> best;
    auto offer = [&](long long value, UpperBoundKind by) {
        if (!best || value < best->value) best = BestUpper{value, by};
    };
    if (flags.golden) offer(theorem_bound(spec), UpperBoundKind::Theorem);
    if (!flags.gap) offer(classical_bound(spec), UpperBoundKind::Classical);
    offer(weak_bound(spec), UpperBoundKind::Weak);
    return *best;
}

std::pair<Rational, Rational> lower_bound_main_terms(const DoubleStarSpec& spec) {
    long long m1 = spec.m1, m2 = spec.m2;
    return {Rational(10 * m1 + 5 * m2, 6), Rational(4347 * m1 + 2415 * m2, 2645)};
}

BoundsReport BoundsReport::compute(const DoubleStarSpec& spec) {
    BoundsReport r{spec,
                   spec.m1 + 1,
                   spec.m2 + 1,
                   r_b(spec),
                   range_flags(spec),
                   classical_bound(spec),
                   weak_bound(spec),
                   std::nullopt,
                   std::nullopt,
                   std::nullopt,
                   {},
                   {},
                   best_upper(spec)};
    if (r.flags.golden) {
        r.m3 = m3_of(spec);
        r.theorem = theorem_bound(spec);
    }
    if (spec.m1 == 2 * spec.m2) r.corollary = corollary_bound(spec.m2);
    auto mains = lower_bound_main_terms(spec);
    r.lower_main_1 = mains.first;
    r.lower_main_2 = mains.second;
    return r;
}

std::string BoundsReport::human() const {
    std::ostringstream out;
    auto row = [&](const char* key, const std::string& value) {
        out << key;
        for (std::size_t i = std::string(key).size(); i < 22; ++i) out << ' ';
        out << value << "\n";
    };
    row("double star", spec.name());
    row("bipartition sizes", "t1=" + std::to_string(t1) + " t2=" + std::to_string(t2));
    row("lower bound r_b", std::to_string(rb));
    row("golden range", flags.golden ? "yes" : "no");
    row("gap range", flags.gap ? "yes" : "no");
    row("classical upper bound",
        std::to_string(classical) + (flags.gap ? "  (not applicable: gap range)" : ""));
    row("weak upper bound", std::to_string(weak));
    if (m3) row("m3", std::to_string(*m3));
    if (theorem) row("theorem upper bound", std::to_string(*theorem));
    if (corollary) row("corollary bound", std::to_string(*corollary) + "  (S(2m,m) case, m=" + std::to_string(spec.m2) + ")");
    row("lower main term 1", lower_main_1.str());
    row("lower main term 2", lower_main_2.str());
    row("best upper bound", std::to_string(best.value) + "  [" + upper_bound_kind_name(best.by) + "]");
    return out.str();
}

std::string BoundsReport::machine() const {
    std::ostringstream out;
    out << "m1=" << spec.m1 << " m2=" << spec.m2 << " t1=" << t1 << " t2=" << t2 << " golden=" << (flags.golden ? 1 : 0)
        << " gap=" << (flags.gap ? 1 : 0) << " classical_bound=" << classical << " weak_bound=" << weak;
    if (m3) out << " m3=" << *m3;
    if (corollary) out << " corollary_bound=" << *corollary;
    out << " lower_main_1=" << lower_main_1.str() << " lower_main_2=" << lower_main_2.str();
    out << " r_b=" << rb;
    if (theorem) out << " theorem_bound=" << *theorem;
    out << " best_upper=" << best.value << " best_upper_by=" << upper_bound_kind_name(best.by);
    return out.str();
}

} // namespace doublestar
