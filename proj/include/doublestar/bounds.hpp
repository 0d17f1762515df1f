#pragma once

#include <optional>
#include <string>
#include <utility>

#include "doublestar/doublestar.hpp"

namespace doublestar {

// Exact rational with reduced representation, positive denominator.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d);

    std::string str() const;
    bool operator==(const Rational&) const = default;
};

// All bound computations are exact: integer comparisons of squares replace
// square roots, and scaled integers replace the decimal constants
// (1.699 = 1699/1000, 4.27492 = 427492/100000). No floating point anywhere.

// Classical lower bound max{2*t1, t1 + 2*t2} - 1 with t_i = m_i + 1.
long long r_b(const DoubleStarSpec& spec);

struct RangeFlags {
    bool golden; // (sqrt(5)+1)/2 * m2 < m1 < 3*m2
    bool gap;    // 1.699 * (m2+1) < m1 < 3*m2
};
RangeFlags range_flags(const DoubleStarSpec& spec);

// m3 = ceil( sqrt(2*m1^2 + (m1 + m2/2)^2) - (m1 + m2/2) ), evaluated as the
// least integer t with (2t + 2*m1 + m2)^2 >= 8*m1^2 + (2*m1 + m2)^2.
// Defined only inside the golden range.
long long m3_of(const DoubleStarSpec& spec);

// Golden-range upper bound ceil( sqrt(2*m1^2 + (m1 + m2/2)^2) + m2/2 ) + 1,
// evaluated as the least t with (2t - m2)^2 >= 8*m1^2 + (2*m1 + m2)^2 and
// 2t >= m2, plus one. Always equals m1 + m2 + m3 + 1.
long long theorem_bound(const DoubleStarSpec& spec);

// Specialisation to S(2m, m): ceil(4.27492 * m) + 1, exact in rationals.
long long corollary_bound(long long m);

// max{2*m1, m1 + 2*m2} + 2; valid whenever the spec is outside the gap range.
long long classical_bound(const DoubleStarSpec& spec);

// 2*m1 + m2 + 2; valid for every spec.
long long weak_bound(const DoubleStarSpec& spec);

enum class UpperBoundKind { Theorem, Classical, Weak };
const char* upper_bound_kind_name(UpperBoundKind k);

struct BestUpper {
    long long value;
    UpperBoundKind by;
};

// Minimum of the applicable upper bounds (theorem_bound needs golden,
// classical_bound needs non-gap, weak_bound always applies). Ties resolve to
// theorem, then classical, then weak.
BestUpper best_upper(const DoubleStarSpec& spec);

// Main terms of the two asymptotic lower bounds, as exact rationals:
// 5*m1/3 + 5*m2/6 and 189*m1/115 + 21*m2/23.
std::pair<Rational, Rational> lower_bound_main_terms(const DoubleStarSpec& spec);

// One-stop summary of everything above for a given spec.
struct BoundsReport {
    DoubleStarSpec spec;
    long long t1, t2;
    long long rb;
    RangeFlags flags;
    long long classical;
    long long weak;
    std::optional<long long> m3;        // golden range only
    std::optional<long long> theorem;   // golden range only
    std::optional<long long> corollary; // only when m1 == 2*m2
    Rational lower_main_1, lower_main_2;
    BestUpper best;

    static BoundsReport compute(const DoubleStarSpec& spec);
    std::string human() const;
    std::string machine() const;
};

} // namespace doublestar
