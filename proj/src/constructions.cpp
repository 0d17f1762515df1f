#include "doublestar/constructions.hpp"

namespace doublestar {

Colouring2 canonical_colouring(const DoubleStarSpec& spec) {
    long long t1 = spec.m1 + 1, t2 = spec.m2 + 1;
    int n = static_cast<int>(r_b(spec) - 1);
    int first_block = static_cast<int>(t1 > 2 * t2 ? t1 - 1 : t1 + t2 - 1);

    ColouringBuilder b(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            bool same_block = (u < first_block) == (v < first_block);
            b.set(u, v, same_block ? Colour::Red : Colour::Blue);
        }
    }
    return b.build();
}

} // namespace doublestar
