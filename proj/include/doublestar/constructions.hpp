#pragma once

#include "doublestar/bounds.hpp"
#include "doublestar/colouring.hpp"

namespace doublestar {

// Witness colouring on r_b(spec) - 1 vertices with no monochromatic copy of
// the double star. Vertices split into two low/high index blocks, edges
// inside a block are Red and edges across are Blue:
//   t1 >  2*t2: blocks {0..t1-2} and {t1-1..2t1-3}, equal size t1 - 1
//   t1 <= 2*t2: blocks {0..t1+t2-2} (a Red clique of size t1+t2-1) and the
//               remaining t2 - 1 vertices
// Red components are too small to hold the m1+m2+2 tree vertices, and the
// Blue graph is complete bipartite with no side of size t1.
Colouring2 canonical_colouring(const DoubleStarSpec& spec);

} // namespace doublestar
