#pragma once

#include <vector>

#include "tasep/marked_tree.hpp"

namespace tasep {

/// The segment-moving permutation of marked trees.
///
/// Let v be the marked vertex. The child of v on the side opposite to v's
/// own side is deleted and v is contracted onto its remaining child e. The
/// deleted endpoint is then re-glued, and the vertex created by the gluing
/// becomes the new mark:
///  - generic: at the first endpoint beyond e (towards v's side) that is a
///    child on v's side, keeping its original orientation;
///  - boundary (no such endpoint): at the endpoint of the other orientation
///    closest to the far end in that direction, with flipped orientation.
/// The reduced configuration moves along the bond the mark stands for.
MarkedTree pi(const MarkedTree& t);

/// Inverse of pi: same deletion, search runs the other way, boundary glues
/// at the extreme endpoint in the search direction.
MarkedTree sigma(const MarkedTree& t);

using Cycle = std::vector<MarkedTree>;

/// Cycles of pi covering all marked trees with n + 2 endpoints. Each cycle
/// starts at its smallest element in the canonical order; cycles are sorted
/// by that leader.
std::vector<Cycle> cycle_decomposition(int n);

}  // namespace tasep
