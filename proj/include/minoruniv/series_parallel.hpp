#pragma once

#include "minoruniv/graph.hpp"

namespace minoruniv {

// Independent K4-minor-freeness oracle by multigraph reduction: delete
// degree-<=1 vertices, suppress degree-2 vertices, collapse parallel edges and
// drop loops until stable. The graph is K4-minor-free iff nothing remains
// (a simple irreducible remainder has min degree >= 3 and so a K4 minor).
bool is_k4_minor_free(const Graph& g);

}  // namespace minoruniv
