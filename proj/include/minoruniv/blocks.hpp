#pragma once

#include <vector>

#include "minoruniv/graph.hpp"

namespace minoruniv {

// Block-cut structure of a connected graph: maximal 2-connected subgraphs,
// bridges (K2), or an isolated vertex (K1), with an ordering whose prefix
// unions are connected and meet the next block in exactly one vertex.
struct BlockDecomposition {
    std::vector<std::set<VertexId>> blocks;   // in prefix-connected order
    std::set<VertexId> cutvertices;
    // attachment[j] = the single vertex blocks[j] shares with the prefix (j >= 1)
    std::vector<VertexId> attachments;
};

// Throws std::invalid_argument on disconnected input; run per component.
BlockDecomposition blocks(const Graph& g);

// Blocks of each component, concatenated (attachments only valid per component).
std::vector<std::set<VertexId>> all_blocks(const Graph& g);

}  // namespace minoruniv
