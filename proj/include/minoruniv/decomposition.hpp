#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "minoruniv/graph.hpp"
#include "minoruniv/minor.hpp"

namespace minoruniv {

using TreeNode = int;

struct TreeDecomposition {
    Graph tree;  // acyclic and connected over node ids
    std::map<TreeNode, std::set<VertexId>> bags;
};

struct DecompositionReport {
    bool valid = false;
    int width = -1;
    int adhesion = 0;
    bool adhesion_sets_complete_in_g = true;
    std::string violation;  // empty when valid
};

// Exact verification of both tree-decomposition axioms plus width/adhesion
// and adhesion-set completeness in g.
DecompositionReport verify_decomposition(const Graph& g, const TreeDecomposition& td);

// The recurrence ell_w(1) = 1, ell_w(k) = (w+1) * ell_w(k-1) + 2w, exact
// 64-bit arithmetic; throws std::overflow_error instead of wrapping.
std::uint64_t ell(std::uint64_t w, std::uint64_t k);

// Constructive form of the long-path lifting argument: returns a path of
// length >= k in td.tree (node sequence). The witness path in g may be
// supplied; otherwise an exact longest-path search provides it. `w` defaults
// to width+1. Preconditions (valid td, width < w, path length >= ell_w(k))
// are rejected with the failing measurement.
std::vector<TreeNode> lift_long_path(const Graph& g, const TreeDecomposition& td, int k,
                                     std::optional<int> w = std::nullopt,
                                     std::optional<std::vector<VertexId>> supplied_path = std::nullopt);

struct LocatedMinor {
    TreeNode node;
    MinorModel restricted;  // model of the pattern in g[bag]
};

// Edge-orientation procedure: orient each tree edge toward the side met by
// all branch sets, follow a maximal directed path, restrict the model to the
// sink's bag. Requires pattern connectivity exceeding the adhesion and all
// adhesion sets complete in g; violations are rejected with a diagnosis.
LocatedMinor locate_minor_part(const Graph& g, const TreeDecomposition& td, const Graph& pattern,
                               const MinorModel& model);

// Induced bag subgraph plus completed adhesion sets.
Graph torso(const Graph& g, const TreeDecomposition& td, TreeNode t);

}  // namespace minoruniv
