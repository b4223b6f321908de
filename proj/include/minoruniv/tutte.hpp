#pragma once

#include "minoruniv/decomposition.hpp"

namespace minoruniv {

enum class TorsoKind { ThreeConnected, Cycle, K1, K2 };

std::string torso_kind_name(TorsoKind k);

// Tree-decomposition of adhesion <= 2 whose torsos are 3-connected graphs,
// cycles, K1, or K2. Every torso edge absent from the graph carries a path
// witness: a path in g between its endpoints with no inner vertex in the part.
struct TutteDecomposition {
    TreeDecomposition td;
    std::map<TreeNode, TorsoKind> torso_kind;
    std::map<TreeNode, std::vector<Edge>> virtual_edges;
    std::map<TreeNode, std::map<Edge, std::vector<VertexId>>> path_witnesses;

    // The torso graph of a node: induced bag subgraph plus its virtual edges.
    Graph torso_graph(const Graph& g, TreeNode t) const;
};

// Deterministic recursive splitting on 2-separations: the lexicographically
// least separator is chosen, components are processed least-vertex first, and
// same-separator parts are chained so every torso stays simple.
TutteDecomposition tutte_decomposition(const Graph& g);

struct TutteReport {
    bool valid = false;
    std::string violation;
    int adhesion = 0;
};

// Checks the underlying decomposition, adhesion <= 2, torso-kind
// classification (against connectivity oracles), and all path witnesses.
TutteReport verify_tutte(const Graph& g, const TutteDecomposition& dec);

std::string tutte_to_json(const TutteDecomposition& dec);
TutteDecomposition tutte_from_json(const std::string& text);

}  // namespace minoruniv
