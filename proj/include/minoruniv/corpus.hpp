#pragma once

#include <cstdint>

#include "minoruniv/decomposition.hpp"
#include "minoruniv/graph.hpp"

namespace minoruniv {

// Deterministic splittable generator (splitmix64 streams). All corpus
// randomness flows from one seed; no ambient entropy anywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Independent stream for subtask `index`.
    Rng split(std::uint64_t index) const {
        Rng child(state_ ^ (0x9e3779b97f4a7c15ull * (index + 1)));
        child.next();
        return child;
    }

    int uniform(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    bool chance(double p) { return (next() >> 11) * 0x1.0p-53 < p; }
};

// G(n, p) with vertex ids 0..n-1.
Graph random_graph(Rng& rng, int n, double p);

// Uniform random labeled tree (random attachment).
Graph random_tree(Rng& rng, int n);

Graph random_connected_graph(Rng& rng, int n, double p);

// Random cycle plus random chords/ears; checked 2-connected.
Graph random_two_connected(Rng& rng, int n, int extra_edges);

// Grown from an edge by series subdivisions and parallel length-2 ears;
// always K4-minor-free and connected.
Graph random_series_parallel(Rng& rng, int n);

// Connected guest whose blocks are single edges or triangles.
Graph random_edge_triangle_blocks(Rng& rng, int blocks);

// Instance for the path-lifting property: a graph, a valid decomposition of
// width < w, and a witness path of length exactly ell_w(k).
struct LiftInstance {
    Graph g;
    TreeDecomposition td;
    std::vector<VertexId> path;
};
LiftInstance random_lift_instance(Rng& rng, int w, int k);

// Instance for the located-minor property: parts glued along complete
// adhesion sets (single vertices, or edges when pattern connectivity allows
// adhesion 2) with the pattern planted as a subgraph of one part.
struct GluedInstance {
    Graph g;
    TreeDecomposition td;
    Graph pattern;
};
GluedInstance random_glued_instance(Rng& rng, const Graph& pattern, int parts, int part_size,
                                    int adhesion);

// All graphs on exactly n vertices up to isomorphism (grown by vertex
// addition, deduplicated canonically). n stays small.
std::vector<Graph> all_graphs_up_to_iso(int n);

}  // namespace minoruniv
