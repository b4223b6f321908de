#pragma once

#include <map>

#include "minoruniv/graph.hpp"

namespace minoruniv {

// Graph with a c-edge-coloring and a d-vertex-coloring. An uncolored graph
// is the c = 1, d = 1 case, so one code path serves both.
struct ColoredGraph {
    Graph base;
    int c = 1;
    int d = 1;
    std::map<VertexId, int> vertex_color;
    std::map<Edge, int> edge_color;

    ColoredGraph() = default;

    // Monochrome wrapper (all colors 0).
    explicit ColoredGraph(const Graph& g, int c_ = 1, int d_ = 1) : base(g), c(c_), d(d_) {
        for (const auto& [v, _] : g.adjacency()) vertex_color[v] = 0;
        for (const Edge& e : g.edges()) edge_color[e] = 0;
    }

    int vcolor(VertexId v) const {
        auto it = vertex_color.find(v);
        if (it == vertex_color.end())
            throw std::invalid_argument("vertex without color: " + std::to_string(v));
        return it->second;
    }

    int ecolor(const Edge& e) const {
        auto it = edge_color.find(e);
        if (it == edge_color.end())
            throw std::invalid_argument("edge without color: " + std::to_string(e.u) + "-" +
                                        std::to_string(e.v));
        return it->second;
    }

    void set_vcolor(VertexId v, int color) {
        base.add_vertex(v);
        vertex_color[v] = color;
    }

    void set_ecolor(const Edge& e, int color) {
        base.add_edge(e);
        edge_color[e] = color;
    }

    std::size_t vertex_count() const { return base.vertex_count(); }
    std::size_t edge_count() const { return base.edge_count(); }

    // Checks totality of both colorings and color ranges; throws on violation.
    void validate() const;

    ColoredGraph induced(const std::set<VertexId>& keep) const {
        ColoredGraph out;
        out.c = c;
        out.d = d;
        out.base = base.induced(keep);
        for (const auto& [v, _] : out.base.adjacency()) out.vertex_color[v] = vcolor(v);
        for (const Edge& e : out.base.edges()) out.edge_color[e] = ecolor(e);
        return out;
    }

    bool operator==(const ColoredGraph& other) const = default;
};

ColoredGraph colored_disjoint_union(const ColoredGraph& a, const ColoredGraph& b);

// Copy with every vertex id shifted by `offset`.
ColoredGraph shift_ids(const ColoredGraph& g, VertexId offset);

}  // namespace minoruniv
