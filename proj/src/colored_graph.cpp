#include "minoruniv/colored_graph.hpp"

namespace minoruniv {

void ColoredGraph::validate() const {
    if (c < 1 || d < 1) throw std::invalid_argument("color counts must be positive");
    for (const auto& [v, _] : base.adjacency()) {
        auto it = vertex_color.find(v);
        if (it == vertex_color.end())
            throw std::invalid_argument("vertex " + std::to_string(v) + " has no color");
        if (it->second < 0 || it->second >= d)
            throw std::invalid_argument("vertex color out of range [0," + std::to_string(d) + ")");
    }
    if (vertex_color.size() != base.vertex_count())
        throw std::invalid_argument("vertex_color mentions unknown vertices");
    for (const Edge& e : base.edges()) {
        auto it = edge_color.find(e);
        if (it == edge_color.end())
            throw std::invalid_argument("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                        " has no color");
        if (it->second < 0 || it->second >= c)
            throw std::invalid_argument("edge color out of range [0," + std::to_string(c) + ")");
    }
    if (edge_color.size() != base.edge_count())
        throw std::invalid_argument("edge_color mentions unknown edges");
}

ColoredGraph colored_disjoint_union(const ColoredGraph& a, const ColoredGraph& b) {
    if (a.c != b.c || a.d != b.d)
        throw std::invalid_argument("colored_disjoint_union: mismatched color counts");
    ColoredGraph out;
    out.c = a.c;
    out.d = a.d;
    out.base = disjoint_union(a.base, b.base);
    out.vertex_color = a.vertex_color;
    out.vertex_color.insert(b.vertex_color.begin(), b.vertex_color.end());
    out.edge_color = a.edge_color;
    out.edge_color.insert(b.edge_color.begin(), b.edge_color.end());
    return out;
}

ColoredGraph shift_ids(const ColoredGraph& g, VertexId offset) {
    ColoredGraph out;
    out.c = g.c;
    out.d = g.d;
    for (const auto& [v, color] : g.vertex_color) out.set_vcolor(v + offset, color);
    for (const auto& [e, color] : g.edge_color) out.set_ecolor(Edge(e.u + offset, e.v + offset), color);
    return out;
}

}  // namespace minoruniv
