#include "minoruniv/graph.hpp"

#include <algorithm>
#include <deque>

namespace minoruniv {

std::vector<std::set<VertexId>> connected_components(const Graph& g) {
    std::vector<std::set<VertexId>> comps;
    std::set<VertexId> seen;
    for (const auto& [v, _] : g.adjacency()) {
        if (seen.count(v)) continue;
        std::set<VertexId> comp = component_of(g, v);
        seen.insert(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::set<VertexId> component_of(const Graph& g, VertexId v) {
    std::set<VertexId> comp{v};
    std::deque<VertexId> queue{v};
    while (!queue.empty()) {
        VertexId u = queue.front();
        queue.pop_front();
        for (VertexId w : g.neighbors(u))
            if (comp.insert(w).second) queue.push_back(w);
    }
    return comp;
}

bool is_connected(const Graph& g) {
    if (g.empty()) return true;
    return component_of(g, g.adjacency().begin()->first).size() == g.vertex_count();
}

bool is_forest(const Graph& g) {
    // acyclic iff every component has |E| = |V| - 1; equivalently |E| = |V| - #components
    return g.edge_count() + connected_components(g).size() == g.vertex_count();
}

bool is_tree(const Graph& g) { return !g.empty() && is_connected(g) && is_forest(g); }

bool is_cycle_graph(const Graph& g) {
    if (g.vertex_count() < 3 || !is_connected(g)) return false;
    for (const auto& [v, nbrs] : g.adjacency())
        if (nbrs.size() != 2) return false;
    return true;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g = a;
    for (const auto& [v, _] : b.adjacency()) {
        if (a.has_vertex(v))
            throw std::invalid_argument("disjoint_union: vertex id collision at " + std::to_string(v));
        g.add_vertex(v);
    }
    for (const Edge& e : b.edges()) g.add_edge(e);
    return g;
}

std::vector<VertexId> shortest_path_between(const Graph& g, const std::set<VertexId>& from,
                                            const std::set<VertexId>& to) {
    std::map<VertexId, VertexId> parent;
    std::deque<VertexId> queue;
    for (VertexId v : from) {
        if (!g.has_vertex(v)) continue;
        parent[v] = v;
        queue.push_back(v);
    }
    while (!queue.empty()) {
        VertexId u = queue.front();
        queue.pop_front();
        if (to.count(u)) {
            std::vector<VertexId> path{u};
            while (parent[path.back()] != path.back()) path.push_back(parent[path.back()]);
            std::reverse(path.begin(), path.end());
            return path;
        }
        for (VertexId w : g.neighbors(u)) {
            if (!parent.count(w)) {
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    return {};
}

}  // namespace minoruniv
