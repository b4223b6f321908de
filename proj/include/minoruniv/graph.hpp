#pragma once

#include <compare>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace minoruniv {

using VertexId = int;

// Unordered pair of distinct vertex ids, stored with u < v.
struct Edge {
    VertexId u;
    VertexId v;

    Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {
        if (a == b) throw std::invalid_argument("self-loop edge " + std::to_string(a));
    }

    auto operator<=>(const Edge&) const = default;
};

// Finite simple undirected graph with stable integer vertex ids.
// Ids survive subgraph operations; nothing is ever renumbered.
class Graph {
public:
    Graph() = default;

    void add_vertex(VertexId v) { adj_.try_emplace(v); }

    VertexId add_fresh_vertex() {
        VertexId v = fresh_id();
        add_vertex(v);
        return v;
    }

    // Inserts missing endpoints. No-op if the edge exists.
    void add_edge(VertexId a, VertexId b) {
        Edge e(a, b);
        add_vertex(e.u);
        add_vertex(e.v);
        if (adj_[e.u].insert(e.v).second) {
            adj_[e.v].insert(e.u);
            ++edge_count_;
        }
    }

    void add_edge(const Edge& e) { add_edge(e.u, e.v); }

    void remove_edge(VertexId a, VertexId b) {
        Edge e(a, b);
        auto it = adj_.find(e.u);
        if (it == adj_.end()) return;
        if (it->second.erase(e.v)) {
            adj_[e.v].erase(e.u);
            --edge_count_;
        }
    }

    void remove_vertex(VertexId v) {
        auto it = adj_.find(v);
        if (it == adj_.end()) return;
        for (VertexId w : it->second) {
            adj_[w].erase(v);
            --edge_count_;
        }
        adj_.erase(it);
    }

    bool has_vertex(VertexId v) const { return adj_.count(v) != 0; }

    bool has_edge(VertexId a, VertexId b) const {
        if (a == b) return false;
        auto it = adj_.find(a);
        return it != adj_.end() && it->second.count(b) != 0;
    }

    bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }

    std::size_t vertex_count() const { return adj_.size(); }
    std::size_t edge_count() const { return edge_count_; }
    bool empty() const { return adj_.empty(); }

    const std::set<VertexId>& neighbors(VertexId v) const {
        auto it = adj_.find(v);
        if (it == adj_.end()) throw std::invalid_argument("unknown vertex " + std::to_string(v));
        return it->second;
    }

    std::size_t degree(VertexId v) const { return neighbors(v).size(); }

    std::vector<VertexId> vertices() const {
        std::vector<VertexId> out;
        out.reserve(adj_.size());
        for (const auto& [v, _] : adj_) out.push_back(v);
        return out;
    }

    std::set<VertexId> vertex_set() const {
        std::set<VertexId> out;
        for (const auto& [v, _] : adj_) out.insert(v);
        return out;
    }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(edge_count_);
        for (const auto& [v, nbrs] : adj_)
            for (VertexId w : nbrs)
                if (v < w) out.emplace_back(v, w);
        return out;
    }

    const std::map<VertexId, std::set<VertexId>>& adjacency() const { return adj_; }

    VertexId fresh_id() const { return adj_.empty() ? 0 : adj_.rbegin()->first + 1; }

    Graph induced(const std::set<VertexId>& keep) const {
        Graph g;
        for (VertexId v : keep)
            if (has_vertex(v)) g.add_vertex(v);
        for (VertexId v : keep) {
            if (!has_vertex(v)) continue;
            for (VertexId w : neighbors(v))
                if (v < w && keep.count(w)) g.add_edge(v, w);
        }
        return g;
    }

    bool operator==(const Graph& other) const = default;

private:
    std::map<VertexId, std::set<VertexId>> adj_;
    std::size_t edge_count_ = 0;
};

// Connected components as sorted vertex sets, ordered by least vertex.
std::vector<std::set<VertexId>> connected_components(const Graph& g);

bool is_connected(const Graph& g);

// Component of `g` containing `v`.
std::set<VertexId> component_of(const Graph& g, VertexId v);

// True iff `g` is acyclic.
bool is_forest(const Graph& g);

// True iff `g` is a single cycle (connected, 2-regular, >= 3 vertices).
bool is_cycle_graph(const Graph& g);

// True iff `g` is a tree (connected and acyclic).
bool is_tree(const Graph& g);

// Disjoint union; throws if vertex ids collide.
Graph disjoint_union(const Graph& a, const Graph& b);

// Breadth-first path between two vertex sets, empty if none.
// The path is returned as a vertex sequence from `from` to `to`.
std::vector<VertexId> shortest_path_between(const Graph& g, const std::set<VertexId>& from,
                                            const std::set<VertexId>& to);

}  // namespace minoruniv
