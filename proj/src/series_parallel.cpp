#include "minoruniv/series_parallel.hpp"

#include <deque>
#include <map>

namespace minoruniv {

bool is_k4_minor_free(const Graph& g) {
    // multigraph adjacency with edge multiplicities (loops never stored)
    std::map<VertexId, std::map<VertexId, int>> adj;
    for (const auto& [v, _] : g.adjacency()) adj[v];
    for (const Edge& e : g.edges()) {
        adj[e.u][e.v] = 1;
        adj[e.v][e.u] = 1;
    }

    auto degree = [&](VertexId v) {
        int d = 0;
        for (const auto& [_, mult] : adj[v]) d += mult;
        return d;
    };

    std::deque<VertexId> queue;
    for (const auto& [v, _] : adj) queue.push_back(v);

    auto requeue = [&](VertexId v) { queue.push_back(v); };

    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        auto it = adj.find(v);
        if (it == adj.end()) continue;

        // collapse parallel edges at v first
        for (auto& [w, mult] : it->second) {
            if (mult > 1) {
                mult = 1;
                adj[w][v] = 1;
                requeue(w);
            }
        }

        int d = degree(v);
        if (d <= 1) {
            for (const auto& [w, _] : it->second) {
                adj[w].erase(v);
                requeue(w);
            }
            adj.erase(it);
            continue;
        }
        if (d == 2) {
            // after collapsing, degree 2 means two distinct neighbors
            auto nb = it->second.begin();
            VertexId a = nb->first;
            VertexId b = std::next(nb)->first;
            adj[a].erase(v);
            adj[b].erase(v);
            adj.erase(it);
            adj[a][b] += 1;
            adj[b][a] = adj[a][b];
            requeue(a);
            requeue(b);
            continue;
        }
    }

    return adj.empty();
}

}  // namespace minoruniv
