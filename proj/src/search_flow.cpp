#include <algorithm>
#include <deque>

#include "minoruniv/search.hpp"
#include "indexed.hpp"

namespace minoruniv {

namespace {

using detail::Indexed;

// Unit-capacity max flow on the vertex-split digraph (Menger). Small and
// exact; everything here runs at desk scale.
struct FlowNet {
    struct Arc {
        int to;
        int cap;
        int rev;   // index of reverse arc in arcs[to]
        bool fwd;  // original direction (reverse stubs start at cap 0)
    };
    std::vector<std::vector<Arc>> arcs;

    explicit FlowNet(int nodes) : arcs(nodes) {}

    void add(int a, int b, int cap) {
        arcs[a].push_back({b, cap, static_cast<int>(arcs[b].size()), true});
        arcs[b].push_back({a, 0, static_cast<int>(arcs[a].size()) - 1, false});
    }

    // One BFS augmentation; true if a unit of flow was pushed.
    bool augment(int s, int t) {
        std::vector<std::pair<int, int>> pred(arcs.size(), {-1, -1});  // (node, arc idx)
        std::deque<int> queue{s};
        pred[s] = {s, -1};
        while (!queue.empty() && pred[t].first == -1) {
            int u = queue.front();
            queue.pop_front();
            for (int i = 0; i < static_cast<int>(arcs[u].size()); ++i) {
                const Arc& a = arcs[u][i];
                if (a.cap > 0 && pred[a.to].first == -1) {
                    pred[a.to] = {u, i};
                    queue.push_back(a.to);
                }
            }
        }
        if (pred[t].first == -1) return false;
        for (int v = t; v != s;) {
            auto [u, i] = pred[v];
            arcs[u][i].cap -= 1;
            arcs[arcs[u][i].to][arcs[u][i].rev].cap += 1;
            v = u;
        }
        return true;
    }
};

// Builds the split network: in(i)=2i, out(i)=2i+1.
FlowNet split_network(const Indexed& ix, int extra_nodes) {
    FlowNet net(2 * ix.n + extra_nodes);
    for (int i = 0; i < ix.n; ++i) net.add(2 * i, 2 * i + 1, 1);
    for (int i = 0; i < ix.n; ++i)
        for (const auto& [j, _] : ix.adj[i]) net.add(2 * i + 1, 2 * j, 1);
    return net;
}

}  // namespace

std::size_t vertex_connectivity(const Graph& g) {
    std::size_t n = g.vertex_count();
    if (n <= 1) return 0;
    if (!is_connected(g)) return 0;
    if (g.edge_count() == n * (n - 1) / 2) return n - 1;  // complete

    Indexed ix = Indexed::build(ColoredGraph(g));
    std::size_t best = n - 1;
    for (int s = 0; s < ix.n; ++s) {
        for (int t = s + 1; t < ix.n; ++t) {
            if (ix.edge_color_at(s, t) >= 0) continue;  // Menger needs non-adjacent pairs
            FlowNet net = split_network(ix, 0);
            std::size_t flow = 0;
            while (flow < best && net.augment(2 * s + 1, 2 * t)) ++flow;
            best = std::min(best, flow);
            if (best == 0) return 0;
        }
    }
    return best;
}

std::vector<std::vector<VertexId>> disjoint_set_paths(const Graph& g, const std::set<VertexId>& a,
                                                      const std::set<VertexId>& b, std::size_t want) {
    for (VertexId v : a)
        if (b.count(v)) throw std::invalid_argument("disjoint_set_paths: sets must be disjoint");
    Indexed ix = Indexed::build(ColoredGraph(g));
    FlowNet net = split_network(ix, 2);
    int source = 2 * ix.n, sink = 2 * ix.n + 1;
    for (VertexId v : a) {
        int p = ix.pos_of(v);
        if (p >= 0) net.add(source, 2 * p, 1);
    }
    for (VertexId v : b) {
        int p = ix.pos_of(v);
        if (p >= 0) net.add(2 * p + 1, sink, 1);
    }
    std::size_t flow = 0;
    while (flow < want && net.augment(source, sink)) ++flow;

    // Decompose: follow saturated arcs (those whose reverse gained capacity).
    std::vector<std::vector<VertexId>> paths;
    std::vector<std::vector<char>> used(net.arcs.size());
    for (std::size_t u = 0; u < net.arcs.size(); ++u) used[u].assign(net.arcs[u].size(), 0);
    auto flow_on = [&](int u, int i) {
        const auto& arc = net.arcs[u][i];
        // net flow on a forward arc equals the capacity its reverse stub gained
        return arc.fwd && net.arcs[arc.to][arc.rev].cap > 0 && !used[u][i];
    };
    for (int i = 0; i < static_cast<int>(net.arcs[source].size()); ++i) {
        if (!flow_on(source, i)) continue;
        used[source][i] = 1;
        std::vector<VertexId> path;
        int cur = net.arcs[source][i].to;
        while (cur != sink) {
            if (cur % 2 == 0) path.push_back(ix.ids[cur / 2]);
            bool stepped = false;
            for (int j = 0; j < static_cast<int>(net.arcs[cur].size()); ++j) {
                if (flow_on(cur, j)) {
                    used[cur][j] = 1;
                    cur = net.arcs[cur][j].to;
                    stepped = true;
                    break;
                }
            }
            if (!stepped) throw std::logic_error("flow decomposition stuck");
        }
        paths.push_back(std::move(path));
    }
    return paths;
}

}  // namespace minoruniv
