#include "minoruniv/blocks.hpp"

#include <algorithm>
#include <map>

namespace minoruniv {

namespace {

// Iterative lowpoint DFS emitting biconnected components as vertex sets.
struct BlockFinder {
    const Graph& g;
    std::map<VertexId, int> disc, low;
    std::map<VertexId, VertexId> parent;
    std::set<VertexId> cutverts;
    std::vector<std::set<VertexId>> comps;
    std::vector<Edge> edge_stack;
    int timer = 0;

    explicit BlockFinder(const Graph& graph) : g(graph) {}

    void pop_component(const Edge& until) {
        std::set<VertexId> comp;
        for (;;) {
            Edge e = edge_stack.back();
            edge_stack.pop_back();
            comp.insert(e.u);
            comp.insert(e.v);
            if (e == until) break;
        }
        comps.push_back(std::move(comp));
    }

    void run(VertexId root) {
        struct Frame {
            VertexId v;
            std::set<VertexId>::const_iterator it, end;
        };
        std::vector<Frame> stack;
        disc[root] = low[root] = timer++;
        stack.push_back({root, g.neighbors(root).begin(), g.neighbors(root).end()});
        int root_children = 0;
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.it == f.end) {
                VertexId v = f.v;
                stack.pop_back();
                if (!stack.empty()) {
                    VertexId u = stack.back().v;
                    low[u] = std::min(low[u], low[v]);
                    if (low[v] >= disc[u]) {
                        if (u != root || root_children > 1) cutverts.insert(u);
                        // root with >1 child handled when its subtree pops below
                        pop_component(Edge(u, v));
                    }
                }
                continue;
            }
            VertexId w = *f.it++;
            VertexId v = f.v;
            if (!disc.count(w)) {
                if (v == root) ++root_children;
                parent[w] = v;
                edge_stack.push_back(Edge(v, w));
                disc[w] = low[w] = timer++;
                stack.push_back({w, g.neighbors(w).begin(), g.neighbors(w).end()});
            } else if (parent.count(v) == 0 || parent[v] != w) {
                if (disc[w] < disc[v]) {
                    edge_stack.push_back(Edge(v, w));
                    low[v] = std::min(low[v], disc[w]);
                }
            }
        }
        if (root_children > 1) cutverts.insert(root);
    }
};

}  // namespace

BlockDecomposition blocks(const Graph& g) {
    if (g.empty()) return {};
    if (!is_connected(g)) throw std::invalid_argument("blocks: graph must be connected");

    BlockDecomposition out;
    if (g.vertex_count() == 1) {
        out.blocks.push_back({g.vertices().front()});
        return out;
    }

    BlockFinder finder(g);
    finder.run(g.vertices().front());
    out.cutvertices = finder.cutverts;

    // Order blocks so that every prefix union is connected and each new block
    // meets the prefix in exactly one vertex (a cutvertex).
    std::vector<std::set<VertexId>> remaining = finder.comps;
    std::sort(remaining.begin(), remaining.end());
    std::vector<char> taken(remaining.size(), 0);

    out.blocks.push_back(remaining[0]);
    taken[0] = 1;
    out.attachments.push_back(-1);
    std::set<VertexId> covered = remaining[0];
    for (std::size_t step = 1; step < remaining.size(); ++step) {
        bool advanced = false;
        for (std::size_t j = 0; j < remaining.size() && !advanced; ++j) {
            if (taken[j]) continue;
            std::vector<VertexId> shared;
            for (VertexId v : remaining[j])
                if (covered.count(v)) shared.push_back(v);
            if (shared.size() == 1) {
                out.blocks.push_back(remaining[j]);
                out.attachments.push_back(shared[0]);
                covered.insert(remaining[j].begin(), remaining[j].end());
                taken[j] = 1;
                advanced = true;
            }
        }
        if (!advanced) throw std::logic_error("blocks: could not extend prefix-connected order");
    }
    return out;
}

std::vector<std::set<VertexId>> all_blocks(const Graph& g) {
    std::vector<std::set<VertexId>> out;
    for (const auto& comp : connected_components(g)) {
        BlockDecomposition bd = blocks(g.induced(comp));
        out.insert(out.end(), bd.blocks.begin(), bd.blocks.end());
    }
    return out;
}

}  // namespace minoruniv
