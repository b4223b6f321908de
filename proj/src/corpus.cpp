#include "minoruniv/corpus.hpp"

#include <algorithm>

#include "minoruniv/search.hpp"

namespace minoruniv {

Graph random_graph(Rng& rng, int n, double p) {
    Graph g;
    for (int v = 0; v < n; ++v) g.add_vertex(v);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(p)) g.add_edge(u, v);
    return g;
}

Graph random_tree(Rng& rng, int n) {
    Graph g;
    g.add_vertex(0);
    for (int v = 1; v < n; ++v) g.add_edge(v, rng.uniform(0, v - 1));
    return g;
}

Graph random_connected_graph(Rng& rng, int n, double p) {
    Graph g = random_tree(rng, n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v) && rng.chance(p)) g.add_edge(u, v);
    return g;
}

Graph random_two_connected(Rng& rng, int n, int extra_edges) {
    if (n < 3) throw std::invalid_argument("random_two_connected: need n >= 3");
    std::vector<VertexId> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(order[i], order[rng.uniform(0, i)]);
    Graph g;
    for (int i = 0; i < n; ++i) g.add_edge(order[i], order[(i + 1) % n]);
    for (int e = 0; e < extra_edges; ++e) {
        int u = rng.uniform(0, n - 1), v = rng.uniform(0, n - 1);
        if (u != v) g.add_edge(u, v);
    }
    return g;  // a Hamiltonian cycle keeps it 2-connected
}

Graph random_series_parallel(Rng& rng, int n) {
    Graph g;
    g.add_edge(0, 1);
    std::vector<Edge> edges{Edge(0, 1)};
    VertexId next = 2;
    while (static_cast<int>(g.vertex_count()) < n) {
        const Edge& e = edges[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(edges.size()) - 1))];
        VertexId w = next++;
        if (rng.chance(0.5)) {
            // series: subdivide the edge
            g.remove_edge(e.u, e.v);
            g.add_edge(e.u, w);
            g.add_edge(w, e.v);
            std::vector<Edge> kept;
            for (const Edge& f : edges)
                if (!(f == e)) kept.push_back(f);
            kept.push_back(Edge(e.u, w));
            kept.push_back(Edge(w, e.v));
            edges = std::move(kept);
        } else {
            // parallel ear of length 2 across the edge
            g.add_edge(e.u, w);
            g.add_edge(w, e.v);
            edges.push_back(Edge(e.u, w));
            edges.push_back(Edge(w, e.v));
        }
    }
    return g;
}

Graph random_edge_triangle_blocks(Rng& rng, int blocks) {
    Graph g;
    g.add_vertex(0);
    VertexId next = 1;
    for (int b = 0; b < blocks; ++b) {
        std::vector<VertexId> verts = g.vertices();
        VertexId at = verts[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(verts.size()) - 1))];
        if (rng.chance(0.5)) {
            g.add_edge(at, next++);
        } else {
            VertexId x = next++, y = next++;
            g.add_edge(at, x);
            g.add_edge(x, y);
            g.add_edge(y, at);
        }
    }
    return g;
}

LiftInstance random_lift_instance(Rng& rng, int w, int k) {
    std::uint64_t length = ell(static_cast<std::uint64_t>(w), static_cast<std::uint64_t>(k));
    LiftInstance inst;
    int path_len = static_cast<int>(length);

    // the witness path
    for (int i = 0; i < path_len; ++i) inst.g.add_edge(i, i + 1);
    for (int i = 0; i <= path_len; ++i) inst.path.push_back(i);

    // path-decomposition bags {v_i, v_{i+1}} chained, width 1
    for (int i = 0; i < path_len; ++i) {
        inst.td.tree.add_vertex(i);
        if (i > 0) inst.td.tree.add_edge(i - 1, i);
        inst.td.bags[i] = {i, i + 1};
    }

    // decorations: pendant vertices when the width bound allows a 3-bag, and
    // duplicate-bag leaves hanging off the decomposition tree
    VertexId fresh = path_len + 1;
    TreeNode fresh_node = path_len;
    for (int i = 0; i < path_len; ++i) {
        if (w >= 3 && rng.chance(0.25)) {
            VertexId p = fresh++;
            inst.g.add_edge(i, p);
            inst.td.bags[i].insert(p);
        }
        if (rng.chance(0.2)) {
            TreeNode t = fresh_node++;
            inst.td.tree.add_edge(i, t);
            inst.td.bags[t] = inst.td.bags[i];
        }
    }
    return inst;
}

GluedInstance random_glued_instance(Rng& rng, const Graph& pattern, int parts, int part_size,
                                    int adhesion) {
    if (adhesion < 1 || adhesion > 2)
        throw std::invalid_argument("random_glued_instance: adhesion must be 1 or 2");
    GluedInstance inst;
    inst.pattern = pattern;
    int psize = static_cast<int>(pattern.vertex_count());
    int size = std::max(part_size, psize);

    std::vector<std::set<VertexId>> bags;
    VertexId next = 0;

    // one part per node; the first part carries the planted pattern
    for (int pi = 0; pi < parts; ++pi) {
        std::set<VertexId> bag;
        if (pi == 0) {
            std::vector<VertexId> ids;
            for (int i = 0; i < size; ++i) {
                bag.insert(next);
                ids.push_back(next++);
            }
            // plant the pattern as a subgraph on the first vertices
            std::vector<VertexId> pverts = pattern.vertices();
            std::map<VertexId, VertexId> into;
            for (int i = 0; i < psize; ++i) into[pverts[i]] = ids[i];
            for (const Edge& e : pattern.edges()) inst.g.add_edge(into[e.u], into[e.v]);
            for (VertexId v : ids) inst.g.add_vertex(v);
            // sprinkle extra edges
            for (int a = 0; a < size; ++a)
                for (int b = a + 1; b < size; ++b)
                    if (rng.chance(0.25)) inst.g.add_edge(ids[a], ids[b]);
            // keep the part connected
            for (int i = 1; i < size; ++i)
                if (inst.g.neighbors(ids[i]).empty()) inst.g.add_edge(ids[i], ids[rng.uniform(0, i - 1)]);
        } else {
            // glue set from an earlier part
            const std::set<VertexId>& target = bags[static_cast<std::size_t>(rng.uniform(0, pi - 1))];
            std::vector<VertexId> pool(target.begin(), target.end());
            std::set<VertexId> glue;
            while (static_cast<int>(glue.size()) < adhesion)
                glue.insert(pool[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(pool.size()) - 1))]);
            if (glue.size() == 2) {
                auto it = glue.begin();
                VertexId a = *it++, b = *it;
                inst.g.add_edge(a, b);  // adhesion sets must be complete
            }
            bag = glue;
            std::vector<VertexId> ids(glue.begin(), glue.end());
            for (int i = static_cast<int>(glue.size()); i < size; ++i) {
                bag.insert(next);
                ids.push_back(next++);
            }
            for (std::size_t i = glue.size(); i < ids.size(); ++i)
                inst.g.add_edge(ids[i], ids[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(i) - 1))]);
            for (std::size_t a = 0; a < ids.size(); ++a)
                for (std::size_t b = a + 1; b < ids.size(); ++b)
                    if (rng.chance(0.2)) inst.g.add_edge(ids[a], ids[b]);
        }
        bags.push_back(bag);
        TreeNode t = pi;
        inst.td.tree.add_vertex(t);
        inst.td.bags[t] = bag;
    }

    // connect decomposition nodes along shared glue vertices
    for (int pi = 1; pi < parts; ++pi) {
        for (int pj = 0; pj < pi; ++pj) {
            std::vector<VertexId> shared;
            for (VertexId v : bags[pi])
                if (bags[pj].count(v)) shared.push_back(v);
            if (static_cast<int>(shared.size()) >= adhesion) {
                inst.td.tree.add_edge(pj, pi);
                break;
            }
        }
    }
    return inst;
}

std::vector<Graph> all_graphs_up_to_iso(int n) {
    std::vector<Graph> current;
    Graph single;
    single.add_vertex(0);
    current.push_back(single);
    for (int size = 2; size <= n; ++size) {
        std::vector<Graph> next;
        std::set<std::string> seen;
        for (const Graph& g : current) {
            VertexId fresh = g.fresh_id();
            std::vector<VertexId> verts = g.vertices();
            std::uint64_t subsets = std::uint64_t(1) << verts.size();
            for (std::uint64_t mask = 0; mask < subsets; ++mask) {
                Graph bigger = g;
                bigger.add_vertex(fresh);
                for (std::size_t i = 0; i < verts.size(); ++i)
                    if ((mask >> i) & 1) bigger.add_edge(fresh, verts[i]);
                std::string key = canonical_form_exact(ColoredGraph(bigger));
                if (seen.insert(key).second) next.push_back(std::move(bigger));
            }
        }
        current = std::move(next);
    }
    return current;
}

}  // namespace minoruniv
