#include "minoruniv/decomposition.hpp"

#include <algorithm>
#include <deque>

#include "minoruniv/search.hpp"

namespace minoruniv {

namespace {

std::string vset_str(const std::set<VertexId>& s) {
    std::string out = "{";
    for (VertexId v : s) out += std::to_string(v) + ",";
    if (out.size() > 1) out.pop_back();
    return out + "}";
}

}  // namespace

DecompositionReport verify_decomposition(const Graph& g, const TreeDecomposition& td) {
    DecompositionReport rep;
    if (td.tree.empty()) {
        rep.violation = "decomposition tree is empty";
        return rep;
    }
    if (!is_tree(td.tree)) {
        rep.violation = "decomposition tree is not a tree";
        return rep;
    }
    for (const auto& [t, _] : td.tree.adjacency()) {
        if (!td.bags.count(t)) {
            rep.violation = "node " + std::to_string(t) + " has no bag";
            return rep;
        }
    }
    if (td.bags.size() != td.tree.vertex_count()) {
        rep.violation = "bags mention nodes outside the tree";
        return rep;
    }
    for (const auto& [t, bag] : td.bags) {
        for (VertexId v : bag) {
            if (!g.has_vertex(v)) {
                rep.violation = "bag of node " + std::to_string(t) + " contains unknown vertex " +
                                std::to_string(v);
                return rep;
            }
        }
    }

    // covering: every vertex and every edge lies in some bag
    std::map<VertexId, std::vector<TreeNode>> holders;
    for (const auto& [t, bag] : td.bags)
        for (VertexId v : bag) holders[v].push_back(t);
    for (const auto& [v, _] : g.adjacency()) {
        if (!holders.count(v)) {
            rep.violation = "vertex " + std::to_string(v) + " is in no bag";
            return rep;
        }
    }
    for (const Edge& e : g.edges()) {
        bool covered = false;
        for (TreeNode t : holders[e.u]) {
            if (td.bags.at(t).count(e.v)) {
                covered = true;
                break;
            }
        }
        if (!covered) {
            rep.violation = "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                            " is in no bag";
            return rep;
        }
    }

    // connectivity: the nodes holding each vertex induce a connected subtree
    for (const auto& [v, nodes] : holders) {
        std::set<TreeNode> want(nodes.begin(), nodes.end());
        std::set<TreeNode> seen{*want.begin()};
        std::deque<TreeNode> queue{*want.begin()};
        while (!queue.empty()) {
            TreeNode t = queue.front();
            queue.pop_front();
            for (TreeNode u : td.tree.neighbors(t))
                if (want.count(u) && seen.insert(u).second) queue.push_back(u);
        }
        if (seen.size() != want.size()) {
            rep.violation = "bags holding vertex " + std::to_string(v) +
                            " do not induce a connected subtree";
            return rep;
        }
    }

    rep.valid = true;
    rep.width = -1;
    for (const auto& [_, bag] : td.bags)
        rep.width = std::max(rep.width, static_cast<int>(bag.size()) - 1);
    for (const Edge& te : td.tree.edges()) {
        const auto& a = td.bags.at(te.u);
        const auto& b = td.bags.at(te.v);
        std::set<VertexId> inter;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                              std::inserter(inter, inter.begin()));
        rep.adhesion = std::max(rep.adhesion, static_cast<int>(inter.size()));
        for (VertexId x : inter)
            for (VertexId y : inter)
                if (x < y && !g.has_edge(x, y)) rep.adhesion_sets_complete_in_g = false;
    }
    return rep;
}

std::uint64_t ell(std::uint64_t w, std::uint64_t k) {
    if (w < 1 || k < 1) throw std::invalid_argument("ell requires w >= 1 and k >= 1");
    auto overflow = [&]() {
        return std::overflow_error("ell(" + std::to_string(w) + "," + std::to_string(k) +
                                   ") exceeds 64-bit range");
    };
    std::uint64_t w1, dw;
    if (__builtin_add_overflow(w, std::uint64_t(1), &w1) ||
        __builtin_add_overflow(w, w, &dw))
        throw overflow();
    std::uint64_t value = 1;
    for (std::uint64_t i = 2; i <= k; ++i) {
        std::uint64_t scaled;
        if (__builtin_mul_overflow(value, w1, &scaled) || __builtin_add_overflow(scaled, dw, &value))
            throw overflow();
    }
    return value;
}

namespace {

// Diameter path of a tree via double BFS; deterministic (least start, least
// parent choice through ordered adjacency).
std::vector<TreeNode> tree_diameter_path(const Graph& tree) {
    auto bfs_far = [&](TreeNode s) {
        std::map<TreeNode, TreeNode> parent{{s, s}};
        std::vector<TreeNode> order{s};
        std::deque<TreeNode> queue{s};
        while (!queue.empty()) {
            TreeNode t = queue.front();
            queue.pop_front();
            for (TreeNode u : tree.neighbors(t)) {
                if (!parent.count(u)) {
                    parent[u] = t;
                    order.push_back(u);
                    queue.push_back(u);
                }
            }
        }
        return std::make_pair(order, parent);
    };
    TreeNode start = tree.vertices().front();
    auto [order1, par1] = bfs_far(start);
    TreeNode a = order1.back();
    auto [order2, par2] = bfs_far(a);
    TreeNode b = order2.back();
    std::vector<TreeNode> path{b};
    while (par2[path.back()] != path.back()) path.push_back(par2[path.back()]);
    std::reverse(path.begin(), path.end());  // from a to b
    return path;
}

int tree_diameter(const Graph& tree) {
    return static_cast<int>(tree_diameter_path(tree).size()) - 1;
}

// Nodes lying on every longest path of the tree: t qualifies iff deleting it
// drops the diameter.
std::vector<TreeNode> on_every_longest_path(const Graph& tree) {
    int diam = tree_diameter(tree);
    std::vector<TreeNode> out;
    for (const auto& [t, _] : tree.adjacency()) {
        Graph pruned = tree;
        pruned.remove_vertex(t);
        int best = -1;
        for (const auto& comp : connected_components(pruned))
            best = std::max(best, tree_diameter(pruned.induced(comp)));
        if (best < diam) out.push_back(t);
    }
    return out;
}

struct PathInstance {
    std::vector<VertexId> vertices;
    int length() const { return static_cast<int>(vertices.size()) - 1; }
};

// Runs the lifting recursion: pick a node t on every longest tree path, split
// the graph path around bag t, recurse into the branch holding the longest
// fragment. Each level ends by handing up a diameter path, which the
// recursion's counting argument guarantees is long enough; a failed count
// trips a logic_error instead of returning a short path.
std::vector<TreeNode> lift_recurse(const TreeDecomposition& td, const PathInstance& path, int k,
                                   int w) {
    std::vector<TreeNode> diam = tree_diameter_path(td.tree);
    if (k == 1) {
        if (static_cast<int>(diam.size()) - 1 >= 1) return diam;
        throw std::logic_error(
            "lift_long_path: single-node tree at k=1 (the witness edge sits inside one bag)");
    }

    // pick a node lying on every longest tree path, minimizing the largest
    // component of path - bag, ties by least node id
    std::vector<TreeNode> anchors = on_every_longest_path(td.tree);
    if (anchors.empty()) throw std::logic_error("tree has no node on every longest path");
    TreeNode best_t = anchors.front();
    long best_score = -1;
    for (TreeNode t : anchors) {
        const auto& bag = td.bags.at(t);
        long largest = 0, run = 0;
        for (VertexId v : path.vertices) {
            if (bag.count(v)) {
                largest = std::max(largest, run);
                run = 0;
            } else {
                ++run;
            }
        }
        largest = std::max(largest, run);
        if (best_score < 0 || largest < best_score) {
            best_score = largest;
            best_t = t;
        }
    }

    const auto& bag = td.bags.at(best_t);
    // longest fragment of path - bag
    std::vector<std::vector<VertexId>> fragments;
    std::vector<VertexId> run;
    for (VertexId v : path.vertices) {
        if (bag.count(v)) {
            if (!run.empty()) fragments.push_back(run);
            run.clear();
        } else {
            run.push_back(v);
        }
    }
    if (!run.empty()) fragments.push_back(run);
    std::uint64_t need = ell(static_cast<std::uint64_t>(w), static_cast<std::uint64_t>(k) - 1);
    const std::vector<VertexId>* fragment = nullptr;
    for (const auto& f : fragments)
        if (f.size() >= need + 1) fragment = &f;
    if (!fragment)
        throw std::logic_error("lift_long_path: counting invariant broke (no fragment of length " +
                               std::to_string(need) + ")");

    // component of tree - t containing the fragment
    Graph pruned = td.tree;
    pruned.remove_vertex(best_t);
    std::set<VertexId> frag_set(fragment->begin(), fragment->end());
    std::set<TreeNode> comp;
    for (const auto& candidate : connected_components(pruned)) {
        for (TreeNode u : candidate) {
            const auto& ubag = td.bags.at(u);
            if (ubag.count((*fragment)[0])) {
                comp = candidate;
                break;
            }
        }
        if (!comp.empty()) break;
    }
    if (comp.empty()) throw std::logic_error("lift_long_path: fragment not in any branch");

    TreeDecomposition sub;
    sub.tree = td.tree.induced(comp);
    for (TreeNode u : comp) {
        std::set<VertexId> nb;
        for (VertexId v : td.bags.at(u))
            if (frag_set.count(v)) nb.insert(v);
        sub.bags[u] = nb;
    }
    PathInstance subpath{*fragment};
    std::vector<TreeNode> q = lift_recurse(sub, subpath, k - 1, w);
    if (static_cast<int>(q.size()) - 1 < k - 1)
        throw std::logic_error("lift_long_path: recursion returned a short path at k=" +
                               std::to_string(k));
    // q avoids best_t yet best_t lies on every longest path, so q is not a
    // longest path of the current tree and the diameter is at least k
    if (static_cast<int>(diam.size()) - 1 < k)
        throw std::logic_error("lift_long_path: proof invariant broke at k=" + std::to_string(k));
    return diam;
}

}  // namespace

std::vector<TreeNode> lift_long_path(const Graph& g, const TreeDecomposition& td, int k,
                                     std::optional<int> w_opt,
                                     std::optional<std::vector<VertexId>> supplied_path) {
    if (k < 1) throw std::invalid_argument("lift_long_path: k must be >= 1");
    DecompositionReport rep = verify_decomposition(g, td);
    if (!rep.valid)
        throw std::invalid_argument("lift_long_path: invalid decomposition: " + rep.violation);
    int w = w_opt.value_or(rep.width + 1);
    if (rep.width >= w)
        throw std::invalid_argument("lift_long_path: width " + std::to_string(rep.width) +
                                    " is not below w=" + std::to_string(w));
    if (w < 1) throw std::invalid_argument("lift_long_path: w must be >= 1");

    std::vector<VertexId> path;
    if (supplied_path) {
        path = *supplied_path;
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            if (!g.has_edge(path[i], path[i + 1]))
                throw std::invalid_argument("lift_long_path: supplied path uses a non-edge");
        std::set<VertexId> uniq(path.begin(), path.end());
        if (uniq.size() != path.size())
            throw std::invalid_argument("lift_long_path: supplied path repeats a vertex");
    } else {
        path = longest_path(g);
    }
    std::uint64_t need = ell(static_cast<std::uint64_t>(w), static_cast<std::uint64_t>(k));
    if (path.size() < need + 1)
        throw std::invalid_argument("lift_long_path: path length " +
                                    std::to_string(path.size() - 1) + " is below ell_w(k) = " +
                                    std::to_string(need));
    return lift_recurse(td, PathInstance{path}, k, w);
}

LocatedMinor locate_minor_part(const Graph& g, const TreeDecomposition& td, const Graph& pattern,
                               const MinorModel& model) {
    DecompositionReport rep = verify_decomposition(g, td);
    if (!rep.valid)
        throw std::invalid_argument("locate_minor_part: invalid decomposition: " + rep.violation);
    if (!rep.adhesion_sets_complete_in_g)
        throw std::invalid_argument("locate_minor_part: an adhesion set is not complete in g");
    std::size_t conn = vertex_connectivity(pattern);
    if (conn <= static_cast<std::size_t>(rep.adhesion))
        throw std::invalid_argument("locate_minor_part: pattern connectivity " +
                                    std::to_string(conn) + " does not exceed adhesion " +
                                    std::to_string(rep.adhesion));
    std::string why;
    if (!verify_model(model, &why))
        throw std::invalid_argument("locate_minor_part: model does not verify: " + why);

    // side sets U_{(t,u)} per directed tree edge
    auto side_vertices = [&](TreeNode t, TreeNode u) {
        Graph pruned = td.tree;
        pruned.remove_edge(t, u);
        std::set<TreeNode> side = component_of(pruned, u);
        std::set<VertexId> verts;
        for (TreeNode s : side) {
            const auto& bag = td.bags.at(s);
            verts.insert(bag.begin(), bag.end());
        }
        return verts;
    };
    auto all_sets_meet = [&](const std::set<VertexId>& region) {
        for (const auto& [pv, bs] : model.branch_sets) {
            bool meets = false;
            for (VertexId v : bs)
                if (region.count(v)) {
                    meets = true;
                    break;
                }
            if (!meets) return false;
        }
        return true;
    };

    // orient each edge toward a side met by all branch sets
    std::map<std::pair<TreeNode, TreeNode>, bool> toward;  // (t,u) -> true if oriented t->u
    for (const Edge& te : td.tree.edges()) {
        bool to_v = all_sets_meet(side_vertices(te.u, te.v));
        bool to_u = all_sets_meet(side_vertices(te.v, te.u));
        if (!to_v && !to_u)
            throw std::logic_error("locate_minor_part: no valid orientation for tree edge " +
                                   std::to_string(te.u) + "-" + std::to_string(te.v));
        toward[{te.u, te.v}] = to_v;
        toward[{te.v, te.u}] = to_u;
    }

    // follow a maximal directed path from the least node
    TreeNode cur = td.tree.vertices().front();
    std::set<TreeNode> visited{cur};
    for (;;) {
        TreeNode next = -1;
        for (TreeNode u : td.tree.neighbors(cur)) {
            if (!visited.count(u) && toward[{cur, u}]) {
                next = u;
                break;
            }
        }
        if (next < 0) break;
        visited.insert(next);
        cur = next;
    }
    // at the sink every branch set meets the bag
    const std::set<VertexId>& bag = td.bags.at(cur);

    LocatedMinor out;
    out.node = cur;
    out.restricted.pattern = pattern;
    out.restricted.host = g.induced(bag);
    for (const auto& [pv, bs] : model.branch_sets) {
        std::set<VertexId>& restricted = out.restricted.branch_sets[pv];
        for (VertexId v : bs)
            if (bag.count(v)) restricted.insert(v);
        if (restricted.empty())
            throw std::logic_error("locate_minor_part: branch set of " + std::to_string(pv) +
                                   " misses the sink bag");
    }
    for (const Edge& pe : pattern.edges()) {
        const auto& bu = out.restricted.branch_sets.at(pe.u);
        const auto& bv = out.restricted.branch_sets.at(pe.v);
        bool found = false;
        for (VertexId a : bu) {
            for (VertexId b : bv) {
                if (out.restricted.host.has_edge(a, b)) {
                    out.restricted.edge_witnesses.emplace(pe, Edge(a, b));
                    found = true;
                    break;
                }
            }
            if (found) break;
        }
        if (!found)
            throw std::logic_error("locate_minor_part: no witness for pattern edge " +
                                   std::to_string(pe.u) + "-" + std::to_string(pe.v) +
                                   " inside bag " + vset_str(bag));
    }
    if (!verify_model(out.restricted, &why))
        throw std::logic_error("locate_minor_part: restricted model fails verification: " + why);
    return out;
}

Graph torso(const Graph& g, const TreeDecomposition& td, TreeNode t) {
    auto it = td.bags.find(t);
    if (it == td.bags.end()) throw std::invalid_argument("torso: unknown node");
    Graph out = g.induced(it->second);
    for (TreeNode u : td.tree.neighbors(t)) {
        const auto& other = td.bags.at(u);
        std::vector<VertexId> inter;
        for (VertexId v : it->second)
            if (other.count(v)) inter.push_back(v);
        for (std::size_t i = 0; i < inter.size(); ++i)
            for (std::size_t j = i + 1; j < inter.size(); ++j) out.add_edge(inter[i], inter[j]);
    }
    return out;
}

}  // namespace minoruniv
