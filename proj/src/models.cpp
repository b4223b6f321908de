#include "minoruniv/models.hpp"

#include <algorithm>
#include <functional>

#include "minoruniv/search.hpp"

namespace minoruniv {

namespace {

int leaf_count(const Graph& tree) {
    if (tree.vertex_count() == 1) return 1;
    int leaves = 0;
    for (const auto& [v, nbrs] : tree.adjacency()) leaves += nbrs.size() == 1;
    return leaves;
}

// Exact bounded-length path check by depth-limited DFS; cheap for small bounds.
bool has_path_of_exact_small_length(const Graph& g, int len) {
    if (len <= 0) return !g.empty();
    for (const auto& [start, _] : g.adjacency()) {
        std::set<VertexId> used{start};
        std::function<bool(VertexId, int)> dfs = [&](VertexId cur, int remaining) -> bool {
            if (remaining == 0) return true;
            for (VertexId w : g.neighbors(cur)) {
                if (used.count(w)) continue;
                used.insert(w);
                if (dfs(w, remaining - 1)) return true;
                used.erase(w);
            }
            return false;
        };
        if (dfs(start, len)) return true;
    }
    return false;
}

}  // namespace

std::vector<Graph> bounded_leaf_trees(int max_leaves, int path_len, std::size_t max_results) {
    std::vector<Graph> out;
    std::set<std::string> seen;
    std::vector<Graph> frontier;

    auto admit = [&](const Graph& t) {
        if (leaf_count(t) >= max_leaves) return;
        if (has_path_of_exact_small_length(t, path_len)) return;
        std::string key = canonical_form_exact(ColoredGraph(t));
        if (!seen.insert(key).second) return;
        out.push_back(t);
        frontier.push_back(t);
        if (out.size() > max_results)
            throw CatalogLimitError("tree enumeration exceeded " + std::to_string(max_results));
    };

    Graph single;
    single.add_vertex(0);
    admit(single);
    std::size_t head = 0;
    while (head < frontier.size()) {
        Graph t = frontier[head++];
        VertexId fresh = t.fresh_id();
        for (const auto& [v, _] : t.adjacency()) {
            Graph bigger = t;
            bigger.add_edge(v, fresh);
            admit(bigger);
        }
    }
    return out;
}

std::vector<Graph> enumerate_forbidden_models(const Graph& x, int n, const ModelEnumLimits& limits) {
    if (x.empty()) throw std::invalid_argument("enumerate_forbidden_models: empty pattern");
    if (!is_connected(x))
        throw std::invalid_argument("enumerate_forbidden_models: pattern must be connected");

    int size = static_cast<int>(x.vertex_count());
    std::vector<Graph> trees = bounded_leaf_trees(size, n, limits.max_models);
    std::vector<VertexId> pverts = x.vertices();
    std::vector<Edge> pedges = x.edges();

    std::vector<Graph> models;
    std::set<std::string> seen;
    std::size_t assemblies = 0;

    // current assembly state
    std::vector<Graph> chosen(pverts.size());
    std::vector<VertexId> offset(pverts.size(), 0);

    std::function<void(std::size_t, const Graph&)> fill_edges;
    std::function<void(std::size_t)> pick_trees = [&](std::size_t i) {
        if (i == pverts.size()) {
            Graph base;
            for (const Graph& t : chosen)
                for (const auto& [v, _] : t.adjacency()) base.add_vertex(v);
            for (const Graph& t : chosen)
                for (const Edge& e : t.edges()) base.add_edge(e);
            fill_edges(0, base);
            return;
        }
        for (const Graph& t : trees) {
            VertexId off = i == 0 ? 0 : offset[i - 1];
            Graph shifted;
            for (const auto& [v, _] : t.adjacency()) shifted.add_vertex(v + off);
            for (const Edge& e : t.edges()) shifted.add_edge(e.u + off, e.v + off);
            chosen[i] = shifted;
            offset[i] = off + static_cast<VertexId>(t.vertex_count());
            pick_trees(i + 1);
        }
    };

    fill_edges = [&](std::size_t ei, const Graph& sofar) {
        if (++assemblies > limits.max_assemblies)
            throw CatalogLimitError("model enumeration exceeded " +
                                    std::to_string(limits.max_assemblies) + " assemblies");
        if (ei == pedges.size()) {
            std::string key = canonical_form_exact(ColoredGraph(sofar));
            if (seen.insert(key).second) {
                models.push_back(sofar);
                if (models.size() > limits.max_models)
                    throw CatalogLimitError("model enumeration exceeded " +
                                            std::to_string(limits.max_models) + " models");
            }
            return;
        }
        // choose a nonempty cross-edge set for pattern edge ei
        std::size_t a = 0, b = 0;
        for (std::size_t i = 0; i < pverts.size(); ++i) {
            if (pverts[i] == pedges[ei].u) a = i;
            if (pverts[i] == pedges[ei].v) b = i;
        }
        std::vector<std::pair<VertexId, VertexId>> pairs;
        for (const auto& [va, _] : chosen[a].adjacency())
            for (const auto& [vb, _] : chosen[b].adjacency()) pairs.emplace_back(va, vb);

        std::function<void(std::size_t, const Graph&, bool)> subsets =
            [&](std::size_t pi, const Graph& acc, bool any) {
                if (has_path_of_exact_small_length(acc, n)) return;  // prune long paths early
                if (pi == pairs.size()) {
                    if (any) fill_edges(ei + 1, acc);
                    return;
                }
                subsets(pi + 1, acc, any);  // skip this pair
                Graph with = acc;
                with.add_edge(pairs[pi].first, pairs[pi].second);
                subsets(pi + 1, with, true);
            };
        subsets(0, sofar, false);
    };

    pick_trees(0);
    std::sort(models.begin(), models.end(), [](const Graph& a, const Graph& b) {
        if (a.vertex_count() != b.vertex_count()) return a.vertex_count() < b.vertex_count();
        return canonical_form_exact(ColoredGraph(a)) < canonical_form_exact(ColoredGraph(b));
    });
    return models;
}

SearchResult<ClassEquivalence> check_class_equivalence(const Graph& g, const Graph& x, int n,
                                                       std::size_t budget) {
    ClassEquivalence result;
    bool path_free = longest_path_length(g) < n;

    if (!path_free) {
        result.minor_side = false;  // a path subgraph is a path minor
    } else {
        auto res = find_minor_model(x, g, budget);
        if (res.inconclusive())
            return SearchResult<ClassEquivalence>::make_inconclusive(res.nodes);
        result.minor_side = res.none();
    }

    if (!path_free) {
        result.subgraph_side = false;
    } else {
        result.subgraph_side = true;
        for (const Graph& model : enumerate_forbidden_models(x, n)) {
            if (model.vertex_count() > g.vertex_count()) continue;
            auto res = find_subgraph_embedding(ColoredGraph(model), ColoredGraph(g), budget);
            if (res.inconclusive())
                return SearchResult<ClassEquivalence>::make_inconclusive(res.nodes);
            if (res.found()) {
                result.subgraph_side = false;
                break;
            }
        }
    }

    result.equal = result.minor_side == result.subgraph_side;
    return SearchResult<ClassEquivalence>::make_found(result, 0);
}

}  // namespace minoruniv
