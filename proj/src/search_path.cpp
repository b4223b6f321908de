#include <bit>
#include <cstdint>

#include "minoruniv/search.hpp"
#include "indexed.hpp"

namespace minoruniv {

namespace {

using detail::Indexed;

constexpr int kSubsetDpCap = 22;

// Subset DP: reach[mask] has bit v set iff a simple path covering exactly
// `mask` ends at v. Exact; memory 4 * 2^n bytes.
std::vector<int> longest_path_dp(const Indexed& ix, int stop_len) {
    const int n = ix.n;
    std::vector<std::uint32_t> nb(n, 0);
    for (int v = 0; v < n; ++v)
        for (const auto& [w, _] : ix.adj[v]) nb[v] |= (1u << w);

    std::vector<std::uint32_t> reach(std::size_t(1) << n, 0);
    for (int v = 0; v < n; ++v) reach[1u << v] = 1u << v;

    std::uint32_t best_mask = 1;
    int best_end = 0, best_len = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::uint32_t ends = reach[mask];
        if (!ends) continue;
        int len = std::popcount(mask) - 1;
        if (len > best_len) {
            best_len = len;
            best_mask = mask;
            best_end = std::countr_zero(ends);
            if (stop_len >= 0 && best_len >= stop_len) break;
        }
        std::uint32_t es = ends;
        while (es) {
            int v = std::countr_zero(es);
            es &= es - 1;
            std::uint32_t ext = nb[v] & ~mask;
            while (ext) {
                int w = std::countr_zero(ext);
                ext &= ext - 1;
                reach[mask | (1u << w)] |= (1u << w);
            }
        }
    }

    // Reconstruct backwards from (best_mask, best_end).
    std::vector<int> path{best_end};
    std::uint32_t mask = best_mask;
    int v = best_end;
    while (std::popcount(mask) > 1) {
        std::uint32_t prev = mask ^ (1u << v);
        std::uint32_t cands = reach[prev] & nb[v];
        int u = std::countr_zero(cands);
        path.push_back(u);
        mask = prev;
        v = u;
    }
    return path;
}

struct DfsState {
    const Indexed& ix;
    std::vector<char> used;
    std::vector<int> path;
    std::vector<int> best;
    int stop_len;

    // Upper bound: current path can grow by at most the number of unused
    // vertices reachable from its head.
    int reachable_bound(int head) const {
        std::vector<char> seen = used;
        std::vector<int> stack{head};
        seen[head] = 1;
        int count = 0;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (const auto& [w, _] : ix.adj[u]) {
                if (!seen[w]) {
                    seen[w] = 1;
                    ++count;
                    stack.push_back(w);
                }
            }
        }
        return count;
    }

    bool done() const { return stop_len >= 0 && static_cast<int>(best.size()) > stop_len; }

    void dfs(int v) {
        if (done()) return;
        if (path.size() > best.size()) best = path;
        if (done()) return;
        if (path.size() + reachable_bound(v) <= best.size()) return;
        for (const auto& [w, _] : ix.adj[v]) {
            if (used[w]) continue;
            used[w] = 1;
            path.push_back(w);
            dfs(w);
            path.pop_back();
            used[w] = 0;
            if (done()) return;
        }
    }
};

std::vector<int> longest_path_dfs(const Indexed& ix, int stop_len) {
    DfsState st{ix, std::vector<char>(ix.n, 0), {}, {}, stop_len};
    for (int v = 0; v < ix.n && !st.done(); ++v) {
        st.used.assign(ix.n, 0);
        st.used[v] = 1;
        st.path = {v};
        st.dfs(v);
    }
    return st.best;
}

std::vector<VertexId> longest_path_impl(const Graph& g, std::size_t cap, int stop_len) {
    if (g.empty()) return {};
    if (g.vertex_count() > cap)
        throw std::invalid_argument("exact longest-path search capped at " + std::to_string(cap) +
                                    " vertices; graph has " + std::to_string(g.vertex_count()));
    Indexed ix = Indexed::build(ColoredGraph(g));
    std::vector<int> best = ix.n <= kSubsetDpCap ? longest_path_dp(ix, stop_len)
                                                 : longest_path_dfs(ix, stop_len);
    std::vector<VertexId> out;
    out.reserve(best.size());
    for (int p : best) out.push_back(ix.ids[p]);
    return out;
}

}  // namespace

std::vector<VertexId> longest_path(const Graph& g, std::size_t cap) {
    return longest_path_impl(g, cap, -1);
}

int longest_path_length(const Graph& g, std::size_t cap) {
    if (g.empty()) return 0;
    return static_cast<int>(longest_path(g, cap).size()) - 1;
}

bool has_path_of_length(const Graph& g, int length, std::size_t cap) {
    if (length <= 0) return !g.empty();
    if (g.empty()) return false;
    return static_cast<int>(longest_path_impl(g, cap, length).size()) - 1 >= length;
}

}  // namespace minoruniv
