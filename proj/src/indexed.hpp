#pragma once

// Internal dense view used by the search engines. Not part of the public API.

#include <algorithm>
#include <vector>

#include "minoruniv/colored_graph.hpp"

namespace minoruniv::detail {

inline constexpr int kMatrixCap = 700;  // adjacency matrix only below this size

struct Indexed {
    int n = 0;
    std::vector<VertexId> ids;                              // position -> id, ascending
    std::vector<int> vcol;                                  // position -> vertex color
    std::vector<std::vector<std::pair<int, int>>> adj;      // (neighbor position, edge color)
    std::vector<std::vector<int>> mat;                      // -1 = non-edge, else color
    bool has_mat = false;

    int pos_of(VertexId v) const {
        auto it = std::lower_bound(ids.begin(), ids.end(), v);
        if (it == ids.end() || *it != v) return -1;
        return static_cast<int>(it - ids.begin());
    }

    int edge_color_at(int i, int j) const {
        if (has_mat) return mat[i][j];
        for (const auto& [k, col] : adj[i])
            if (k == j) return col;
        return -1;
    }

    std::size_t degree(int i) const { return adj[i].size(); }

    static Indexed build(const ColoredGraph& g) {
        Indexed ix;
        ix.n = static_cast<int>(g.vertex_count());
        ix.ids = g.base.vertices();
        ix.vcol.resize(ix.n);
        ix.adj.resize(ix.n);
        for (int i = 0; i < ix.n; ++i) ix.vcol[i] = g.vcolor(ix.ids[i]);
        ix.has_mat = ix.n <= kMatrixCap;
        if (ix.has_mat) ix.mat.assign(ix.n, std::vector<int>(ix.n, -1));
        for (const Edge& e : g.base.edges()) {
            int i = ix.pos_of(e.u), j = ix.pos_of(e.v);
            int col = g.ecolor(e);
            ix.adj[i].emplace_back(j, col);
            ix.adj[j].emplace_back(i, col);
            if (ix.has_mat) ix.mat[i][j] = ix.mat[j][i] = col;
        }
        for (auto& row : ix.adj) std::sort(row.begin(), row.end());
        return ix;
    }
};

}  // namespace minoruniv::detail
