#include <algorithm>

#include "minoruniv/search.hpp"
#include "indexed.hpp"

namespace minoruniv {

namespace {

using detail::Indexed;

// Backtracking embedder shared by the induced and plain-subgraph searches.
// Candidate filtering: vertex color equality, degree dominance, and per-color
// incident-edge counts. Assignment order is most-constrained-first.
class Embedder {
public:
    Embedder(const ColoredGraph& pattern, const ColoredGraph& host, bool induced,
             std::size_t budget)
        : p_(Indexed::build(pattern)), h_(Indexed::build(host)), induced_(induced), budget_(budget) {}

    SearchResult<VertexMap> run(const VertexMap& anchor) {
        if (p_.n > h_.n) return SearchResult<VertexMap>::make_none(budget_.used());
        img_.assign(p_.n, -1);
        used_.assign(h_.n, 0);
        for (const auto& [pv, hv] : anchor) {
            int pp = p_.pos_of(pv), hp = h_.pos_of(hv);
            if (pp < 0) throw std::invalid_argument("anchor mentions unknown pattern vertex");
            if (hp < 0) return SearchResult<VertexMap>::make_none(budget_.used());
            if (used_[hp] || !candidate_ok(pp, hp) || !consistent(pp, hp))
                return SearchResult<VertexMap>::make_none(budget_.used());
            img_[pp] = hp;
            used_[hp] = 1;
        }
        build_order();
        bool found = extend(0);
        if (found) {
            VertexMap out;
            for (int i = 0; i < p_.n; ++i) out[p_.ids[i]] = h_.ids[img_[i]];
            return SearchResult<VertexMap>::make_found(std::move(out), budget_.used());
        }
        if (budget_.exhausted()) return SearchResult<VertexMap>::make_inconclusive(budget_.used());
        return SearchResult<VertexMap>::make_none(budget_.used());
    }

private:
    Indexed p_, h_;
    bool induced_;
    Budget budget_;
    std::vector<int> img_;
    std::vector<char> used_;
    std::vector<int> order_;

    static std::vector<std::map<int, int>> color_degrees(const Indexed& ix) {
        std::vector<std::map<int, int>> out(ix.n);
        for (int v = 0; v < ix.n; ++v)
            for (const auto& [_, col] : ix.adj[v]) ++out[v][col];
        return out;
    }

    bool candidate_ok(int pv, int hv) {
        if (p_.vcol[pv] != h_.vcol[hv]) return false;
        if (p_.degree(pv) > h_.degree(hv)) return false;
        if (pcd_.empty()) {
            pcd_ = color_degrees(p_);
            hcd_ = color_degrees(h_);
        }
        for (const auto& [col, cnt] : pcd_[pv]) {
            auto it = hcd_[hv].find(col);
            if (it == hcd_[hv].end() || it->second < cnt) return false;
        }
        return true;
    }

    bool consistent(int pv, int hv) {
        for (int q = 0; q < p_.n; ++q) {
            if (img_[q] < 0 || q == pv) continue;
            int pe = p_.edge_color_at(pv, q);
            int he = h_.edge_color_at(hv, img_[q]);
            if (pe >= 0) {
                if (he != pe) return false;
            } else if (induced_ && he >= 0) {
                return false;
            }
        }
        return true;
    }

    void build_order() {
        std::vector<char> placed(p_.n, 0);
        for (int i = 0; i < p_.n; ++i) placed[i] = img_[i] >= 0;
        order_.clear();
        for (int step = 0; step < p_.n; ++step) {
            int best = -1;
            std::size_t best_links = 0, best_deg = 0;
            for (int v = 0; v < p_.n; ++v) {
                if (placed[v]) continue;
                std::size_t links = 0;
                for (const auto& [w, _] : p_.adj[v]) links += placed[w];
                std::size_t deg = p_.degree(v);
                if (best < 0 || links > best_links ||
                    (links == best_links && deg > best_deg)) {
                    best = v;
                    best_links = links;
                    best_deg = deg;
                }
            }
            if (best < 0) break;
            placed[best] = 1;
            order_.push_back(best);
        }
    }

    bool extend(std::size_t depth) {
        if (depth == order_.size()) return true;
        int pv = order_[depth];
        for (int hv = 0; hv < h_.n; ++hv) {
            if (used_[hv]) continue;
            if (!budget_.tick()) return false;
            if (!candidate_ok(pv, hv) || !consistent(pv, hv)) continue;
            img_[pv] = hv;
            used_[hv] = 1;
            if (extend(depth + 1)) return true;
            img_[pv] = -1;
            used_[hv] = 0;
            if (budget_.exhausted()) return false;
        }
        return false;
    }

    std::vector<std::map<int, int>> pcd_, hcd_;
};

}  // namespace

SearchResult<VertexMap> find_induced_embedding(const ColoredGraph& pattern, const ColoredGraph& host,
                                               std::size_t budget) {
    return Embedder(pattern, host, true, budget).run({});
}

SearchResult<VertexMap> find_induced_embedding_anchored(const ColoredGraph& pattern,
                                                        const ColoredGraph& host,
                                                        const VertexMap& anchor, std::size_t budget) {
    return Embedder(pattern, host, true, budget).run(anchor);
}

SearchResult<VertexMap> find_subgraph_embedding(const ColoredGraph& pattern, const ColoredGraph& host,
                                                std::size_t budget) {
    return Embedder(pattern, host, false, budget).run({});
}

bool check_embedding(const ColoredGraph& pattern, const ColoredGraph& host, const VertexMap& map,
                     bool induced) {
    if (map.size() != pattern.vertex_count()) return false;
    std::set<VertexId> image;
    for (const auto& [pv, hv] : map) {
        if (!pattern.base.has_vertex(pv) || !host.base.has_vertex(hv)) return false;
        if (!image.insert(hv).second) return false;  // injective
        if (pattern.vcolor(pv) != host.vcolor(hv)) return false;
    }
    auto pverts = pattern.base.vertices();
    for (std::size_t i = 0; i < pverts.size(); ++i) {
        for (std::size_t j = i + 1; j < pverts.size(); ++j) {
            VertexId pu = pverts[i], pv = pverts[j];
            VertexId hu = map.at(pu), hv = map.at(pv);
            bool pe = pattern.base.has_edge(pu, pv);
            bool he = host.base.has_edge(hu, hv);
            if (pe) {
                if (!he) return false;
                if (pattern.ecolor(Edge(pu, pv)) != host.ecolor(Edge(hu, hv))) return false;
            } else if (induced && he) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace minoruniv
