#include <algorithm>
#include <sstream>

#include "minoruniv/search.hpp"
#include "indexed.hpp"

namespace minoruniv {

namespace {

using detail::Indexed;

struct BudgetOut {};

// Canonical labeling by color refinement plus individualization: the label is
// the lexicographically least certificate over all refinement leaves.
class Canonizer {
public:
    Canonizer(const ColoredGraph& g, std::size_t budget) : g_(g), ix_(Indexed::build(g)), budget_(budget) {}

    SearchResult<std::string> run() {
        if (static_cast<std::size_t>(ix_.n) > kCanonicalVertexCap * 4)
            throw std::invalid_argument("canonical_form capped at " +
                                        std::to_string(kCanonicalVertexCap * 4) + " vertices");
        std::vector<std::vector<int>> cells(1);
        cells[0].resize(ix_.n);
        for (int i = 0; i < ix_.n; ++i) cells[0][i] = i;
        try {
            descend(std::move(cells));
        } catch (const BudgetOut&) {
            return SearchResult<std::string>::make_inconclusive(budget_.used());
        }
        return SearchResult<std::string>::make_found(std::move(best_), budget_.used());
    }

private:
    const ColoredGraph& g_;
    Indexed ix_;
    Budget budget_;
    std::string best_;
    bool have_best_ = false;

    using Partition = std::vector<std::vector<int>>;

    // Signature of a vertex under the current cell assignment: its color plus
    // the sorted multiset of (neighbor cell, edge color).
    static std::vector<int> signature(const Indexed& ix, const std::vector<int>& cell_of, int v) {
        std::vector<int> sig{ix.vcol[v]};
        std::vector<std::pair<int, int>> nb;
        nb.reserve(ix.adj[v].size());
        for (const auto& [w, col] : ix.adj[v]) nb.emplace_back(cell_of[w], col);
        std::sort(nb.begin(), nb.end());
        for (const auto& [cw, col] : nb) {
            sig.push_back(cw);
            sig.push_back(col);
        }
        return sig;
    }

    Partition refine(Partition cells) {
        for (;;) {
            if (!budget_.tick()) throw BudgetOut{};
            std::vector<int> cell_of(ix_.n);
            for (std::size_t ci = 0; ci < cells.size(); ++ci)
                for (int v : cells[ci]) cell_of[v] = static_cast<int>(ci);
            Partition next;
            bool changed = false;
            for (const auto& cell : cells) {
                if (cell.size() == 1) {
                    next.push_back(cell);
                    continue;
                }
                std::vector<std::pair<std::vector<int>, int>> keyed;
                keyed.reserve(cell.size());
                for (int v : cell) keyed.emplace_back(signature(ix_, cell_of, v), v);
                std::sort(keyed.begin(), keyed.end());
                std::vector<int> group{keyed[0].second};
                for (std::size_t i = 1; i < keyed.size(); ++i) {
                    if (keyed[i].first != keyed[i - 1].first) {
                        next.push_back(std::move(group));
                        group.clear();
                        changed = true;
                    }
                    group.push_back(keyed[i].second);
                }
                next.push_back(std::move(group));
            }
            cells = std::move(next);
            if (!changed) return cells;
        }
    }

    std::string certificate(const Partition& cells) const {
        std::vector<int> pos(ix_.n);
        for (std::size_t i = 0; i < cells.size(); ++i) pos[cells[i][0]] = static_cast<int>(i);
        std::ostringstream out;
        out << "n" << ix_.n << "c" << g_.c << "d" << g_.d << ";";
        for (const auto& cell : cells) out << ix_.vcol[cell[0]] << ",";
        out << ";";
        std::vector<std::tuple<int, int, int>> edges;
        for (int v = 0; v < ix_.n; ++v)
            for (const auto& [w, col] : ix_.adj[v])
                if (pos[v] < pos[w]) edges.emplace_back(pos[v], pos[w], col);
        std::sort(edges.begin(), edges.end());
        for (const auto& [a, b, col] : edges) out << a << "-" << b << ":" << col << ",";
        return out.str();
    }

    void descend(Partition cells) {
        cells = refine(std::move(cells));
        std::size_t split = cells.size();
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (cells[i].size() > 1) {
                split = i;
                break;
            }
        }
        if (split == cells.size()) {
            std::string cert = certificate(cells);
            if (!have_best_ || cert < best_) {
                best_ = std::move(cert);
                have_best_ = true;
            }
            return;
        }
        std::vector<int> targets = cells[split];
        std::sort(targets.begin(), targets.end());
        for (int v : targets) {
            Partition child;
            child.reserve(cells.size() + 1);
            for (std::size_t i = 0; i < split; ++i) child.push_back(cells[i]);
            child.push_back({v});
            std::vector<int> rest;
            for (int w : cells[split])
                if (w != v) rest.push_back(w);
            child.push_back(std::move(rest));
            for (std::size_t i = split + 1; i < cells.size(); ++i) child.push_back(cells[i]);
            descend(std::move(child));
        }
    }
};

}  // namespace

SearchResult<std::string> canonical_form(const ColoredGraph& g, std::size_t budget) {
    if (g.base.empty())
        return SearchResult<std::string>::make_found("n0c" + std::to_string(g.c) + "d" +
                                                         std::to_string(g.d) + ";;",
                                                     0);
    return Canonizer(g, budget).run();
}

std::string canonical_form_exact(const ColoredGraph& g, std::size_t budget) {
    auto res = canonical_form(g, budget);
    if (!res.found()) throw std::runtime_error("canonical_form: search budget exhausted");
    return res.get();
}

bool colored_isomorphic(const ColoredGraph& a, const ColoredGraph& b, std::size_t budget) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    if (a.c != b.c || a.d != b.d) return false;
    return canonical_form_exact(a, budget) == canonical_form_exact(b, budget);
}

std::vector<std::vector<VertexId>> vertex_orbits(const ColoredGraph& g, std::size_t budget) {
    std::map<std::string, std::vector<VertexId>> groups;
    for (const auto& [v, _] : g.base.adjacency()) {
        ColoredGraph marked = g;
        marked.d = g.d * 2;
        marked.vertex_color[v] = g.vcolor(v) + g.d;  // single out v
        groups[canonical_form_exact(marked, budget)].push_back(v);
    }
    std::vector<std::vector<VertexId>> orbits;
    for (auto& [_, members] : groups) {
        std::sort(members.begin(), members.end());
        orbits.push_back(std::move(members));
    }
    std::sort(orbits.begin(), orbits.end());
    return orbits;
}

}  // namespace minoruniv
