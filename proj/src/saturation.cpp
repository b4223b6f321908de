#include "minoruniv/saturation.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "minoruniv/search.hpp"

namespace minoruniv {

// ---- OmegaGraph -------------------------------------------------------------

void OmegaGraph::add(const ColoredGraph& comp, Mult m) {
    if (comp.base.empty()) throw std::invalid_argument("OmegaGraph: empty component");
    if (!is_connected(comp.base))
        throw std::invalid_argument("OmegaGraph: components must be connected");
    std::string key = canonical_form_exact(comp);
    for (auto& [existing, mult] : components) {
        if (canonical_form_exact(existing) == key) {
            if (m.omega || mult.omega)
                mult = Mult::inf();
            else
                mult = Mult::finite(mult.count + m.count);
            return;
        }
    }
    components.emplace_back(comp, m);
}

ColoredGraph OmegaGraph::expand(std::uint32_t unfold, VertexId id_base) const {
    // deterministic: components ordered by canonical key, copies in sequence
    std::vector<std::pair<std::string, const std::pair<ColoredGraph, Mult>*>> ordered;
    for (const auto& entry : components)
        ordered.emplace_back(canonical_form_exact(entry.first), &entry);
    std::sort(ordered.begin(), ordered.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    ColoredGraph out;
    VertexId next = id_base;
    for (const auto& [_, entry] : ordered) {
        const auto& [comp, mult] = *entry;
        if (!out.base.empty() && (out.c != comp.c || out.d != comp.d))
            throw std::invalid_argument("OmegaGraph: mixed palettes");
        out.c = comp.c;
        out.d = comp.d;
        for (std::uint32_t copy = 0; copy < mult.unfolded(unfold); ++copy) {
            std::map<VertexId, VertexId> rename;
            for (const auto& [v, color] : comp.vertex_color) {
                rename[v] = next++;
                out.set_vcolor(rename[v], color);
            }
            for (const auto& [e, color] : comp.edge_color)
                out.set_ecolor(Edge(rename[e.u], rename[e.v]), color);
        }
    }
    return out;
}

std::string OmegaGraph::canonical_key() const {
    std::vector<std::string> parts;
    for (const auto& [comp, mult] : components)
        parts.push_back(canonical_form_exact(comp) + "*" + mult.str());
    std::sort(parts.begin(), parts.end());
    std::ostringstream out;
    for (const auto& p : parts) out << p << "|";
    return out.str();
}

// ---- Saturation -------------------------------------------------------------

ColoredGraph Saturation::expand(std::uint32_t unfold) const {
    if (!pinned) return finite_member;
    VertexId base = 0;
    for (VertexId v : pt.pin_order) base = std::max(base, v + 1);
    ColoredGraph attached = pieces.expand(unfold, base);
    attached.d = pt.d_prime();
    attached.c = pt.c;
    return transform_t_inv(attached, pt);
}

bool Saturation::is_finite() const {
    if (!pinned) return true;
    for (const auto& [_, mult] : pieces.components)
        if (mult.omega) return false;
    return true;
}

std::string Saturation::canonical_key() const {
    if (!pinned) return "F:" + canonical_form_exact(finite_member);
    return "P:" + canonical_form_exact(pt.pin) + "#" + pieces.canonical_key();
}

// ---- ForbiddenSet -----------------------------------------------------------

ForbiddenSet ForbiddenSet::from_list(std::vector<ColoredGraph> list) {
    ForbiddenSet f;
    f.explicit_graphs = std::move(list);
    for (const auto& x : f.explicit_graphs)
        f.k = std::max(f.k, static_cast<int>(x.vertex_count()));
    return f;
}

ForbiddenSet ForbiddenSet::profile_complement(const ColoredGraph& base, int k) {
    ForbiddenSet f;
    f.profile_base = base;
    f.k = k;
    return f;
}

bool ForbiddenSet::is_free(const ColoredGraph& candidate) const {
    for (const auto& x : explicit_graphs) {
        auto res = find_subgraph_embedding(x, candidate);
        if (res.found()) return false;
        if (res.inconclusive())
            throw std::runtime_error("ForbiddenSet::is_free: search budget exhausted");
    }
    if (profile_base) {
        // every <= k-vertex subgraph of the candidate must appear in the base;
        // checking the induced part of each vertex subset suffices
        std::vector<VertexId> verts = candidate.base.vertices();
        int n = static_cast<int>(verts.size());
        int limit = std::min(n, k);
        std::vector<int> idx;
        std::function<bool(int, int)> scan = [&](int start, int remaining) -> bool {
            if (!idx.empty()) {
                std::set<VertexId> sub;
                for (int i : idx) sub.insert(verts[i]);
                ColoredGraph part = candidate.induced(sub);
                auto res = find_subgraph_embedding(part, *profile_base);
                if (res.inconclusive())
                    throw std::runtime_error("ForbiddenSet::is_free: profile budget exhausted");
                if (!res.found()) return false;
            }
            if (remaining == 0) return true;
            for (int i = start; i < n; ++i) {
                idx.push_back(i);
                bool ok = scan(i + 1, remaining - 1);
                idx.pop_back();
                if (!ok) return false;
            }
            return true;
        };
        if (!scan(0, limit)) return false;
    }
    return true;
}

bool ForbiddenSet::contains_all_path_colorings(int n, int c, int d) const {
    if (profile_base) {
        // all colorings are in the complement iff the base has no n-edge path
        // and the n+1 path vertices fit inside the profile domain
        if (longest_path_length(profile_base->base) >= n) return false;
        return n + 1 <= k;
    }
    for (const ColoredGraph& path : all_path_colorings(n, c, d)) {
        bool present = false;
        for (const auto& x : explicit_graphs) {
            if (colored_isomorphic(x, path)) {
                present = true;
                break;
            }
        }
        if (!present) return false;
    }
    return true;
}

std::vector<ColoredGraph> all_path_colorings(int n, int c, int d) {
    Graph path;
    path.add_vertex(0);
    for (int i = 0; i < n; ++i) path.add_edge(i, i + 1);

    std::vector<ColoredGraph> out;
    std::set<std::string> seen;
    std::vector<int> vcols(n + 1, 0), ecols(std::max(n, 0), 0);
    std::function<void(int)> rec_edges;
    std::function<void(int)> rec_verts = [&](int i) {
        if (i == n + 1) {
            rec_edges(0);
            return;
        }
        for (int col = 0; col < d; ++col) {
            vcols[i] = col;
            rec_verts(i + 1);
        }
    };
    rec_edges = [&](int i) {
        if (i == n) {
            ColoredGraph g(path, c, d);
            for (int v = 0; v <= n; ++v) g.vertex_color[v] = vcols[v];
            for (int e = 0; e < n; ++e) g.edge_color[Edge(e, e + 1)] = ecols[e];
            std::string key = canonical_form_exact(g);
            if (seen.insert(key).second) out.push_back(g);
            return;
        }
        for (int col = 0; col < c; ++col) {
            ecols[i] = col;
            rec_edges(i + 1);
        }
    };
    rec_verts(0);
    return out;
}

// ---- guest enumeration -------------------------------------------------------

std::vector<ColoredGraph> enumerate_connected_free_graphs(const std::vector<ColoredGraph>& forbidden,
                                                          int c, int d, int max_vertices,
                                                          std::size_t max_results) {
    ForbiddenSet fset = ForbiddenSet::from_list(forbidden);
    std::vector<ColoredGraph> frontier;
    std::vector<ColoredGraph> out;
    std::set<std::string> seen;

    auto admit = [&](const ColoredGraph& g) {
        if (!fset.is_free(g)) return false;  // freeness is inherited by supergraph pruning
        std::string key = canonical_form_exact(g);
        if (!seen.insert(key).second) return false;
        frontier.push_back(g);
        if (is_connected(g.base)) out.push_back(g);
        if (out.size() > max_results || frontier.size() > 8 * max_results)
            throw CatalogLimitError("guest enumeration exceeded " + std::to_string(max_results) +
                                    " graphs");
        return true;
    };

    for (int col = 0; col < d; ++col) {
        ColoredGraph g;
        g.c = c;
        g.d = d;
        g.set_vcolor(0, col);
        admit(g);
    }

    std::size_t head = 0;
    while (head < frontier.size()) {
        ColoredGraph g = frontier[head++];
        int n = static_cast<int>(g.vertex_count());
        if (n >= max_vertices) continue;
        VertexId fresh = g.base.fresh_id();
        std::vector<VertexId> verts = g.base.vertices();
        // all neighborhoods of the new vertex with all colorings
        std::uint64_t subsets = std::uint64_t(1) << n;
        for (std::uint64_t mask = 0; mask < subsets; ++mask) {
            std::vector<VertexId> nbrs;
            for (int i = 0; i < n; ++i)
                if ((mask >> i) & 1) nbrs.push_back(verts[i]);
            std::vector<int> ecols(nbrs.size(), 0);
            std::function<void(std::size_t)> rec = [&](std::size_t i) {
                if (i == nbrs.size()) {
                    for (int vcol = 0; vcol < d; ++vcol) {
                        ColoredGraph next = g;
                        next.set_vcolor(fresh, vcol);
                        for (std::size_t j = 0; j < nbrs.size(); ++j)
                            next.set_ecolor(Edge(fresh, nbrs[j]), ecols[j]);
                        admit(next);
                    }
                    return;
                }
                for (int col = 0; col < c; ++col) {
                    ecols[i] = col;
                    rec(i + 1);
                }
            };
            rec(0);
        }
    }

    std::sort(out.begin(), out.end(), [](const ColoredGraph& a, const ColoredGraph& b) {
        return canonical_form_exact(a) < canonical_form_exact(b);
    });
    return out;
}

// ---- saturate ----------------------------------------------------------------

namespace {

// Longest path normalized by reversal so the pin choice is reproducible.
std::vector<VertexId> canonical_longest_path(const Graph& g) {
    std::vector<VertexId> p = longest_path(g);
    std::vector<VertexId> r(p.rbegin(), p.rend());
    return r < p ? r : p;
}

Saturation saturate_impl(const ColoredGraph& g, const ForbiddenSet& forbidden, int n,
                         const SaturationLimits& limits, bool check_preconditions) {
    if (g.base.empty()) throw std::invalid_argument("saturate: empty guest");
    if (static_cast<int>(g.vertex_count()) > limits.max_guest_vertices)
        throw CatalogLimitError("saturate: guest exceeds " +
                                std::to_string(limits.max_guest_vertices) + " vertices");
    if (!is_connected(g.base)) throw std::invalid_argument("saturate: guest must be connected");
    if (check_preconditions) {
        if (!forbidden.contains_all_path_colorings(n, g.c, g.d))
            throw std::invalid_argument(
                "saturate: forbidden set does not contain every coloring of the length-" +
                std::to_string(n) + " path");
        if (!forbidden.is_free(g))
            throw std::invalid_argument("saturate: guest contains a forbidden subgraph");
    }

    if (n == 1) {
        // connected and edgeless, so a single colored vertex hosts itself
        if (g.edge_count() != 0)
            throw std::invalid_argument("saturate: n = 1 but the guest has an edge");
        Saturation s;
        s.pinned = false;
        s.finite_member = g;
        return s;
    }

    int longest = longest_path_length(g.base);
    if (longest < n - 1) {
        // no pin path at this level: recurse with the shorter paths forbidden too
        ForbiddenSet tighter = forbidden;
        if (!tighter.profile_base) {
            for (const ColoredGraph& p : all_path_colorings(n - 1, g.c, g.d))
                tighter.explicit_graphs.push_back(p);
        }
        // profile sets already exclude every path the base lacks
        return saturate_impl(g, tighter, n - 1, limits, false);
    }

    std::vector<VertexId> pin = canonical_longest_path(g.base);
    PinnedTransform pt = make_pinned_transform(g, pin);
    ColoredGraph tg = transform_t(g, pt);

    // saturate each component against its own subgraph profile
    int k = forbidden.max_size();
    std::vector<std::pair<std::string, ColoredGraph>> expanded;  // (canonical key, piece)
    for (const auto& comp_set : connected_components(tg.base)) {
        ColoredGraph comp = tg.induced(comp_set);
        ForbiddenSet profile = ForbiddenSet::profile_complement(comp, k);
        Saturation piece = saturate_impl(comp, profile, n - 1, limits, false);
        if (!piece.is_finite())
            throw CatalogLimitError(
                "saturate: component piece is infinitely presented (nested omega); "
                "flat presentation refused at n = " + std::to_string(n));
        ColoredGraph flat = piece.expand(0);
        expanded.emplace_back(canonical_form_exact(flat), flat);
    }
    std::sort(expanded.begin(), expanded.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    Saturation s;
    s.pinned = true;
    s.pt = pt;
    for (std::size_t i = 0; i < expanded.size();) {
        std::size_t j = i;
        while (j < expanded.size() && expanded[j].first == expanded[i].first) ++j;
        std::uint32_t count = static_cast<std::uint32_t>(j - i);
        Mult mult = (static_cast<int>(count) >= k) ? Mult::inf() : Mult::finite(count);
        // piece graphs may be disconnected; register per connected component
        const ColoredGraph& piece = expanded[i].second;
        if (is_connected(piece.base)) {
            s.pieces.add(piece, mult);
        } else {
            for (const auto& sub : connected_components(piece.base)) {
                Mult submult = mult.omega ? Mult::inf() : mult;
                s.pieces.add(piece.induced(sub), submult);
            }
        }
        i = j;
    }
    return s;
}

}  // namespace

Saturation saturate(const ColoredGraph& g, const ForbiddenSet& forbidden, int n,
                    const SaturationLimits& limits) {
    return saturate_impl(g, forbidden, n, limits, true);
}

Saturation saturate(const ColoredGraph& g, const std::vector<ColoredGraph>& forbidden, int n,
                    const SaturationLimits& limits) {
    return saturate_impl(g, ForbiddenSet::from_list(forbidden), n, limits, true);
}

// ---- catalog ------------------------------------------------------------------

std::vector<Saturation> build_catalog(const std::vector<ColoredGraph>& forbidden, int c, int d,
                                      int n, const SaturationLimits& limits) {
    static std::map<std::string, std::vector<Saturation>> memo;

    std::vector<std::string> fkeys;
    for (const auto& x : forbidden) fkeys.push_back(canonical_form_exact(x));
    std::sort(fkeys.begin(), fkeys.end());
    std::ostringstream keybuf;
    keybuf << c << "/" << d << "/" << n << "/" << limits.max_catalog_guest << ":";
    for (const auto& k : fkeys) keybuf << k << ";";
    std::string key = keybuf.str();
    auto hit = memo.find(key);
    if (hit != memo.end()) return hit->second;

    ForbiddenSet fset = ForbiddenSet::from_list(forbidden);
    if (!fset.contains_all_path_colorings(n, c, d))
        throw std::invalid_argument("build_catalog: forbidden set must contain all P_" +
                                    std::to_string(n) + " colorings");

    std::vector<Saturation> catalog;
    std::set<std::string> seen;
    for (const ColoredGraph& guest : enumerate_connected_free_graphs(
             forbidden, c, d, limits.max_catalog_guest, limits.max_catalog_graphs)) {
        Saturation s = saturate_impl(guest, fset, n, limits, false);
        if (seen.insert(s.canonical_key()).second) catalog.push_back(std::move(s));
    }
    memo[key] = catalog;
    return catalog;
}

}  // namespace minoruniv
