#include "minoruniv/minor.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "minoruniv/blocks.hpp"
#include "minoruniv/colored_graph.hpp"
#include "minoruniv/io.hpp"
#include "bits.hpp"
#include "indexed.hpp"

namespace minoruniv {

namespace {

using detail::Bits;
using detail::Indexed;

std::string edge_str(const Edge& e) {
    return std::to_string(e.u) + "-" + std::to_string(e.v);
}

// Branch-set growth search. Pattern vertices are placed one at a time in a
// fixed order; each placement enumerates connected subsets of the free host
// region that attach to every already-placed pattern neighbor. Pruning:
// remaining-vertex counts, per-set free-neighbor counts, free-region edge
// counts, and a matching feasibility test between waiting pattern vertices
// and free host vertices.
class MinorSearch {
public:
    MinorSearch(const Graph& pattern, const Graph& host, std::size_t budget)
        : p_(Indexed::build(ColoredGraph(pattern))),
          h_(Indexed::build(ColoredGraph(host))),
          budget_(budget) {}

    SearchResult<MinorModel> run(const Graph& pattern, const Graph& host) {
        const int m = p_.n, n = h_.n;
        if (m == 0) throw std::invalid_argument("find_minor_model: empty pattern");
        if (m > n) return SearchResult<MinorModel>::make_none(budget_.used());

        hostnb_.assign(n, Bits(n));
        for (int v = 0; v < n; ++v)
            for (const auto& [w, _] : h_.adj[v]) hostnb_[v].set(w);

        build_order();
        branch_.assign(m, Bits(n));
        nbrmask_.assign(m, Bits(n));
        placed_.assign(m, 0);
        free_ = Bits(n);
        for (int v = 0; v < n; ++v) free_.set(v);

        found_ = false;
        place(0);

        if (found_) {
            MinorModel model;
            model.pattern = pattern;
            model.host = host;
            for (int i = 0; i < m; ++i) {
                std::set<VertexId>& bs = model.branch_sets[p_.ids[i]];
                saved_branch_[i].for_each([&](int v) { bs.insert(h_.ids[v]); });
            }
            for (const Edge& pe : pattern.edges()) {
                int a = p_.pos_of(pe.u), b = p_.pos_of(pe.v);
                model.edge_witnesses.emplace(pe, witness_edge(a, b));
            }
            return SearchResult<MinorModel>::make_found(std::move(model), budget_.used());
        }
        if (budget_.exhausted() || enumeration_truncated_)
            return SearchResult<MinorModel>::make_inconclusive(budget_.used());
        return SearchResult<MinorModel>::make_none(budget_.used());
    }

private:
    Indexed p_, h_;
    Budget budget_;
    std::vector<int> order_;
    std::vector<Bits> hostnb_;
    std::vector<Bits> branch_, nbrmask_;
    std::vector<Bits> saved_branch_;
    std::vector<char> placed_;
    Bits free_;
    bool found_ = false;
    bool enumeration_truncated_ = false;
    static constexpr std::size_t kMaxCandidates = 200000;  // memory guard on big hosts

    void build_order() {
        const int m = p_.n;
        std::vector<char> chosen(m, 0);
        for (int step = 0; step < m; ++step) {
            int best = -1;
            std::size_t best_links = 0, best_deg = 0;
            for (int v = 0; v < m; ++v) {
                if (chosen[v]) continue;
                std::size_t links = 0;
                for (const auto& [w, _] : p_.adj[v]) links += chosen[w];
                std::size_t deg = p_.degree(v);
                if (best < 0 || links > best_links || (links == best_links && deg > best_deg)) {
                    best = v;
                    best_links = links;
                    best_deg = deg;
                }
            }
            chosen[best] = 1;
            order_.push_back(best);
        }
    }

    Edge witness_edge(int a, int b) const {
        Edge out(0, 1);
        bool ok = false;
        saved_branch_[a].for_each([&](int v) {
            if (ok) return;
            Bits hit = hostnb_[v] & saved_branch_[b];
            int w = hit.lowest();
            if (w >= 0) {
                out = Edge(h_.ids[v], h_.ids[w]);
                ok = true;
            }
        });
        if (!ok) throw std::logic_error("minor search produced a model without a witness edge");
        return out;
    }

    Bits component_within(const Bits& region, int seed) const {
        Bits comp(h_.n);
        comp.set(seed);
        std::vector<int> stack{seed};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            Bits ext = hostnb_[v] & region;
            ext.subtract(comp);
            ext.for_each([&](int w) {
                comp.set(w);
                stack.push_back(w);
            });
        }
        return comp;
    }

    bool counting_prunes_ok(int idx) {
        const int m = p_.n;
        int unplaced = m - idx - 1;
        if (free_.count() < unplaced) return false;

        // every placed set with waiting pattern neighbors needs that many
        // distinct free neighbors (waiting branch sets are disjoint)
        for (int q = 0; q < m; ++q) {
            if (!placed_[q]) continue;
            int waiting = 0;
            for (const auto& [r, _] : p_.adj[q]) waiting += !placed_[r];
            if (waiting == 0) continue;
            Bits avail = nbrmask_[q] & free_;
            if (avail.count() < waiting) return false;
        }

        // pattern edges entirely among waiting vertices need host edges in the free region
        int waiting_edges = 0;
        for (int q = 0; q < m; ++q)
            for (const auto& [r, _] : p_.adj[q])
                if (q < r && !placed_[q] && !placed_[r]) ++waiting_edges;
        if (waiting_edges > 0) {
            int free_edges = 0;
            free_.for_each([&](int v) { free_edges += (hostnb_[v] & free_).count(); });
            if (free_edges / 2 < waiting_edges) return false;
        }

        return matching_ok();
    }

    // Each waiting pattern vertex with a placed neighbor must get its own free
    // host vertex adjacent to at least one of those placed sets.
    bool matching_ok() {
        const int m = p_.n;
        std::vector<int> jobs;
        std::vector<Bits> allow;
        for (int j = 0; j < m; ++j) {
            if (placed_[j]) continue;
            Bits mask(h_.n);
            bool has_placed_nbr = false;
            for (const auto& [q, _] : p_.adj[j]) {
                if (placed_[q]) {
                    has_placed_nbr = true;
                    mask |= nbrmask_[q];
                }
            }
            if (!has_placed_nbr) continue;
            mask &= free_;
            if (!mask.any()) return false;
            jobs.push_back(j);
            allow.push_back(std::move(mask));
        }
        if (jobs.empty()) return true;

        std::map<int, int> owner;  // host position -> job index
        std::vector<char> visited;
        std::function<bool(int)> kuhn = [&](int ji) -> bool {
            bool ok = false;
            allow[ji].for_each([&](int h) {
                if (ok || visited[h]) return;
                visited[h] = 1;
                auto it = owner.find(h);
                if (it == owner.end() || kuhn(it->second)) {
                    owner[h] = ji;
                    ok = true;
                }
            });
            return ok;
        };
        for (std::size_t ji = 0; ji < jobs.size(); ++ji) {
            visited.assign(h_.n, 0);
            if (!kuhn(static_cast<int>(ji))) return false;
        }
        return true;
    }

    void place(std::size_t idx) {
        if (found_ || budget_.exhausted()) return;
        if (!budget_.tick()) return;
        const int m = p_.n;
        if (idx == static_cast<std::size_t>(m)) {
            saved_branch_ = branch_;
            found_ = true;
            return;
        }
        int p = order_[idx];
        std::vector<int> required;
        for (const auto& [q, _] : p_.adj[p])
            if (placed_[q]) required.push_back(q);

        int cap = free_.count() - (m - static_cast<int>(idx) - 1);
        if (cap < 1) return;

        // candidate branch sets, smallest first for minimal models
        std::vector<Bits> candidates;
        enumerate_candidates(p, required, cap, candidates);
        std::stable_sort(candidates.begin(), candidates.end(),
                         [](const Bits& a, const Bits& b) { return a.count() < b.count(); });

        for (const Bits& S : candidates) {
            if (found_ || budget_.exhausted()) return;
            branch_[p] = S;
            nbrmask_[p] = Bits(h_.n);
            S.for_each([&](int v) { nbrmask_[p] |= hostnb_[v]; });
            placed_[p] = 1;
            Bits saved_free = free_;
            free_.subtract(S);
            if (counting_prunes_ok(static_cast<int>(idx))) place(idx + 1);
            free_ = saved_free;
            placed_[p] = 0;
            branch_[p] = Bits(h_.n);
        }
    }

    void enumerate_candidates(int p, const std::vector<int>& required, int cap,
                              std::vector<Bits>& out) {
        // Connected subsets of the free region, each enumerated once from its
        // lowest vertex; a subtree is cut when the surrounding free component
        // cannot reach some required placed set.
        Bits allowed = free_;
        while (allowed.any()) {
            int seed = allowed.lowest();
            Bits region = allowed;
            Bits comp = component_within(region, seed);
            bool reachable = true;
            for (int q : required)
                if (!comp.intersects(nbrmask_[q])) reachable = false;
            if (reachable) {
                Bits S(h_.n);
                S.set(seed);
                Bits ext = hostnb_[seed] & region;
                ext.reset(seed);
                grow(S, ext, region, required, cap, out);
            }
            allowed.reset(seed);
        }
    }

    void grow(const Bits& S, const Bits& ext, const Bits& allowed, const std::vector<int>& required,
              int cap, std::vector<Bits>& out) {
        if (budget_.exhausted() || !budget_.tick()) return;
        if (out.size() >= kMaxCandidates) {
            enumeration_truncated_ = true;  // incomplete: result degrades to inconclusive
            return;
        }
        bool attached = true;
        for (int q : required)
            if (!S.intersects(nbrmask_[q])) attached = false;
        if (attached) out.push_back(S);
        if (S.count() >= cap) return;

        Bits forb(h_.n);
        std::vector<int> exts;
        ext.for_each([&](int v) { exts.push_back(v); });
        for (int v : exts) {
            Bits S2 = S;
            S2.set(v);
            Bits ext2 = ext;
            ext2.reset(v);
            Bits fresh = hostnb_[v] & allowed;
            fresh.subtract(S2);
            ext2 |= fresh;
            ext2.subtract(forb);
            grow(S2, ext2, allowed, required, cap, out);
            forb.set(v);
            if (budget_.exhausted()) return;
        }
    }
};

}  // namespace

bool verify_model(const MinorModel& m, std::string* report) {
    auto fail = [&](const std::string& why) {
        if (report) *report = why;
        return false;
    };
    if (m.pattern.empty()) return fail("empty pattern");

    std::set<VertexId> seen;
    for (const auto& [pv, _] : m.pattern.adjacency()) {
        auto it = m.branch_sets.find(pv);
        if (it == m.branch_sets.end() || it->second.empty())
            return fail("branch set for pattern vertex " + std::to_string(pv) +
                        " is missing or empty");
        for (VertexId hv : it->second) {
            if (!m.host.has_vertex(hv))
                return fail("branch set of " + std::to_string(pv) + " uses unknown host vertex " +
                            std::to_string(hv));
            if (!seen.insert(hv).second)
                return fail("branch sets overlap at host vertex " + std::to_string(hv));
        }
        if (!is_connected(m.host.induced(it->second)))
            return fail("branch set of pattern vertex " + std::to_string(pv) +
                        " induces a disconnected subgraph");
    }
    for (const auto& [pv, _] : m.branch_sets)
        if (!m.pattern.has_vertex(pv))
            return fail("branch set for unknown pattern vertex " + std::to_string(pv));
    for (const auto& [pe, _] : m.edge_witnesses)
        if (!m.pattern.has_edge(pe))
            return fail("witness recorded for non-edge " + edge_str(pe) + " of the pattern");

    for (const Edge& pe : m.pattern.edges()) {
        auto it = m.edge_witnesses.find(pe);
        if (it == m.edge_witnesses.end())
            return fail("no witness edge for pattern edge " + edge_str(pe));
        const Edge& he = it->second;
        if (!m.host.has_edge(he))
            return fail("witness " + edge_str(he) + " for pattern edge " + edge_str(pe) +
                        " is not a host edge");
        const auto& bu = m.branch_sets.at(pe.u);
        const auto& bv = m.branch_sets.at(pe.v);
        bool straddles = (bu.count(he.u) && bv.count(he.v)) || (bu.count(he.v) && bv.count(he.u));
        if (!straddles)
            return fail("witness " + edge_str(he) + " does not join the branch sets of " +
                        edge_str(pe));
    }
    return true;
}

SearchResult<MinorModel> find_minor_model(const Graph& pattern, const Graph& host,
                                          std::size_t budget) {
    if (pattern.empty()) throw std::invalid_argument("find_minor_model: empty pattern");
    if (!is_connected(pattern))
        throw std::invalid_argument("find_minor_model: pattern must be connected");
    return MinorSearch(pattern, host, budget).run(pattern, host);
}

MinorFreeResult is_minor_free(const Graph& host, const std::vector<Graph>& patterns,
                              std::size_t budget) {
    bool any_inconclusive = false;
    for (const Graph& pat : patterns) {
        auto res = find_minor_model(pat, host, budget);
        if (res.found()) return {Outcome::Found, res.get()};
        if (res.inconclusive()) any_inconclusive = true;
    }
    if (any_inconclusive) return {Outcome::Inconclusive, std::nullopt};
    return {Outcome::None, std::nullopt};
}

// ---- subdivisions ----------------------------------------------------------

namespace {

class SubdivSearch {
public:
    SubdivSearch(const Graph& pattern, const Graph& host, std::size_t budget)
        : pattern_(pattern),
          host_(host),
          p_(Indexed::build(ColoredGraph(pattern))),
          h_(Indexed::build(ColoredGraph(host))),
          budget_(budget) {}

    SearchResult<SubdivisionWitness> run() {
        if (p_.n == 0) throw std::invalid_argument("find_subdivision: empty pattern");
        if (p_.n > h_.n) return SearchResult<SubdivisionWitness>::make_none(budget_.used());
        for (int i = 0; i < p_.n; ++i) porder_.push_back(i);
        std::stable_sort(porder_.begin(), porder_.end(),
                         [&](int a, int b) { return p_.degree(a) > p_.degree(b); });
        for (const Edge& e : pattern_.edges()) pedges_.push_back(e);
        std::sort(pedges_.begin(), pedges_.end());

        img_.assign(p_.n, -1);
        used_.assign(h_.n, 0);
        found_ = false;
        place(0);
        if (found_) return SearchResult<SubdivisionWitness>::make_found(std::move(result_), budget_.used());
        if (budget_.exhausted())
            return SearchResult<SubdivisionWitness>::make_inconclusive(budget_.used());
        return SearchResult<SubdivisionWitness>::make_none(budget_.used());
    }

private:
    const Graph& pattern_;
    const Graph& host_;
    Indexed p_, h_;
    Budget budget_;
    std::vector<int> porder_;
    std::vector<Edge> pedges_;
    std::vector<int> img_;
    std::vector<char> used_;
    std::map<Edge, std::vector<int>> paths_;
    SubdivisionWitness result_;
    bool found_ = false;

    void place(std::size_t idx) {
        if (found_ || budget_.exhausted()) return;
        if (idx == porder_.size()) {
            route(0);
            return;
        }
        int pv = porder_[idx];
        for (int hv = 0; hv < h_.n; ++hv) {
            if (used_[hv] || h_.degree(hv) < p_.degree(pv)) continue;
            if (!budget_.tick()) return;
            img_[pv] = hv;
            used_[hv] = 1;
            place(idx + 1);
            used_[hv] = 0;
            img_[pv] = -1;
            if (found_ || budget_.exhausted()) return;
        }
    }

    void route(std::size_t k) {
        if (found_ || budget_.exhausted()) return;
        if (k == pedges_.size()) {
            emit();
            return;
        }
        const Edge& pe = pedges_[k];
        int a = img_[p_.pos_of(pe.u)];
        int b = img_[p_.pos_of(pe.v)];
        std::vector<int> path{a};
        extend_path(k, path, a, b);
    }

    void extend_path(std::size_t k, std::vector<int>& path, int cur, int goal) {
        if (found_ || budget_.exhausted()) return;
        for (const auto& [w, _] : h_.adj[cur]) {
            if (!budget_.tick()) return;
            if (w == goal) {
                paths_[pedges_[k]] = path;
                paths_[pedges_[k]].push_back(goal);
                std::vector<int> internals(path.begin() + 1, path.end());
                for (int v : internals) used_[v] = 1;
                route(k + 1);
                for (int v : internals) used_[v] = 0;
                paths_.erase(pedges_[k]);
                if (found_ || budget_.exhausted()) return;
                continue;
            }
            if (used_[w]) continue;
            used_[w] = 1;
            path.push_back(w);
            extend_path(k, path, w, goal);
            path.pop_back();
            used_[w] = 0;
            if (found_ || budget_.exhausted()) return;
        }
    }

    void emit() {
        result_.pattern = pattern_;
        result_.host = host_;
        for (int i = 0; i < p_.n; ++i) result_.branch_vertices[p_.ids[i]] = h_.ids[img_[i]];
        for (const auto& [pe, path] : paths_) {
            std::vector<VertexId>& out = result_.edge_paths[pe];
            // stored from img_[pos(pe.u)]; orient from pe.u's image
            for (int v : path) out.push_back(h_.ids[v]);
        }
        found_ = true;
    }
};

}  // namespace

bool verify_subdivision(const SubdivisionWitness& w, std::string* report) {
    auto fail = [&](const std::string& why) {
        if (report) *report = why;
        return false;
    };
    std::set<VertexId> branch_images;
    for (const auto& [pv, _] : w.pattern.adjacency()) {
        auto it = w.branch_vertices.find(pv);
        if (it == w.branch_vertices.end())
            return fail("no branch vertex for pattern vertex " + std::to_string(pv));
        if (!w.host.has_vertex(it->second)) return fail("branch vertex not in host");
        if (!branch_images.insert(it->second).second) return fail("branch vertices not injective");
    }
    std::map<VertexId, int> internal_use;
    for (const Edge& pe : w.pattern.edges()) {
        auto it = w.edge_paths.find(pe);
        if (it == w.edge_paths.end()) return fail("no path for pattern edge " + edge_str(pe));
        const auto& path = it->second;
        if (path.size() < 2) return fail("path for " + edge_str(pe) + " too short");
        VertexId a = w.branch_vertices.at(pe.u), b = w.branch_vertices.at(pe.v);
        bool fwd = path.front() == a && path.back() == b;
        bool bwd = path.front() == b && path.back() == a;
        if (!fwd && !bwd) return fail("path for " + edge_str(pe) + " joins wrong endpoints");
        std::set<VertexId> on_path;
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            if (!w.host.has_edge(path[i], path[i + 1]))
                return fail("path for " + edge_str(pe) + " uses a non-edge");
        }
        for (VertexId v : path)
            if (!on_path.insert(v).second) return fail("path for " + edge_str(pe) + " not simple");
        for (std::size_t i = 1; i + 1 < path.size(); ++i) {
            if (branch_images.count(path[i]))
                return fail("path for " + edge_str(pe) + " passes through a branch vertex");
            if (++internal_use[path[i]] > 1)
                return fail("paths share internal vertex " + std::to_string(path[i]));
        }
    }
    return true;
}

SearchResult<SubdivisionWitness> find_subdivision(const Graph& pattern, const Graph& host,
                                                  std::size_t budget) {
    return SubdivSearch(pattern, host, budget).run();
}

MinorModel subdivision_to_model(const SubdivisionWitness& w) {
    MinorModel m;
    m.pattern = w.pattern;
    m.host = w.host;
    for (const auto& [pv, hv] : w.branch_vertices) m.branch_sets[pv] = {hv};
    for (const Edge& pe : w.pattern.edges()) {
        std::vector<VertexId> path = w.edge_paths.at(pe);
        if (path.front() != w.branch_vertices.at(pe.u)) std::reverse(path.begin(), path.end());
        // internals join pe.u's branch set; the final edge witnesses the pattern edge
        for (std::size_t i = 1; i + 1 < path.size(); ++i) m.branch_sets[pe.u].insert(path[i]);
        m.edge_witnesses.emplace(pe, Edge(path[path.size() - 2], path.back()));
    }
    return m;
}

// ---- circumference ---------------------------------------------------------

namespace {

// Exact longest cycle in a 2-connected block via canonical-root DFS: every
// cycle is found from its least vertex.
struct CycleSearch {
    const Indexed& ix;
    std::vector<char> used;
    std::vector<int> path;
    std::vector<int> best;
    int stop_len;  // -1 = none

    bool done() const { return stop_len >= 0 && static_cast<int>(best.size()) >= stop_len; }

    int reachable(int head, int root) const {
        std::vector<char> seen = used;
        seen[root] = 0;  // closing back to the root is allowed
        std::vector<int> stack{head};
        seen[head] = 1;
        int count = 0;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (const auto& [w, _] : ix.adj[u])
                if (!seen[w]) {
                    seen[w] = 1;
                    ++count;
                    stack.push_back(w);
                }
        }
        return count;
    }

    void dfs(int cur, int root) {
        if (done()) return;
        if (static_cast<int>(path.size()) + reachable(cur, root) < static_cast<int>(best.size()))
            return;
        for (const auto& [w, _] : ix.adj[cur]) {
            if (done()) return;
            if (w == root && path.size() >= 3) {
                if (path.size() > best.size()) best = path;
                continue;
            }
            if (w <= root || used[w]) continue;
            used[w] = 1;
            path.push_back(w);
            dfs(w, root);
            path.pop_back();
            used[w] = 0;
        }
    }

    std::vector<int> run() {
        for (int root = 0; root < ix.n && !done(); ++root) {
            used.assign(ix.n, 0);
            used[root] = 1;
            path = {root};
            dfs(root, root);
        }
        return best;
    }
};

std::vector<VertexId> longest_cycle_in(const Graph& g, int stop_len) {
    Indexed ix = Indexed::build(ColoredGraph(g));
    CycleSearch cs{ix, {}, {}, {}, stop_len};
    std::vector<int> cyc = cs.run();
    std::vector<VertexId> out;
    for (int p : cyc) out.push_back(ix.ids[p]);
    return out;
}

}  // namespace

std::optional<std::vector<VertexId>> circumference_at_least(const Graph& host, int n) {
    if (n < 3) throw std::invalid_argument("circumference_at_least: n must be >= 3");
    for (const auto& block : all_blocks(host)) {
        if (static_cast<int>(block.size()) < n) continue;
        std::vector<VertexId> cyc = longest_cycle_in(host.induced(block), n);
        if (static_cast<int>(cyc.size()) >= n) return cyc;
    }
    return std::nullopt;
}

int circumference(const Graph& g) {
    std::size_t best = 0;
    for (const auto& block : all_blocks(g)) {
        if (block.size() <= best || block.size() < 3) continue;
        std::vector<VertexId> cyc = longest_cycle_in(g.induced(block), -1);
        best = std::max(best, cyc.size());
    }
    return static_cast<int>(best);
}

// ---- JSON ------------------------------------------------------------------

std::string model_to_json(const MinorModel& m) {
    nlohmann::json doc;
    doc["pattern"] = nlohmann::json::parse(to_json(ColoredGraph(m.pattern)));
    doc["host_ref"] = nlohmann::json::parse(to_json(ColoredGraph(m.host)));
    auto& bs = doc["branch_sets"];
    bs = nlohmann::json::object();
    for (const auto& [pv, verts] : m.branch_sets) {
        nlohmann::json arr = nlohmann::json::array();
        for (VertexId v : verts) arr.push_back(v);
        bs[std::to_string(pv)] = arr;
    }
    auto& ew = doc["edge_witnesses"];
    ew = nlohmann::json::object();
    for (const auto& [pe, he] : m.edge_witnesses) ew[edge_str(pe)] = {he.u, he.v};
    return doc.dump();
}

MinorModel model_from_json(const std::string& text) {
    nlohmann::json doc = nlohmann::json::parse(text);
    MinorModel m;
    m.pattern = colored_from_json(doc.at("pattern").dump()).base;
    m.host = colored_from_json(doc.at("host_ref").dump()).base;
    for (const auto& [key, arr] : doc.at("branch_sets").items()) {
        std::set<VertexId>& bs = m.branch_sets[std::stoi(key)];
        for (const auto& v : arr) bs.insert(v.get<VertexId>());
    }
    for (const auto& [key, arr] : doc.at("edge_witnesses").items()) {
        auto dash = key.find('-');
        Edge pe(std::stoi(key.substr(0, dash)), std::stoi(key.substr(dash + 1)));
        m.edge_witnesses.emplace(pe, Edge(arr.at(0).get<VertexId>(), arr.at(1).get<VertexId>()));
    }
    return m;
}

}  // namespace minoruniv
