#include "minoruniv/unavoidable.hpp"

#include <algorithm>

#include "minoruniv/search.hpp"

namespace minoruniv {

namespace {

// Positions of `needle` in the cyclic sequence `cycle`.
std::vector<std::size_t> hits_on_cycle(const std::vector<VertexId>& cycle,
                                       const std::set<VertexId>& needle) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < cycle.size(); ++i)
        if (needle.count(cycle[i])) out.push_back(i);
    return out;
}

// The two arcs of a cycle between positions i and j, endpoints included.
std::pair<std::vector<VertexId>, std::vector<VertexId>> cycle_arcs(
    const std::vector<VertexId>& cycle, std::size_t i, std::size_t j) {
    std::vector<VertexId> fwd, bwd;
    for (std::size_t p = i;; p = (p + 1) % cycle.size()) {
        fwd.push_back(cycle[p]);
        if (p == j) break;
    }
    for (std::size_t p = j;; p = (p + 1) % cycle.size()) {
        bwd.push_back(cycle[p]);
        if (p == i) break;
    }
    std::reverse(bwd.begin(), bwd.end());  // both run from cycle[i] to cycle[j]
    return {fwd, bwd};
}

// Keeps the segment from the last `from`-hit to the first `to`-hit after it,
// so the result meets each set exactly once, at an endpoint.
std::vector<VertexId> trim_connecting_path(const std::vector<VertexId>& path,
                                           const std::set<VertexId>& from,
                                           const std::set<VertexId>& to) {
    std::size_t start = 0;
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (from.count(path[i])) start = i;
        if (to.count(path[i])) break;
    }
    std::vector<VertexId> out;
    for (std::size_t i = start; i < path.size(); ++i) {
        out.push_back(path[i]);
        if (to.count(path[i])) break;
    }
    return out;
}

// Builds a verified C_{n,m} witness from a theta: three internally disjoint
// x-y paths, of lengths >= 1 (the shared edge), >= n-1, and >= m-1.
ExtractionCertificate theta_certificate(const Graph& host, int n, int m,
                                        const std::vector<VertexId>& shared,
                                        const std::vector<VertexId>& side_n,
                                        const std::vector<VertexId>& side_m,
                                        const std::string& route) {
    Graph pattern = generate(FamilySpec::two_cycles(n, m));
    // pattern layout: shared edge 0-1; n-cycle 0,1,2,...,n-1; m-cycle through
    // fresh vertices 1 - n - n+1 - ... - (n+m-3) - 0
    SubdivisionWitness w;
    w.pattern = pattern;
    w.host = host;
    VertexId x = 0, y = 1;
    w.branch_vertices[x] = shared.front();
    w.branch_vertices[y] = shared.back();

    auto lay_path = [&](std::vector<VertexId> pverts, const std::vector<VertexId>& hpath) {
        // pverts: pattern path from x-side to y-side; hpath oriented the same way.
        // The first r-1 pattern edges take single host edges, the last takes the rest.
        std::size_t r = pverts.size() - 1;  // pattern edges
        for (std::size_t i = 0; i + 1 < pverts.size(); ++i) {
            if (i + 1 < r) {
                w.branch_vertices[pverts[i + 1]] = hpath[i + 1];
                w.edge_paths[Edge(pverts[i], pverts[i + 1])] = {hpath[i], hpath[i + 1]};
            } else {
                std::vector<VertexId> rest(hpath.begin() + i, hpath.end());
                w.edge_paths[Edge(pverts[i], pverts[i + 1])] = rest;
            }
        }
    };

    lay_path({x, y}, shared);
    std::vector<VertexId> ncycle{y};
    for (int i = 2; i < n; ++i) ncycle.push_back(i);
    ncycle.push_back(x);
    std::vector<VertexId> rev_n(side_n.rbegin(), side_n.rend());  // from y to x
    lay_path(ncycle, rev_n);
    std::vector<VertexId> mcycle{y};
    for (int i = 0; i < m - 2; ++i) mcycle.push_back(n + i);
    mcycle.push_back(x);
    std::vector<VertexId> rev_m(side_m.rbegin(), side_m.rend());
    lay_path(mcycle, rev_m);

    std::string why;
    if (!verify_subdivision(w, &why))
        throw std::logic_error("cycle-pair construction produced a bad subdivision: " + why);
    ExtractionCertificate cert{FamilySpec::two_cycles(n, m), subdivision_to_model(w), route};
    if (!verify_model(cert.witness, &why))
        throw std::logic_error("cycle-pair witness failed verification: " + why);
    return cert;
}

}  // namespace

std::vector<VertexId> find_long_cycle(const Graph& g, int n) {
    if (n < 3) throw std::invalid_argument("find_long_cycle: n must be >= 3");
    if (vertex_connectivity(g) < 2)
        throw std::invalid_argument("find_long_cycle: graph is not 2-connected");
    int lp = longest_path_length(g);
    if (lp < n * n)
        throw std::invalid_argument("find_long_cycle: longest path has length " +
                                    std::to_string(lp) + ", below n*n = " + std::to_string(n * n));
    auto cyc = circumference_at_least(g, n);
    if (!cyc)
        throw CounterexampleCandidate(
            "find_long_cycle: 2-connected graph with a path of length " + std::to_string(lp) +
            " has circumference below " + std::to_string(n));
    return *cyc;
}

std::pair<std::vector<VertexId>, std::vector<VertexId>> two_disjoint_connecting_paths(
    const Graph& g, const std::set<VertexId>& a, const std::set<VertexId>& b) {
    if (a.size() < 2 || b.size() < 2)
        throw std::invalid_argument("two_disjoint_connecting_paths: sets need >= 2 vertices");
    if (vertex_connectivity(g) < 2)
        throw std::invalid_argument("two_disjoint_connecting_paths: graph is not 2-connected");
    auto paths = disjoint_set_paths(g, a, b, 2);
    if (paths.size() < 2)
        throw std::logic_error("two_disjoint_connecting_paths: Menger failed on a 2-connected graph");
    return {paths[0], paths[1]};
}

ExtractionCertificate find_cycle_pair_minor(const Graph& g, int n, int m) {
    if (n < 3 || m < 3) throw std::invalid_argument("find_cycle_pair_minor: n,m must be >= 3");
    if (vertex_connectivity(g) < 2)
        throw std::invalid_argument("find_cycle_pair_minor: graph is not 2-connected");

    auto d1 = circumference_at_least(g, 2 * n);
    if (!d1)
        throw std::invalid_argument("find_cycle_pair_minor: no cycle of length >= " +
                                    std::to_string(2 * n));
    int need2 = static_cast<int>(d1->size()) * m;
    auto d2 = circumference_at_least(g, need2);
    if (!d2)
        throw std::invalid_argument("find_cycle_pair_minor: no cycle of length >= |D1|*m = " +
                                    std::to_string(need2));

    std::set<VertexId> s1(d1->begin(), d1->end());
    std::set<VertexId> s2(d2->begin(), d2->end());
    std::vector<VertexId> common;
    for (VertexId v : s1)
        if (s2.count(v)) common.push_back(v);

    if (common.empty()) {
        auto [p1raw, p2raw] = two_disjoint_connecting_paths(g, s1, s2);
        std::vector<VertexId> p1 = trim_connecting_path(p1raw, s1, s2);
        std::vector<VertexId> p2 = trim_connecting_path(p2raw, s1, s2);
        std::size_t a1 = 0, a2 = 0, b1 = 0, b2 = 0;
        for (std::size_t i = 0; i < d1->size(); ++i) {
            if ((*d1)[i] == p1.front()) a1 = i;
            if ((*d1)[i] == p2.front()) a2 = i;
        }
        for (std::size_t i = 0; i < d2->size(); ++i) {
            if ((*d2)[i] == p1.back()) b1 = i;
            if ((*d2)[i] == p2.back()) b2 = i;
        }
        auto [arc1a, arc1b] = cycle_arcs(*d1, a1, a2);
        std::vector<VertexId> shared = arc1a.size() <= arc1b.size() ? arc1a : arc1b;
        std::vector<VertexId> side_n = arc1a.size() <= arc1b.size() ? arc1b : arc1a;
        auto [arc2a, arc2b] = cycle_arcs(*d2, b1, b2);
        std::vector<VertexId> d2arc = arc2a.size() >= arc2b.size() ? arc2a : arc2b;
        // q: from a1 over p1 to b1, along d2arc to b2, back over p2 to a2
        std::vector<VertexId> side_m = p1;
        if (d2arc.front() != p1.back()) std::reverse(d2arc.begin(), d2arc.end());
        side_m.insert(side_m.end(), d2arc.begin() + 1, d2arc.end());
        std::vector<VertexId> back(p2.rbegin(), p2.rend());
        side_m.insert(side_m.end(), back.begin() + 1, back.end());
        // orient all three from shared.front() to shared.back()
        if (side_n.front() != shared.front()) std::reverse(side_n.begin(), side_n.end());
        if (side_m.front() != shared.front()) std::reverse(side_m.begin(), side_m.end());
        return theta_certificate(g, n, m, shared, side_n, side_m, "disjoint cycles + two paths");
    }

    if (common.size() == 1) {
        VertexId v = common.front();
        Graph gv = g;
        gv.remove_vertex(v);
        std::set<VertexId> s1v = s1, s2v = s2;
        s1v.erase(v);
        s2v.erase(v);
        std::vector<VertexId> raw = shortest_path_between(gv, s1v, s2v);
        if (raw.empty())
            throw CounterexampleCandidate(
                "find_cycle_pair_minor: no D1-D2 path avoiding the shared vertex");
        std::vector<VertexId> p = trim_connecting_path(raw, s1v, s2v);
        VertexId u1 = p.front(), u2 = p.back();
        std::size_t iv = 0, iu1 = 0;
        for (std::size_t i = 0; i < d1->size(); ++i) {
            if ((*d1)[i] == v) iv = i;
            if ((*d1)[i] == u1) iu1 = i;
        }
        auto [arc1a, arc1b] = cycle_arcs(*d1, iv, iu1);
        std::vector<VertexId> shared = arc1a.size() <= arc1b.size() ? arc1a : arc1b;
        std::vector<VertexId> side_n = arc1a.size() <= arc1b.size() ? arc1b : arc1a;
        std::size_t jv = 0, ju2 = 0;
        for (std::size_t i = 0; i < d2->size(); ++i) {
            if ((*d2)[i] == v) jv = i;
            if ((*d2)[i] == u2) ju2 = i;
        }
        auto [arc2a, arc2b] = cycle_arcs(*d2, jv, ju2);
        std::vector<VertexId> d2arc = arc2a.size() >= arc2b.size() ? arc2a : arc2b;
        // side_m: v along D2 to u2, then the connecting path back to u1
        if (d2arc.front() != v) std::reverse(d2arc.begin(), d2arc.end());
        std::vector<VertexId> side_m = d2arc;
        std::vector<VertexId> hop(p.rbegin(), p.rend());
        side_m.insert(side_m.end(), hop.begin() + 1, hop.end());
        if (side_n.front() != shared.front()) std::reverse(side_n.begin(), side_n.end());
        if (side_m.front() != shared.front()) std::reverse(side_m.begin(), side_m.end());
        return theta_certificate(g, n, m, shared, side_n, side_m, "cycles sharing one vertex");
    }

    // |D1 & D2| >= 2: some D1-path inside D2 has length >= |D2| / #hits >= m
    std::vector<std::size_t> hits = hits_on_cycle(*d2, s1);
    std::vector<VertexId> best;
    for (std::size_t h = 0; h < hits.size(); ++h) {
        std::size_t from = hits[h];
        std::size_t to = hits[(h + 1) % hits.size()];
        std::vector<VertexId> seg;
        for (std::size_t p = from;; p = (p + 1) % d2->size()) {
            seg.push_back((*d2)[p]);
            if (p == to && seg.size() > 1) break;
        }
        if (seg.size() > best.size()) best = seg;
    }
    if (static_cast<int>(best.size()) - 1 < m)
        throw CounterexampleCandidate("find_cycle_pair_minor: no D1-path of length >= m in D2");
    VertexId p1v = best.front(), p2v = best.back();
    std::size_t i1 = 0, i2 = 0;
    for (std::size_t i = 0; i < d1->size(); ++i) {
        if ((*d1)[i] == p1v) i1 = i;
        if ((*d1)[i] == p2v) i2 = i;
    }
    auto [arcA, arcB] = cycle_arcs(*d1, i1, i2);
    std::vector<VertexId> shared = arcA.size() <= arcB.size() ? arcA : arcB;
    std::vector<VertexId> side_n = arcA.size() <= arcB.size() ? arcB : arcA;
    std::vector<VertexId> side_m = best;
    if (side_n.front() != shared.front()) std::reverse(side_n.begin(), side_n.end());
    if (side_m.front() != shared.front()) std::reverse(side_m.begin(), side_m.end());
    return theta_certificate(g, n, m, shared, side_n, side_m, "long D1-path inside D2");
}

SearchResult<ExtractionCertificate> find_wheel_minor(const Graph& g, int k, std::size_t budget) {
    if (k < 3) throw std::invalid_argument("find_wheel_minor: k must be >= 3");
    if (vertex_connectivity(g) < 3)
        throw std::invalid_argument("find_wheel_minor: graph is not 3-connected");
    Graph wheel = generate(FamilySpec::wheel(k));
    auto res = find_minor_model(wheel, g, budget);
    if (res.found()) {
        ExtractionCertificate cert{FamilySpec::wheel(k), res.get(), "hub-first branch growth"};
        return SearchResult<ExtractionCertificate>::make_found(std::move(cert), res.nodes);
    }
    if (res.inconclusive()) return SearchResult<ExtractionCertificate>::make_inconclusive(res.nodes);
    return SearchResult<ExtractionCertificate>::make_none(res.nodes);
}

namespace {

ReductionFactReport::FactDetail check_fact(const Graph& host, const Graph& pattern,
                                           const std::string& name, std::size_t budget) {
    ReductionFactReport::FactDetail detail;
    detail.host = name;
    bool all_found = true, any_inconclusive = false;
    for (const auto& orbit : vertex_orbits(ColoredGraph(host))) {
        VertexId rep = orbit.front();
        Graph reduced = host;
        reduced.remove_vertex(rep);
        auto res = find_minor_model(pattern, reduced, budget);
        detail.per_vertex.emplace_back(rep, res.outcome);
        if (res.inconclusive()) any_inconclusive = true;
        if (!res.found()) all_found = false;
    }
    detail.overall = all_found            ? Outcome::Found
                     : any_inconclusive   ? Outcome::Inconclusive
                                          : Outcome::None;
    return detail;
}

}  // namespace

ReductionFactReport check_reduction_facts(int k, std::size_t budget, int max_k) {
    if (k < 3) throw std::invalid_argument("check_reduction_facts: wheels need k >= 3");
    if (k > max_k)
        throw std::invalid_argument("check_reduction_facts: k = " + std::to_string(k) +
                                    " beyond the search cap " + std::to_string(max_k));
    Graph wheel = generate(FamilySpec::wheel(k));
    Graph k3k = generate(FamilySpec::complete_bipartite(3, k));
    ReductionFactReport rep;
    rep.double_wheel =
        check_fact(generate(FamilySpec::double_wheel(k + 1)), wheel, "D" + std::to_string(k + 1), budget);
    rep.circular_ladder = check_fact(generate(FamilySpec::circular_ladder(k + 1)), wheel,
                                     "O" + std::to_string(k + 1), budget);
    rep.moebius_ladder = check_fact(generate(FamilySpec::moebius_ladder(k + 1)), wheel,
                                    "M" + std::to_string(k + 1), budget);
    rep.bipartite = check_fact(generate(FamilySpec::complete_bipartite(4, k + 1)), k3k,
                               "K4," + std::to_string(k + 1), budget);
    return rep;
}

std::uint64_t f_bound(int k, const std::map<int, std::uint64_t>& w_fn,
                      const std::map<int, std::uint64_t>& p_fn) {
    auto wit = w_fn.find(k + 1);
    auto pit = p_fn.find(k + 1);
    if (wit == w_fn.end())
        throw std::invalid_argument("f_bound: missing w(" + std::to_string(k + 1) + ")");
    if (pit == p_fn.end())
        throw std::invalid_argument("f_bound: missing p(" + std::to_string(k + 1) + ")");
    return ell(wit->second, pit->second);
}

ExtractionCertificate wheel_in_r2_truncation(int k, int m, std::size_t budget) {
    if (k < 3 || m < 1) throw std::invalid_argument("wheel_in_r2_truncation: need k >= 3, m >= 1");
    Graph wheel = generate(FamilySpec::wheel(k));
    Graph host = generate(FamilySpec::ray_truncation(m));
    auto res = find_minor_model(wheel, host, budget);
    if (res.found())
        return ExtractionCertificate{FamilySpec::wheel(k), res.get(), "R2 truncation"};
    if (res.inconclusive())
        throw std::runtime_error("wheel_in_r2_truncation: search budget exhausted");
    for (int better = m + 1; better <= m + 8; ++better) {
        auto retry = find_minor_model(wheel, generate(FamilySpec::ray_truncation(better)), budget);
        if (retry.found())
            throw std::invalid_argument("wheel_in_r2_truncation: m = " + std::to_string(m) +
                                        " is too small; smallest sufficient m found is " +
                                        std::to_string(better));
    }
    throw std::invalid_argument("wheel_in_r2_truncation: m = " + std::to_string(m) +
                                " too small; no sufficient m found up to " + std::to_string(m + 8));
}

}  // namespace minoruniv
