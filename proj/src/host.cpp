#include "minoruniv/host.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include <nlohmann/json.hpp>

#include "minoruniv/blocks.hpp"
#include "minoruniv/io.hpp"
#include "minoruniv/models.hpp"
#include "minoruniv/series_parallel.hpp"

namespace minoruniv {

namespace {

// Model of C_n built from a longer cycle: n-1 singleton arcs plus the rest.
MinorModel cycle_model(const Graph& host, const std::vector<VertexId>& cycle, int n) {
    MinorModel m;
    m.pattern = generate(FamilySpec::cycle(n));
    m.host = host;
    for (int i = 0; i + 1 < n; ++i) m.branch_sets[i] = {cycle[i]};
    std::set<VertexId>& tail = m.branch_sets[n - 1];
    for (std::size_t i = n - 1; i < cycle.size(); ++i) tail.insert(cycle[i]);
    for (int i = 0; i + 1 < n; ++i) m.edge_witnesses.emplace(Edge(i, i + 1), Edge(cycle[i], cycle[i + 1]));
    m.edge_witnesses.emplace(Edge(0, n - 1), Edge(cycle[0], cycle.back()));
    return m;
}

int fragment_tag(const Graph& g) {
    if (is_forest(g)) {  // diameter by double BFS, no search cap
        int best = 0;
        for (const auto& comp : connected_components(g)) {
            Graph sub = g.induced(comp);
            std::vector<VertexId> order(comp.begin(), comp.end());
            auto far = [&](VertexId s) {
                std::map<VertexId, int> dist{{s, 0}};
                std::deque<VertexId> queue{s};
                std::pair<int, VertexId> out{0, s};
                while (!queue.empty()) {
                    VertexId u = queue.front();
                    queue.pop_front();
                    out = std::max(out, {dist[u], u});
                    for (VertexId w : sub.neighbors(u))
                        if (!dist.count(w)) {
                            dist[w] = dist[u] + 1;
                            queue.push_back(w);
                        }
                }
                return out;
            };
            auto [_, a] = far(order.front());
            auto [d2, b] = far(a);
            best = std::max(best, d2);
        }
        return best + 1;
    }
    return longest_path_length(g) + 1;
}

}  // namespace

std::string HostVerifyReport::summary() const {
    std::ostringstream out;
    out << (ok ? "free" : "VIOLATION") << "; pieces=" << pieces_checked
        << "; truncation_free=" << (truncation_free ? "yes" : "no");
    for (const auto& v : violations) out << "\n  - " << v;
    return out.str();
}

HostDescription HostDescription::build(const FamilySpec& forbidden, HostBackend backend) {
    bool cycle_like = forbidden.family == Family::Cycle || forbidden.family == Family::TwoCycles;
    bool wheel_like = forbidden.family == Family::Wheel;
    if (!cycle_like && !wheel_like)
        throw std::invalid_argument("host builder supports forbidden C_n, C_{n,m}, or W_k; got " +
                                    forbidden.name());
    generate(forbidden);  // parameter range check

    HostDescription host;
    host.mode_ = wheel_like ? HostMode::WheelHost : HostMode::CycleHost;
    host.backend_ = backend;
    host.forbidden_ = forbidden;

    ColoredGraph root;
    root.c = wheel_like ? 2 : 1;
    root.d = 1;
    root.set_vcolor(0, 0);
    HostPiece piece;
    piece.id = 0;
    piece.tag_n = 1;
    piece.graph = root;
    piece.glue = HostPiece::Glue::Root;
    host.pieces_.push_back(std::move(piece));
    host.next_id_ = 1;
    return host;
}

void HostDescription::check_membership(const Graph& guest, std::size_t budget) const {
    if (guest.empty()) throw std::invalid_argument("embed: empty guest");
    if (!is_connected(guest)) throw std::invalid_argument("embed: guest must be connected");

    if (forbidden_.family == Family::Cycle) {
        auto cyc = circumference_at_least(guest, forbidden_.a);
        if (cyc)
            throw HostRejection("guest contains C_" + std::to_string(forbidden_.a) + " as a minor",
                                cycle_model(guest, *cyc, forbidden_.a));
        return;
    }
    if (forbidden_.family == Family::Wheel && forbidden_.a == 3 && is_k4_minor_free(guest)) return;

    auto res = find_minor_model(pattern_graph(), guest, budget);
    if (res.found())
        throw HostRejection("guest contains " + forbidden_.name() + " as a minor", res.get());
    if (res.inconclusive())
        throw std::runtime_error("embed: membership check exhausted its budget");
}

int HostDescription::parent_for(const std::vector<VertexId>& glue_set) const {
    for (const HostPiece& p : pieces_) {
        bool ok = true;
        for (VertexId v : glue_set) ok = ok && p.graph.base.has_vertex(v);
        if (ok && glue_set.size() == 2 && !p.graph.base.has_edge(glue_set[0], glue_set[1]))
            ok = false;
        if (ok) return p.id;
    }
    throw std::logic_error("host: no parent piece contains the glue set");
}

int HostDescription::add_piece(const ColoredGraph& graph, int tag, HostPiece::Glue glue,
                               const std::vector<VertexId>& at) {
    HostPiece piece;
    piece.id = static_cast<int>(pieces_.size());
    piece.tag_n = tag;
    piece.graph = graph;
    piece.glue = glue;
    piece.glue_at = at;
    piece.parent = glue == HostPiece::Glue::Root ? -1 : parent_for(at);
    pieces_.push_back(std::move(piece));
    return static_cast<int>(pieces_.size()) - 1;
}

ColoredGraph HostDescription::catalog_expansion(const ColoredGraph& fragment, int tag,
                                                std::size_t budget) {
    std::vector<ColoredGraph> forbidden_list;
    for (const Graph& m : enumerate_forbidden_models(pattern_graph(), tag)) {
        if (mode_ == HostMode::CycleHost) {
            forbidden_list.emplace_back(m, 1, 1);
        } else {
            // wheel hosts live in 2-edge-colored graphs: forbid every coloring
            std::vector<Edge> edges = m.edges();
            std::uint64_t combos = std::uint64_t(1) << edges.size();
            if (edges.size() > 16)
                throw CatalogLimitError("catalog backend: too many colorings of a forbidden model");
            for (std::uint64_t mask = 0; mask < combos; ++mask) {
                ColoredGraph colored(m, 2, 1);
                for (std::size_t i = 0; i < edges.size(); ++i)
                    colored.edge_color[edges[i]] = (mask >> i) & 1;
                forbidden_list.push_back(std::move(colored));
            }
        }
    }
    int c = mode_ == HostMode::CycleHost ? 1 : 2;
    for (const ColoredGraph& p : all_path_colorings(tag, c, 1)) forbidden_list.push_back(p);

    SaturationLimits limits;
    limits.max_catalog_guest = std::max<int>(3, static_cast<int>(fragment.vertex_count()));
    std::vector<Saturation> catalog = build_catalog(forbidden_list, c, 1, tag, limits);
    for (const Saturation& member : catalog) {
        ColoredGraph exp =
            member.expand(std::max<std::uint32_t>(3, static_cast<std::uint32_t>(fragment.vertex_count())));
        auto res = find_induced_embedding(fragment, exp, budget);
        if (res.found()) return exp;
    }
    throw CatalogLimitError("catalog backend: no member hosts a fragment of tag " +
                            std::to_string(tag) + "; the adaptive backend would admit it");
}

VertexMap HostDescription::place_fragment(const ColoredGraph& fragment, int tag,
                                          const std::vector<std::pair<VertexId, VertexId>>& anchor,
                                          std::set<int>& used_pieces, std::size_t budget) {
    // reuse: least-index piece of the same tag admitting an anchored induced
    // extension, at most one fragment per piece per guest
    VertexMap anchor_map;
    for (const auto& [fv, hv] : anchor) anchor_map[fv] = hv;
    for (const HostPiece& p : pieces_) {
        if (p.tag_n != tag || used_pieces.count(p.id)) continue;
        bool anchors_present = true;
        for (const auto& [_, hv] : anchor) anchors_present &= p.graph.base.has_vertex(hv);
        if (!anchors_present) continue;
        auto res = find_induced_embedding_anchored(fragment, p.graph, anchor_map, budget);
        if (res.found()) {
            used_pieces.insert(p.id);
            return res.get();
        }
    }

    // fresh piece
    ColoredGraph piece_graph;
    VertexMap out;
    if (backend_ == HostBackend::Adaptive) {
        piece_graph.c = fragment.c;
        piece_graph.d = fragment.d;
        for (const auto& [fv, hv] : anchor) out[fv] = hv;
        for (const auto& [v, color] : fragment.vertex_color) {
            if (!out.count(v)) out[v] = next_id_++;
            piece_graph.set_vcolor(out[v], color);
        }
        for (const auto& [e, color] : fragment.edge_color)
            piece_graph.set_ecolor(Edge(out[e.u], out[e.v]), color);
    } else {
        ColoredGraph exp = catalog_expansion(fragment, tag, budget);
        auto emb = find_induced_embedding(fragment, exp, budget);
        if (!emb.found()) throw std::logic_error("catalog expansion lost its fragment");
        // rename: anchored images take existing host ids, everything else fresh
        std::map<VertexId, VertexId> rename;
        for (const auto& [fv, hv] : anchor) rename[emb.get().at(fv)] = hv;
        piece_graph.c = exp.c;
        piece_graph.d = exp.d;
        for (const auto& [v, color] : exp.vertex_color) {
            if (!rename.count(v)) rename[v] = next_id_++;
            piece_graph.set_vcolor(rename[v], color);
        }
        for (const auto& [e, color] : exp.edge_color)
            piece_graph.set_ecolor(Edge(rename[e.u], rename[e.v]), color);
        for (const auto& [fv, _] : fragment.vertex_color) out[fv] = rename[emb.get().at(fv)];
    }

    // piece freeness check before admission
    const Graph& bare = piece_graph.base;
    if (fragment_tag(bare) > tag)
        throw std::logic_error("piece admission: fragment has a path of length >= its tag");
    if (forbidden_.family == Family::Cycle) {
        if (circumference_at_least(bare, forbidden_.a))
            throw std::logic_error("piece admission: fragment has a long cycle");
    } else if (forbidden_.family == Family::Wheel && forbidden_.a == 3) {
        if (!is_k4_minor_free(bare)) throw std::logic_error("piece admission: fragment has a K4 minor");
    } else {
        auto res = find_minor_model(pattern_graph(), bare, budget);
        if (res.found()) throw std::logic_error("piece admission: fragment contains the pattern");
        if (res.inconclusive())
            throw std::runtime_error("piece admission: freeness check exhausted its budget");
    }

    std::vector<VertexId> at;
    for (const auto& [_, hv] : anchor) at.push_back(hv);
    std::sort(at.begin(), at.end());
    HostPiece::Glue glue = at.size() == 2 ? HostPiece::Glue::AtEdge : HostPiece::Glue::AtVertex;
    int id = add_piece(piece_graph, tag, glue, at);
    used_pieces.insert(id);
    return out;
}

EmbeddingCertificate HostDescription::embed(const Graph& guest, std::size_t budget) {
    check_membership(guest, budget);
    std::set<int> used_pieces;
    VertexMap map;

    auto merge = [&](const VertexMap& frag_map) {
        for (const auto& [gv, hv] : frag_map) {
            auto it = map.find(gv);
            if (it != map.end() && it->second != hv)
                throw std::logic_error("embed: inconsistent images for vertex " + std::to_string(gv));
            map[gv] = hv;
        }
    };

    VertexId root_vertex = pieces_[0].graph.base.vertices().front();

    if (mode_ == HostMode::CycleHost) {
        BlockDecomposition bd = blocks(guest);
        for (std::size_t i = 0; i < bd.blocks.size(); ++i) {
            ColoredGraph frag(guest.induced(bd.blocks[i]));
            int tag = fragment_tag(frag.base);
            std::vector<std::pair<VertexId, VertexId>> anchor;
            if (i == 0) {
                anchor.emplace_back(*bd.blocks[i].begin(), root_vertex);
            } else {
                VertexId cutv = bd.attachments[i];
                anchor.emplace_back(cutv, map.at(cutv));
            }
            merge(place_fragment(frag, tag, anchor, used_pieces, budget));
        }
    } else {
        TutteDecomposition dec = tutte_decomposition(guest);
        // G*: guest edges colored real, completed adhesion edges virtual
        ColoredGraph gstar;
        gstar.c = 2;
        gstar.d = 1;
        for (const auto& [v, _] : guest.adjacency()) gstar.set_vcolor(v, 0);
        for (const Edge& e : guest.edges()) gstar.set_ecolor(e, kRealEdge);
        for (const auto& [t, edges] : dec.virtual_edges)
            for (const Edge& e : edges)
                if (!guest.has_edge(e)) gstar.set_ecolor(e, kVirtualEdge);

        // prefix-connected torso order = BFS over the decomposition tree
        TreeNode start = dec.td.tree.vertices().front();
        std::map<TreeNode, TreeNode> parent{{start, start}};
        std::vector<TreeNode> order{start};
        std::deque<TreeNode> queue{start};
        while (!queue.empty()) {
            TreeNode t = queue.front();
            queue.pop_front();
            for (TreeNode u : dec.td.tree.neighbors(t)) {
                if (!parent.count(u)) {
                    parent[u] = t;
                    order.push_back(u);
                    queue.push_back(u);
                }
            }
        }

        for (TreeNode t : order) {
            const auto& bag = dec.td.bags.at(t);
            ColoredGraph frag = gstar.induced(bag);
            int tag = fragment_tag(frag.base);
            std::vector<std::pair<VertexId, VertexId>> anchor;
            if (t == start) {
                anchor.emplace_back(*bag.begin(), root_vertex);
            } else {
                const auto& pbag = dec.td.bags.at(parent[t]);
                for (VertexId v : bag)
                    if (pbag.count(v)) anchor.emplace_back(v, map.at(v));
                if (anchor.empty())
                    throw std::logic_error("embed: empty adhesion inside a connected guest");
            }
            merge(place_fragment(frag, tag, anchor, used_pieces, budget));
        }
    }

    EmbeddingCertificate cert;
    cert.guest = guest;
    cert.host_truncation = materialize(0);
    cert.map = map;
    cert.induced = true;
    if (!check_embedding(ColoredGraph(guest), ColoredGraph(cert.host_truncation), map, true))
        throw std::logic_error("embed: certificate failed its induced-embedding replay");
    return cert;
}

ColoredGraph HostDescription::star_union() const {
    ColoredGraph out;
    out.c = mode_ == HostMode::WheelHost ? 2 : 1;
    out.d = 1;
    for (const HostPiece& p : pieces_) {
        for (const auto& [v, color] : p.graph.vertex_color) out.set_vcolor(v, color);
        for (const auto& [e, color] : p.graph.edge_color) out.set_ecolor(e, color);
    }
    return out;
}

Graph HostDescription::materialize(std::size_t size_budget, bool expose_star) {
    // deterministic padding: round-robin anchors ascending, piece types by
    // (tag, canonical key), gluing each type's least vertex
    if (size_budget > 0) {
        std::set<VertexId> have;
        for (const HostPiece& p : pieces_)
            for (const auto& [v, _] : p.graph.base.adjacency()) have.insert(v);

        std::vector<std::pair<std::pair<int, std::string>, ColoredGraph>> types;
        std::set<std::pair<int, std::string>> seen_types;
        for (const HostPiece& p : pieces_) {
            if (p.graph.vertex_count() < 2) continue;  // a copy must add vertices
            std::pair<int, std::string> key{p.tag_n, canonical_form_exact(p.graph)};
            if (seen_types.insert(key).second) types.emplace_back(key, p.graph);
        }
        std::sort(types.begin(), types.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });

        bool grew = true;
        while (!types.empty() && grew && have.size() < size_budget) {
            grew = false;
            std::vector<VertexId> anchors(have.begin(), have.end());
            for (VertexId v : anchors) {
                for (const auto& [key, graph] : types) {
                    if (have.size() >= size_budget) break;
                    VertexId w = graph.base.vertices().front();
                    VertexMap rename{{w, v}};
                    ColoredGraph copy;
                    copy.c = graph.c;
                    copy.d = graph.d;
                    for (const auto& [u, color] : graph.vertex_color) {
                        if (!rename.count(u)) rename[u] = next_id_++;
                        copy.set_vcolor(rename[u], color);
                        have.insert(rename[u]);
                    }
                    for (const auto& [e, color] : graph.edge_color)
                        copy.set_ecolor(Edge(rename[e.u], rename[e.v]), color);
                    add_piece(copy, key.first, HostPiece::Glue::AtVertex, {v});
                    grew = true;
                }
                if (have.size() >= size_budget) break;
            }
        }
    }

    ColoredGraph star = star_union();
    if (mode_ == HostMode::WheelHost && !expose_star) {
        Graph restriction;
        for (const auto& [v, _] : star.base.adjacency()) restriction.add_vertex(v);
        for (const Edge& e : star.base.edges())
            if (star.ecolor(e) == kRealEdge) restriction.add_edge(e);
        return restriction;
    }
    return star.base;
}

HostVerifyReport HostDescription::verify(std::size_t size_budget, std::size_t budget) {
    HostVerifyReport rep;
    if (size_budget > 0) materialize(size_budget, true);

    // (a) every piece is {X, P_tag}-minor-free
    for (const HostPiece& p : pieces_) {
        rep.pieces_checked++;
        const Graph& bare = p.graph.base;
        if (!bare.empty() && fragment_tag(bare) > p.tag_n)
            rep.violations.push_back("piece " + std::to_string(p.id) + " has a path of length >= " +
                                     std::to_string(p.tag_n));
        if (forbidden_.family == Family::Cycle) {
            if (circumference_at_least(bare, forbidden_.a))
                rep.violations.push_back("piece " + std::to_string(p.id) + " has a long cycle");
        } else if (forbidden_.family == Family::Wheel && forbidden_.a == 3) {
            if (!is_k4_minor_free(bare))
                rep.violations.push_back("piece " + std::to_string(p.id) + " has a K4 minor");
        } else {
            auto res = find_minor_model(pattern_graph(), bare, budget);
            if (res.found())
                rep.violations.push_back("piece " + std::to_string(p.id) + " contains the pattern");
        }
    }

    // (b) gluing structure: each piece meets all earlier material exactly in
    // its glue set, sized for the mode, with color-matched glue edges
    std::set<VertexId> earlier;
    std::size_t max_glue = mode_ == HostMode::CycleHost ? 1 : 2;
    for (const HostPiece& p : pieces_) {
        std::set<VertexId> overlap;
        for (const auto& [v, _] : p.graph.base.adjacency())
            if (earlier.count(v)) overlap.insert(v);
        std::set<VertexId> declared(p.glue_at.begin(), p.glue_at.end());
        if (p.glue == HostPiece::Glue::Root) {
            if (!overlap.empty())
                rep.violations.push_back("root piece overlaps earlier material");
        } else if (overlap != declared) {
            rep.violations.push_back("piece " + std::to_string(p.id) +
                                     " overlaps earlier material beyond its glue set");
        } else if (declared.size() > max_glue) {
            rep.violations.push_back("piece " + std::to_string(p.id) + " glue set too large");
        } else if (p.glue == HostPiece::Glue::AtEdge) {
            Edge e(p.glue_at[0], p.glue_at[1]);
            if (!p.graph.base.has_edge(e) || p.parent < 0 ||
                !pieces_[p.parent].graph.base.has_edge(e) ||
                p.graph.ecolor(e) != pieces_[p.parent].graph.ecolor(e))
                rep.violations.push_back("piece " + std::to_string(p.id) +
                                         " glue edge missing or color-mismatched");
        }
        if (p.glue != HostPiece::Glue::Root &&
            (p.parent < 0 || p.parent >= p.id))
            rep.violations.push_back("piece " + std::to_string(p.id) + " has a bad parent link");
        for (const auto& [v, _] : p.graph.base.adjacency()) earlier.insert(v);
    }

    // (c) the piece tree is a tree-decomposition of the star union with
    // complete adhesion sets and mode-bounded adhesion
    ColoredGraph star = star_union();
    TreeDecomposition td;
    for (const HostPiece& p : pieces_) {
        td.tree.add_vertex(p.id);
        td.bags[p.id] = p.graph.base.vertex_set();
        if (p.parent >= 0) td.tree.add_edge(p.parent, p.id);
    }
    DecompositionReport drep = verify_decomposition(star.base, td);
    if (!drep.valid)
        rep.violations.push_back("piece tree is not a tree-decomposition: " + drep.violation);
    else {
        if (drep.adhesion > static_cast<int>(max_glue))
            rep.violations.push_back("piece tree adhesion exceeds " + std::to_string(max_glue));
        if (!drep.adhesion_sets_complete_in_g)
            rep.violations.push_back("piece tree has an incomplete adhesion set");
    }

    // (d) direct freeness oracle on the truncation
    if (forbidden_.family == Family::Cycle) {
        rep.truncation_free = !circumference_at_least(star.base, forbidden_.a).has_value();
    } else if (forbidden_.family == Family::Wheel && forbidden_.a == 3) {
        Graph gamma = materialize(0, false);
        rep.truncation_free = is_k4_minor_free(gamma) && is_k4_minor_free(star.base);
    } else {
        auto res = find_minor_model(pattern_graph(), star.base, budget);
        rep.truncation_free = res.none();
        if (res.found()) rep.violations.push_back("truncation contains the forbidden pattern");
        if (res.inconclusive())
            rep.violations.push_back("truncation freeness check exhausted its budget");
    }

    rep.ok = rep.violations.empty() && rep.truncation_free;
    return rep;
}

// ---- persistence -------------------------------------------------------------

std::string HostDescription::to_json() const {
    nlohmann::json doc;
    doc["mode"] = mode_ == HostMode::CycleHost ? "cycle" : "wheel";
    doc["backend"] = backend_ == HostBackend::Adaptive ? "adaptive" : "catalog";
    doc["forbidden"] = forbidden_.name();
    doc["next_id"] = next_id_;
    doc["pieces"] = nlohmann::json::array();
    for (const HostPiece& p : pieces_) {
        nlohmann::json pj;
        pj["id"] = p.id;
        pj["tag"] = p.tag_n;
        pj["graph"] = nlohmann::json::parse(minoruniv::to_json(p.graph));
        pj["glue"] = p.glue == HostPiece::Glue::Root     ? "root"
                     : p.glue == HostPiece::Glue::AtVertex ? "vertex"
                                                           : "edge";
        pj["at"] = p.glue_at;
        pj["parent"] = p.parent;
        doc["pieces"].push_back(std::move(pj));
    }
    return doc.dump();
}

HostDescription HostDescription::from_json(const std::string& text) {
    nlohmann::json doc = nlohmann::json::parse(text);
    auto fam = parse_family(doc.at("forbidden").get<std::string>());
    if (!fam) throw std::invalid_argument("host state: bad forbidden family");
    HostDescription host;
    host.mode_ = doc.at("mode") == "cycle" ? HostMode::CycleHost : HostMode::WheelHost;
    host.backend_ = doc.at("backend") == "adaptive" ? HostBackend::Adaptive : HostBackend::Catalog;
    host.forbidden_ = *fam;
    host.next_id_ = doc.at("next_id").get<VertexId>();
    for (const auto& pj : doc.at("pieces")) {
        HostPiece p;
        p.id = pj.at("id").get<int>();
        p.tag_n = pj.at("tag").get<int>();
        p.graph = colored_from_json(pj.at("graph").dump());
        std::string glue = pj.at("glue").get<std::string>();
        p.glue = glue == "root"     ? HostPiece::Glue::Root
                 : glue == "vertex" ? HostPiece::Glue::AtVertex
                                    : HostPiece::Glue::AtEdge;
        for (const auto& v : pj.at("at")) p.glue_at.push_back(v.get<VertexId>());
        p.parent = pj.at("parent").get<int>();
        host.pieces_.push_back(std::move(p));
    }
    return host;
}

std::string certificate_to_json(const EmbeddingCertificate& cert) {
    nlohmann::json doc;
    doc["guest"] = nlohmann::json::parse(minoruniv::to_json(ColoredGraph(cert.guest)));
    doc["host_truncation"] =
        nlohmann::json::parse(minoruniv::to_json(ColoredGraph(cert.host_truncation)));
    doc["map"] = nlohmann::json::object();
    for (const auto& [g, h] : cert.map) doc["map"][std::to_string(g)] = h;
    doc["induced"] = cert.induced;
    return doc.dump();
}

EmbeddingCertificate certificate_from_json(const std::string& text) {
    nlohmann::json doc = nlohmann::json::parse(text);
    EmbeddingCertificate cert;
    cert.guest = colored_from_json(doc.at("guest").dump()).base;
    cert.host_truncation = colored_from_json(doc.at("host_truncation").dump()).base;
    for (const auto& [k, v] : doc.at("map").items()) cert.map[std::stoi(k)] = v.get<VertexId>();
    cert.induced = doc.at("induced").get<bool>();
    return cert;
}

}  // namespace minoruniv
