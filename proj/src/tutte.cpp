#include "minoruniv/tutte.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "minoruniv/blocks.hpp"
#include "minoruniv/search.hpp"

namespace minoruniv {

namespace {

// One finished part: its torso graph carries the accumulated split edges.
struct Part {
    std::set<VertexId> bag;
    Graph piece;
};

struct Builder {
    std::vector<Part> parts;
    std::vector<std::pair<int, int>> tree_edges;

    int add_part(Graph piece) {
        Part p;
        p.bag = piece.vertex_set();
        p.piece = std::move(piece);
        parts.push_back(std::move(p));
        return static_cast<int>(parts.size()) - 1;
    }

    // least node among `nodes` whose bag contains all of `need`
    int attach_node(const std::vector<int>& nodes, std::initializer_list<VertexId> need) const {
        for (int n : nodes) {
            bool ok = true;
            for (VertexId v : need) ok = ok && parts[n].bag.count(v);
            if (ok) return n;
        }
        throw std::logic_error("tutte: no attach node for required pair");
    }

    std::optional<std::pair<VertexId, VertexId>> least_two_separator(const Graph& p) const {
        std::vector<VertexId> verts = p.vertices();
        for (std::size_t i = 0; i < verts.size(); ++i) {
            for (std::size_t j = i + 1; j < verts.size(); ++j) {
                Graph cut = p;
                cut.remove_vertex(verts[i]);
                cut.remove_vertex(verts[j]);
                if (!cut.empty() && !is_connected(cut))
                    return std::make_pair(verts[i], verts[j]);
            }
        }
        return std::nullopt;
    }

    // Decomposes one piece (2-connected once it has >= 3 vertices) and returns
    // the node ids of its subtree.
    std::vector<int> decompose(const Graph& piece) {
        if (piece.vertex_count() <= 2 || is_cycle_graph(piece)) return {add_part(piece)};
        auto sep = least_two_separator(piece);
        if (!sep) return {add_part(piece)};
        auto [a, b] = *sep;

        Graph cut = piece;
        cut.remove_vertex(a);
        cut.remove_vertex(b);
        std::vector<std::set<VertexId>> comps = connected_components(cut);

        std::vector<int> all_nodes;
        int prev_attach = -1;
        for (const auto& comp : comps) {
            std::set<VertexId> keep = comp;
            keep.insert(a);
            keep.insert(b);
            Graph sub = piece.induced(keep);
            sub.add_edge(a, b);  // split edge; virtual when absent from g
            std::vector<int> nodes = decompose(sub);
            int attach = attach_node(nodes, {a, b});
            if (prev_attach >= 0) tree_edges.emplace_back(prev_attach, attach);
            prev_attach = attach;
            all_nodes.insert(all_nodes.end(), nodes.begin(), nodes.end());
        }
        return all_nodes;
    }
};

TorsoKind classify(const Graph& piece) {
    if (piece.vertex_count() == 1) return TorsoKind::K1;
    if (piece.vertex_count() == 2) return TorsoKind::K2;
    if (is_cycle_graph(piece)) return TorsoKind::Cycle;
    return TorsoKind::ThreeConnected;
}

}  // namespace

std::string torso_kind_name(TorsoKind k) {
    switch (k) {
        case TorsoKind::ThreeConnected: return "3-connected";
        case TorsoKind::Cycle: return "cycle";
        case TorsoKind::K1: return "K1";
        case TorsoKind::K2: return "K2";
    }
    return "?";
}

Graph TutteDecomposition::torso_graph(const Graph& g, TreeNode t) const {
    Graph out = g.induced(td.bags.at(t));
    auto it = virtual_edges.find(t);
    if (it != virtual_edges.end())
        for (const Edge& e : it->second) out.add_edge(e);
    return out;
}

TutteDecomposition tutte_decomposition(const Graph& g) {
    if (g.empty()) throw std::invalid_argument("tutte_decomposition: empty graph");

    Builder builder;
    int prev_component_root = -1;
    for (const auto& comp : connected_components(g)) {
        BlockDecomposition bd = blocks(g.induced(comp));
        std::vector<int> comp_nodes;
        for (std::size_t j = 0; j < bd.blocks.size(); ++j) {
            std::vector<int> nodes = builder.decompose(g.induced(bd.blocks[j]));
            if (j > 0) {
                VertexId cutv = bd.attachments[j];
                int mine = builder.attach_node(nodes, {cutv});
                int prefix = builder.attach_node(comp_nodes, {cutv});
                builder.tree_edges.emplace_back(prefix, mine);
            }
            comp_nodes.insert(comp_nodes.end(), nodes.begin(), nodes.end());
        }
        if (prev_component_root >= 0)
            builder.tree_edges.emplace_back(prev_component_root, comp_nodes.front());
        prev_component_root = comp_nodes.front();
    }

    TutteDecomposition dec;
    for (std::size_t i = 0; i < builder.parts.size(); ++i) {
        dec.td.tree.add_vertex(static_cast<TreeNode>(i));
        dec.td.bags[static_cast<TreeNode>(i)] = builder.parts[i].bag;
        dec.torso_kind[static_cast<TreeNode>(i)] = classify(builder.parts[i].piece);
    }
    for (const auto& [x, y] : builder.tree_edges) dec.td.tree.add_edge(x, y);

    // virtual edges and their witnesses
    for (std::size_t i = 0; i < builder.parts.size(); ++i) {
        TreeNode t = static_cast<TreeNode>(i);
        const Part& part = builder.parts[i];
        for (const Edge& e : part.piece.edges()) {
            if (g.has_edge(e)) continue;
            dec.virtual_edges[t].push_back(e);

            // prefer the neighbor subtree whose adhesion is exactly {u,v}
            std::vector<VertexId> witness;
            for (TreeNode nb : dec.td.tree.neighbors(t)) {
                const auto& nbag = dec.td.bags.at(nb);
                if (!nbag.count(e.u) || !nbag.count(e.v)) continue;
                Graph pruned = dec.td.tree;
                pruned.remove_edge(t, nb);
                std::set<VertexId> territory;
                for (TreeNode s : component_of(pruned, nb)) {
                    const auto& sbag = dec.td.bags.at(s);
                    territory.insert(sbag.begin(), sbag.end());
                }
                for (VertexId v : part.bag)
                    if (v != e.u && v != e.v) territory.erase(v);
                witness = shortest_path_between(g.induced(territory), {e.u}, {e.v});
                if (!witness.empty()) break;
            }
            if (witness.empty()) {
                std::set<VertexId> outside;
                for (const auto& [v, _] : g.adjacency())
                    if (!part.bag.count(v) || v == e.u || v == e.v) outside.insert(v);
                witness = shortest_path_between(g.induced(outside), {e.u}, {e.v});
            }
            if (witness.empty())
                throw std::logic_error("tutte: no path witness for virtual edge " +
                                       std::to_string(e.u) + "-" + std::to_string(e.v));
            dec.path_witnesses[t][e] = witness;
        }
    }
    return dec;
}

TutteReport verify_tutte(const Graph& g, const TutteDecomposition& dec) {
    TutteReport rep;
    DecompositionReport base = verify_decomposition(g, dec.td);
    if (!base.valid) {
        rep.violation = "underlying decomposition invalid: " + base.violation;
        return rep;
    }
    rep.adhesion = base.adhesion;
    if (base.adhesion > 2) {
        rep.violation = "adhesion exceeds 2";
        return rep;
    }
    for (const auto& [t, _] : dec.td.bags) {
        if (!dec.torso_kind.count(t)) {
            rep.violation = "node " + std::to_string(t) + " lacks a torso kind";
            return rep;
        }
        Graph torso = dec.torso_graph(g, t);
        TorsoKind kind = dec.torso_kind.at(t);
        bool ok = false;
        switch (kind) {
            case TorsoKind::K1: ok = torso.vertex_count() == 1; break;
            case TorsoKind::K2: ok = torso.vertex_count() == 2 && torso.edge_count() == 1; break;
            case TorsoKind::Cycle: ok = is_cycle_graph(torso); break;
            case TorsoKind::ThreeConnected:
                ok = torso.vertex_count() >= 4 && vertex_connectivity(torso) >= 3;
                break;
        }
        if (!ok) {
            rep.violation = "node " + std::to_string(t) + " misclassified as " +
                            torso_kind_name(kind);
            return rep;
        }
        auto ve = dec.virtual_edges.find(t);
        std::set<Edge> declared;
        if (ve != dec.virtual_edges.end()) declared.insert(ve->second.begin(), ve->second.end());
        for (const Edge& e : torso.edges()) {
            bool in_g = g.has_edge(e);
            if (!in_g && !declared.count(e)) {
                rep.violation = "undeclared virtual edge at node " + std::to_string(t);
                return rep;
            }
            if (in_g && declared.count(e)) {
                rep.violation = "real edge declared virtual at node " + std::to_string(t);
                return rep;
            }
        }
        for (const Edge& e : declared) {
            auto wit = dec.path_witnesses.find(t);
            if (wit == dec.path_witnesses.end() || !wit->second.count(e)) {
                rep.violation = "virtual edge without witness at node " + std::to_string(t);
                return rep;
            }
            const auto& path = wit->second.at(e);
            if (path.size() < 3 || !((path.front() == e.u && path.back() == e.v) ||
                                     (path.front() == e.v && path.back() == e.u))) {
                rep.violation = "witness endpoints wrong at node " + std::to_string(t);
                return rep;
            }
            for (std::size_t i = 0; i + 1 < path.size(); ++i) {
                if (!g.has_edge(path[i], path[i + 1])) {
                    rep.violation = "witness uses a non-edge at node " + std::to_string(t);
                    return rep;
                }
            }
            std::set<VertexId> seen;
            for (VertexId v : path)
                if (!seen.insert(v).second) {
                    rep.violation = "witness path not simple at node " + std::to_string(t);
                    return rep;
                }
            const auto& bag = dec.td.bags.at(t);
            for (std::size_t i = 1; i + 1 < path.size(); ++i) {
                if (bag.count(path[i])) {
                    rep.violation = "witness passes through the part at node " + std::to_string(t);
                    return rep;
                }
            }
        }
    }
    rep.valid = true;
    return rep;
}

std::string tutte_to_json(const TutteDecomposition& dec) {
    nlohmann::json doc;
    doc["tree"]["nodes"] = nlohmann::json::array();
    for (const auto& [t, _] : dec.td.tree.adjacency()) doc["tree"]["nodes"].push_back(t);
    doc["tree"]["edges"] = nlohmann::json::array();
    for (const Edge& e : dec.td.tree.edges()) doc["tree"]["edges"].push_back({e.u, e.v});
    doc["bags"] = nlohmann::json::object();
    for (const auto& [t, bag] : dec.td.bags) {
        nlohmann::json arr = nlohmann::json::array();
        for (VertexId v : bag) arr.push_back(v);
        doc["bags"][std::to_string(t)] = arr;
    }
    doc["torso_kind"] = nlohmann::json::object();
    for (const auto& [t, kind] : dec.torso_kind)
        doc["torso_kind"][std::to_string(t)] = torso_kind_name(kind);
    doc["virtual_edges"] = nlohmann::json::object();
    for (const auto& [t, edges] : dec.virtual_edges) {
        nlohmann::json arr = nlohmann::json::array();
        for (const Edge& e : edges) arr.push_back({e.u, e.v});
        doc["virtual_edges"][std::to_string(t)] = arr;
    }
    doc["path_witnesses"] = nlohmann::json::object();
    for (const auto& [t, witmap] : dec.path_witnesses) {
        nlohmann::json obj = nlohmann::json::object();
        for (const auto& [e, path] : witmap)
            obj[std::to_string(e.u) + "-" + std::to_string(e.v)] = path;
        doc["path_witnesses"][std::to_string(t)] = obj;
    }
    return doc.dump();
}

TutteDecomposition tutte_from_json(const std::string& text) {
    nlohmann::json doc = nlohmann::json::parse(text);
    TutteDecomposition dec;
    for (const auto& t : doc.at("tree").at("nodes")) dec.td.tree.add_vertex(t.get<TreeNode>());
    for (const auto& e : doc.at("tree").at("edges"))
        dec.td.tree.add_edge(e.at(0).get<TreeNode>(), e.at(1).get<TreeNode>());
    for (const auto& [key, arr] : doc.at("bags").items()) {
        std::set<VertexId>& bag = dec.td.bags[std::stoi(key)];
        for (const auto& v : arr) bag.insert(v.get<VertexId>());
    }
    for (const auto& [key, name] : doc.at("torso_kind").items()) {
        std::string n = name.get<std::string>();
        TorsoKind kind = TorsoKind::K1;
        if (n == "3-connected") kind = TorsoKind::ThreeConnected;
        else if (n == "cycle") kind = TorsoKind::Cycle;
        else if (n == "K2") kind = TorsoKind::K2;
        else if (n != "K1") throw std::invalid_argument("unknown torso kind " + n);
        dec.torso_kind[std::stoi(key)] = kind;
    }
    if (doc.count("virtual_edges"))
        for (const auto& [key, arr] : doc.at("virtual_edges").items())
            for (const auto& e : arr)
                dec.virtual_edges[std::stoi(key)].emplace_back(e.at(0).get<VertexId>(),
                                                               e.at(1).get<VertexId>());
    if (doc.count("path_witnesses"))
        for (const auto& [key, obj] : doc.at("path_witnesses").items())
            for (const auto& [ekey, arr] : obj.items()) {
                auto dash = ekey.find('-');
                Edge e(std::stoi(ekey.substr(0, dash)), std::stoi(ekey.substr(dash + 1)));
                std::vector<VertexId>& path = dec.path_witnesses[std::stoi(key)][e];
                for (const auto& v : arr) path.push_back(v.get<VertexId>());
            }
    return dec;
}

}  // namespace minoruniv
