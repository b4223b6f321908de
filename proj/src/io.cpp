#include "minoruniv/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace minoruniv {

namespace {

using nlohmann::json;

void append_g6_number(std::string& out, std::size_t n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        throw std::invalid_argument("graph6: too many vertices");
    }
}

std::size_t parse_g6_number(const std::string& s, std::size_t& i) {
    if (i >= s.size()) throw std::invalid_argument("graph6: empty input");
    if (s[i] != 126) return static_cast<std::size_t>(s[i++]) - 63;
    ++i;
    if (i < s.size() && s[i] == 126) throw std::invalid_argument("graph6: 36-bit sizes unsupported");
    std::size_t n = 0;
    for (int k = 0; k < 3; ++k) {
        if (i >= s.size()) throw std::invalid_argument("graph6: truncated size");
        n = (n << 6) | (static_cast<std::size_t>(s[i++]) - 63);
    }
    return n;
}

}  // namespace

std::string to_graph6(const Graph& g) {
    std::vector<VertexId> ids = g.vertices();
    std::size_t n = ids.size();
    std::map<VertexId, std::size_t> pos;
    for (std::size_t i = 0; i < n; ++i) pos[ids[i]] = i;

    std::string out;
    append_g6_number(out, n);
    int bit = 5;
    char cur = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            if (g.has_edge(ids[i], ids[j])) cur |= static_cast<char>(1 << bit);
            if (--bit < 0) {
                out.push_back(static_cast<char>(cur + 63));
                cur = 0;
                bit = 5;
            }
        }
    }
    if (n >= 2 && bit != 5) out.push_back(static_cast<char>(cur + 63));
    return out;
}

Graph from_graph6(const std::string& line) {
    std::string s = line;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    std::size_t i = 0;
    if (!s.empty() && s[0] == ':') throw std::invalid_argument("sparse6 not supported");
    std::size_t n = parse_g6_number(s, i);
    Graph g;
    for (std::size_t v = 0; v < n; ++v) g.add_vertex(static_cast<VertexId>(v));
    int bit = -1;
    char cur = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t u = 0; u < j; ++u) {
            if (bit < 0) {
                if (i >= s.size()) throw std::invalid_argument("graph6: truncated bits");
                cur = static_cast<char>(s[i++] - 63);
                bit = 5;
            }
            if ((cur >> bit) & 1) g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(j));
            --bit;
        }
    }
    return g;
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << " " << g.edge_count() << "\n";
    for (const Edge& e : g.edges()) out << e.u << " " << e.v << "\n";
    for (const auto& [v, nbrs] : g.adjacency())
        if (nbrs.empty()) out << v << "\n";
    return out.str();
}

Graph from_edge_list(std::istream& in) {
    std::size_t n = 0, m = 0;
    if (!(in >> n >> m)) throw std::invalid_argument("edge list: missing 'n m' header");
    Graph g;
    for (std::size_t i = 0; i < m; ++i) {
        VertexId u, v;
        if (!(in >> u >> v)) throw std::invalid_argument("edge list: truncated edges");
        g.add_edge(u, v);
    }
    VertexId extra;
    while (in >> extra) g.add_vertex(extra);
    // pad with 0..n-1 when the header promises more vertices than edges mention
    for (VertexId v = 0; g.vertex_count() < n && v < static_cast<VertexId>(n); ++v) g.add_vertex(v);
    if (g.vertex_count() != n)
        throw std::invalid_argument("edge list: vertex count mismatch with header");
    return g;
}

Graph from_edge_list_text(const std::string& text) {
    std::istringstream in(text);
    return from_edge_list(in);
}

std::string to_dot(const ColoredGraph& g, const std::string& name) {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (const auto& [v, _] : g.base.adjacency())
        out << "  " << v << " [label=\"" << v << ":" << g.vcolor(v) << "\"];\n";
    for (const Edge& e : g.base.edges())
        out << "  " << e.u << " -- " << e.v << " [style=\"" << (g.ecolor(e) == 0 ? "solid" : "dashed")
            << "\" color=\"c" << g.ecolor(e) << "\"];\n";
    out << "}\n";
    return out.str();
}

std::string to_json(const ColoredGraph& g) {
    json doc;
    doc["c"] = g.c;
    doc["d"] = g.d;
    doc["vertices"] = json::array();
    for (const auto& [v, _] : g.base.adjacency())
        doc["vertices"].push_back({{"id", v}, {"color", g.vcolor(v)}});
    doc["edges"] = json::array();
    for (const Edge& e : g.base.edges())
        doc["edges"].push_back({{"u", e.u}, {"v", e.v}, {"color", g.ecolor(e)}});
    return doc.dump();
}

ColoredGraph colored_from_json(const std::string& text) {
    json doc = json::parse(text);
    ColoredGraph g;
    g.c = doc.value("c", 1);
    g.d = doc.value("d", 1);
    for (const auto& v : doc.at("vertices"))
        g.set_vcolor(v.at("id").get<VertexId>(), v.value("color", 0));
    for (const auto& e : doc.at("edges"))
        g.set_ecolor(Edge(e.at("u").get<VertexId>(), e.at("v").get<VertexId>()), e.value("color", 0));
    g.validate();
    return g;
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
        return colored_from_json(text).base;
    }
    if (path.size() >= 3 && path.substr(path.size() - 3) == ".g6") {
        return from_graph6(text);
    }
    if (!text.empty() && (std::isdigit(static_cast<unsigned char>(text[0])))) {
        return from_edge_list_text(text);
    }
    if (!text.empty() && text[0] == '{') return colored_from_json(text).base;
    return from_graph6(text);
}

void write_graph_file(const std::string& path, const Graph& g, const std::string& format) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open " + path + " for writing");
    if (format == "g6")
        out << to_graph6(g) << "\n";
    else if (format == "edges")
        out << to_edge_list(g);
    else if (format == "json")
        out << to_json(ColoredGraph(g)) << "\n";
    else if (format == "dot")
        out << to_dot(ColoredGraph(g));
    else
        throw std::invalid_argument("unknown graph format: " + format);
}

}  // namespace minoruniv
