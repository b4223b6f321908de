#include "minoruniv/families.hpp"

#include <cctype>

namespace minoruniv {

namespace {

void require(bool ok, const std::string& diag) {
    if (!ok) throw std::invalid_argument(diag);
}

Graph path_graph(int n) {
    require(n >= 1, "path parameter n must be >= 1, got " + std::to_string(n));
    Graph g;
    g.add_vertex(0);
    for (int i = 0; i < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    require(n >= 3, "cycle parameter n must be >= 3, got " + std::to_string(n));
    Graph g;
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph two_cycles_graph(int n, int m) {
    require(n >= 3 && m >= 3, "two-cycle parameters must be >= 3, got " + std::to_string(n) + "," +
                                  std::to_string(m));
    // Both cycles share exactly the edge 0-1.
    Graph g = cycle_graph(n);
    VertexId prev = 1;
    for (int i = 0; i < m - 2; ++i) {
        VertexId fresh = n + i;
        g.add_edge(prev, fresh);
        prev = fresh;
    }
    g.add_edge(prev, 0);
    return g;
}

Graph ladder_graph(int k) {
    require(k >= 3, "ladder parameter k must be >= 3, got " + std::to_string(k));
    Graph g;
    for (int i = 0; i + 1 < k; ++i) {
        g.add_edge(i, i + 1);          // top rail
        g.add_edge(k + i, k + i + 1);  // bottom rail
    }
    for (int i = 0; i < k; ++i) g.add_edge(i, k + i);  // rungs
    return g;
}

}  // namespace

Graph generate(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::Path:
            return path_graph(spec.a);
        case Family::Cycle:
            return cycle_graph(spec.a);
        case Family::TwoCycles:
            return two_cycles_graph(spec.a, spec.b);
        case Family::Wheel: {
            require(spec.a >= 3, "wheel parameter k must be >= 3, got " + std::to_string(spec.a));
            Graph g = cycle_graph(spec.a);
            VertexId hub = spec.a;
            for (int i = 0; i < spec.a; ++i) g.add_edge(hub, i);
            return g;
        }
        case Family::DoubleWheel: {
            require(spec.a >= 3, "double-wheel parameter k must be >= 3, got " + std::to_string(spec.a));
            Graph g = cycle_graph(spec.a);
            // Two apexes adjacent to the whole rim but not to each other.
            for (int i = 0; i < spec.a; ++i) {
                g.add_edge(spec.a, i);
                g.add_edge(spec.a + 1, i);
            }
            return g;
        }
        case Family::Ladder:
            return ladder_graph(spec.a);
        case Family::CircularLadder: {
            Graph g = ladder_graph(spec.a);
            g.add_edge(0, spec.a - 1);
            g.add_edge(spec.a, 2 * spec.a - 1);
            return g;
        }
        case Family::MoebiusLadder: {
            Graph g = ladder_graph(spec.a);
            g.add_edge(0, 2 * spec.a - 1);
            g.add_edge(spec.a, spec.a - 1);
            return g;
        }
        case Family::CompleteBipartite: {
            require(spec.a >= 1 && spec.b >= 1, "bipartite sides must be >= 1, got " +
                                                    std::to_string(spec.a) + "," + std::to_string(spec.b));
            Graph g;
            for (int i = 0; i < spec.a; ++i)
                for (int j = 0; j < spec.b; ++j) g.add_edge(i, spec.a + j);
            return g;
        }
        case Family::RayTruncation: {
            require(spec.a >= 1, "ray truncation needs m >= 1 ray vertices, got " + std::to_string(spec.a));
            Graph g;
            g.add_vertex(0);
            for (int i = 0; i + 1 < spec.a; ++i) g.add_edge(i, i + 1);
            for (int i = 0; i < spec.a; ++i) {
                g.add_edge(spec.a, i);
                g.add_edge(spec.a + 1, i);
            }
            return g;
        }
        case Family::Cone:
            return cone(spec.cone_base);
    }
    throw std::logic_error("unhandled family");
}

Graph cone(const Graph& g) {
    Graph out = g;
    VertexId apex = out.fresh_id();
    out.add_vertex(apex);
    for (const auto& [v, _] : g.adjacency()) out.add_edge(apex, v);
    return out;
}

std::string FamilySpec::name() const {
    switch (family) {
        case Family::Path: return "P" + std::to_string(a);
        case Family::Cycle: return "C" + std::to_string(a);
        case Family::TwoCycles: return "C" + std::to_string(a) + "," + std::to_string(b);
        case Family::Wheel: return "W" + std::to_string(a);
        case Family::DoubleWheel: return "D" + std::to_string(a);
        case Family::Ladder: return "L" + std::to_string(a);
        case Family::CircularLadder: return "O" + std::to_string(a);
        case Family::MoebiusLadder: return "M" + std::to_string(a);
        case Family::CompleteBipartite: return "K" + std::to_string(a) + "," + std::to_string(b);
        case Family::RayTruncation: return "R" + std::to_string(a);
        case Family::Cone: return "cone";
    }
    return "?";
}

std::optional<FamilySpec> parse_family(const std::string& text) {
    if (text.size() < 2) return std::nullopt;
    char head = static_cast<char>(std::toupper(text[0]));
    std::string rest = text.substr(1);
    auto split = rest.find(',');
    try {
        if (split != std::string::npos) {
            int a = std::stoi(rest.substr(0, split));
            int b = std::stoi(rest.substr(split + 1));
            if (head == 'C') return FamilySpec::two_cycles(a, b);
            if (head == 'K') return FamilySpec::complete_bipartite(a, b);
            return std::nullopt;
        }
        int a = std::stoi(rest);
        switch (head) {
            case 'P': return FamilySpec::path(a);
            case 'C': return FamilySpec::cycle(a);
            case 'W': return FamilySpec::wheel(a);
            case 'D': return FamilySpec::double_wheel(a);
            case 'L': return FamilySpec::ladder(a);
            case 'O': return FamilySpec::circular_ladder(a);
            case 'M': return FamilySpec::moebius_ladder(a);
            case 'K': return std::nullopt;  // needs two sides
            case 'R': return FamilySpec::ray_truncation(a);
            default: return std::nullopt;
        }
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

}  // namespace minoruniv
