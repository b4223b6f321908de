#pragma once

#include <iosfwd>
#include <string>

#include "minoruniv/colored_graph.hpp"
#include "minoruniv/graph.hpp"

namespace minoruniv {

// graph6: one graph per line, vertices relabeled densely to 0..n-1 on write.
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& line);

// Edge-list text: "n m" header then m lines "u v". Vertex ids are preserved
// only when they are 0..n-1; the header counts vertices, so isolated trailing
// ids are given explicitly as "v" lines after the edges when needed.
std::string to_edge_list(const Graph& g);
Graph from_edge_list(std::istream& in);
Graph from_edge_list_text(const std::string& text);

// DOT, with vertex color as a label attribute and edge color as style.
std::string to_dot(const ColoredGraph& g, const std::string& name = "g");

// JSON: {"vertices":[{"id":..,"color":..}], "edges":[{"u":..,"v":..,"color":..}], "c":.., "d":..}
std::string to_json(const ColoredGraph& g);
ColoredGraph colored_from_json(const std::string& text);

// Reads a graph in any supported format, keyed by file suffix or by content.
// Formats: "g6", "edges", "json".
Graph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const Graph& g, const std::string& format);

}  // namespace minoruniv
