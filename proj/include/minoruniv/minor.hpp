#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "minoruniv/graph.hpp"
#include "minoruniv/search.hpp"

namespace minoruniv {

// Certified witness that `pattern` is a minor of `host`: one connected branch
// set per pattern vertex (disjoint family, not a partition; untouched host
// vertices are simply unused) and one witness host edge per pattern edge.
struct MinorModel {
    Graph pattern;
    Graph host;
    std::map<VertexId, std::set<VertexId>> branch_sets;
    std::map<Edge, Edge> edge_witnesses;
};

// Exhaustive invariant check; on failure the report names the violation.
bool verify_model(const MinorModel& m, std::string* report = nullptr);

// Certified minor-model search. Pattern must be connected (disconnected
// patterns are rejected; callers reduce component-wise). "None" is exact.
SearchResult<MinorModel> find_minor_model(const Graph& pattern, const Graph& host,
                                          std::size_t budget = kDefaultNodeBudget);

struct MinorFreeResult {
    Outcome outcome;  // None = free, Found = model found, Inconclusive = budget
    std::optional<MinorModel> model;
    bool free() const { return outcome == Outcome::None; }
};

MinorFreeResult is_minor_free(const Graph& host, const std::vector<Graph>& patterns,
                              std::size_t budget = kDefaultNodeBudget);

// Subdivision witness: branch vertices plus internally disjoint paths tracing
// the pattern. Paths are inclusive vertex sequences between branch vertices.
struct SubdivisionWitness {
    Graph pattern;
    Graph host;
    std::map<VertexId, VertexId> branch_vertices;
    std::map<Edge, std::vector<VertexId>> edge_paths;
};

bool verify_subdivision(const SubdivisionWitness& w, std::string* report = nullptr);

SearchResult<SubdivisionWitness> find_subdivision(const Graph& pattern, const Graph& host,
                                                  std::size_t budget = kDefaultNodeBudget);

// Contracting each path into its first endpoint's branch set yields a model.
MinorModel subdivision_to_model(const SubdivisionWitness& w);

// Exact: a cycle of length >= n if one exists (vertex sequence; the closing
// edge back to front is implied), else nullopt. Works block-wise, so large
// hosts with small blocks stay cheap.
std::optional<std::vector<VertexId>> circumference_at_least(const Graph& host, int n);

// Exact circumference (0 for forests).
int circumference(const Graph& g);

// JSON certificate schema:
// {"pattern":{...}, "host_ref":{...}, "branch_sets":{"v":[ids]}, "edge_witnesses":{"u-v":[a,b]}}
std::string model_to_json(const MinorModel& m);
MinorModel model_from_json(const std::string& text);

}  // namespace minoruniv
