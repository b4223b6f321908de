#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "minoruniv/colored_graph.hpp"
#include "minoruniv/graph.hpp"

namespace minoruniv {

inline constexpr std::size_t kDefaultNodeBudget = 10'000'000;

// Three-valued search outcome. "None" is only reported when the search space
// was exhausted; running out of budget is a distinct result, never a silent no.
enum class Outcome { Found, None, Inconclusive };

template <typename T>
struct SearchResult {
    Outcome outcome;
    std::optional<T> value;
    std::size_t nodes = 0;  // search-tree nodes consumed

    bool found() const { return outcome == Outcome::Found; }
    bool none() const { return outcome == Outcome::None; }
    bool inconclusive() const { return outcome == Outcome::Inconclusive; }

    const T& get() const {
        if (!value) throw std::logic_error("SearchResult has no value");
        return *value;
    }

    static SearchResult make_found(T v, std::size_t n) { return {Outcome::Found, std::move(v), n}; }
    static SearchResult make_none(std::size_t n) { return {Outcome::None, std::nullopt, n}; }
    static SearchResult make_inconclusive(std::size_t n) {
        return {Outcome::Inconclusive, std::nullopt, n};
    }
};

// Shared countdown over search-tree nodes; reproducible across machines,
// unlike wall-clock budgets.
class Budget {
public:
    explicit Budget(std::size_t nodes) : remaining_(nodes) {}

    // Consumes one node; false once the budget is gone.
    bool tick() {
        ++used_;
        if (remaining_ == 0) return false;
        --remaining_;
        return true;
    }

    bool exhausted() const { return remaining_ == 0; }
    std::size_t used() const { return used_; }

private:
    std::size_t remaining_;
    std::size_t used_ = 0;
};

// ---- exact longest path -------------------------------------------------

inline constexpr std::size_t kLongestPathCap = 25;

// Exact longest path as a vertex sequence (subset DP for small graphs,
// branch-and-bound above that). Throws std::invalid_argument when the graph
// exceeds `cap` vertices; callers must use a bound or sampling instead.
std::vector<VertexId> longest_path(const Graph& g, std::size_t cap = kLongestPathCap);

// Length (edge count) of a longest path; 0 for edgeless graphs.
int longest_path_length(const Graph& g, std::size_t cap = kLongestPathCap);

// True iff g has a path of `length` edges. Cheaper than a full longest-path
// call when length is small; still exact.
bool has_path_of_length(const Graph& g, int length, std::size_t cap = kLongestPathCap);

// ---- connectivity --------------------------------------------------------

// Exact vertex connectivity (Menger: min vertex cut over non-adjacent pairs).
// Complete graphs give n-1, disconnected graphs 0.
std::size_t vertex_connectivity(const Graph& g);

// Max number of fully vertex-disjoint a-b paths (sets must be disjoint);
// returns the paths themselves, at most `want` of them.
std::vector<std::vector<VertexId>> disjoint_set_paths(const Graph& g, const std::set<VertexId>& a,
                                                      const std::set<VertexId>& b, std::size_t want);

// ---- colored embedding search ---------------------------------------------

using VertexMap = std::map<VertexId, VertexId>;

// Injective color-preserving map that also preserves non-edges (induced).
SearchResult<VertexMap> find_induced_embedding(const ColoredGraph& pattern, const ColoredGraph& host,
                                               std::size_t budget = kDefaultNodeBudget);

// As above but with prescribed assignments (pattern vertex -> host vertex).
SearchResult<VertexMap> find_induced_embedding_anchored(const ColoredGraph& pattern,
                                                        const ColoredGraph& host,
                                                        const VertexMap& anchor,
                                                        std::size_t budget = kDefaultNodeBudget);

// Injective color-preserving subgraph embedding (host may have extra edges).
// Pattern may be disconnected.
SearchResult<VertexMap> find_subgraph_embedding(const ColoredGraph& pattern, const ColoredGraph& host,
                                                std::size_t budget = kDefaultNodeBudget);

// Checks that `map` embeds pattern into host, color-preserving; `induced`
// additionally demands non-edge preservation.
bool check_embedding(const ColoredGraph& pattern, const ColoredGraph& host, const VertexMap& map,
                     bool induced);

// ---- canonical labeling ----------------------------------------------------

inline constexpr std::size_t kCanonicalVertexCap = 30;

// Canonical label: equal byte strings iff color-preserving isomorphic.
// Color refinement plus individualization; exact, so budget-bounded.
SearchResult<std::string> canonical_form(const ColoredGraph& g,
                                         std::size_t budget = kDefaultNodeBudget);

// Convenience wrapper that throws on budget exhaustion.
std::string canonical_form_exact(const ColoredGraph& g, std::size_t budget = kDefaultNodeBudget);

bool colored_isomorphic(const ColoredGraph& a, const ColoredGraph& b,
                        std::size_t budget = kDefaultNodeBudget);

// Vertex orbits under color-preserving automorphisms, via marked canonical
// forms. Sorted by least member.
std::vector<std::vector<VertexId>> vertex_orbits(const ColoredGraph& g,
                                                 std::size_t budget = kDefaultNodeBudget);

}  // namespace minoruniv
