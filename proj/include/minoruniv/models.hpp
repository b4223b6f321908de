#pragma once

#include "minoruniv/minor.hpp"
#include "minoruniv/saturation.hpp"

namespace minoruniv {

struct ModelEnumLimits {
    std::size_t max_models = 200000;
    std::size_t max_assemblies = 5000000;
};

// The class of all models of x that avoid the n-edge path as a subgraph and
// whose branch sets induce trees with fewer than |x| leaves, up to
// isomorphism. Exhaustive; throws CatalogLimitError past the limits.
std::vector<Graph> enumerate_forbidden_models(const Graph& x, int n,
                                              const ModelEnumLimits& limits = {});

// Trees with fewer than `max_leaves` leaves and no path of `path_len` edges,
// up to isomorphism (the building blocks of the model enumeration).
std::vector<Graph> bounded_leaf_trees(int max_leaves, int path_len, std::size_t max_results);

struct ClassEquivalence {
    bool minor_side = false;     // g is {x, P_n}-minor-free
    bool subgraph_side = false;  // g is (models + P_n)-subgraph-free
    bool equal = false;
};

// Both memberships computed independently: the minor side through the minor
// engine, the subgraph side through the explicit model catalog. The flag is
// expected to always be true.
SearchResult<ClassEquivalence> check_class_equivalence(const Graph& g, const Graph& x, int n,
                                                       std::size_t budget = kDefaultNodeBudget);

}  // namespace minoruniv
