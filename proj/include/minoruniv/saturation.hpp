#pragma once

#include <cstdint>
#include <memory>
#include <optional>

#include "minoruniv/transform.hpp"

namespace minoruniv {

// Multiplicity of a component: a finite count or omega.
struct Mult {
    bool omega = false;
    std::uint32_t count = 0;

    static Mult finite(std::uint32_t n) { return {false, n}; }
    static Mult inf() { return {true, 0}; }

    std::uint32_t unfolded(std::uint32_t unfold) const { return omega ? unfold : count; }
    std::string str() const { return omega ? "omega" : std::to_string(count); }
    bool operator==(const Mult&) const = default;
};

// Finite presentation of a countable graph all of whose components are
// finite: connected colored components with multiplicities, merged by
// isomorphism type (anything plus omega is omega).
struct OmegaGraph {
    std::vector<std::pair<ColoredGraph, Mult>> components;

    // Merges by canonical form; the stored representative is the first seen.
    void add(const ColoredGraph& comp, Mult m);

    // Disjoint union with omega multiplicities unfolded `unfold` times.
    // Vertex ids are renumbered deterministically from id_base.
    ColoredGraph expand(std::uint32_t unfold, VertexId id_base = 0) const;

    std::string canonical_key() const;
};

// A finitely presented member of a universal class: either a finite colored
// graph outright, or a pinned assembly — the pin path plus attached pieces
// with multiplicities, rebuilt through the inverse transform on expansion.
struct Saturation {
    bool pinned = false;
    ColoredGraph finite_member;  // when !pinned
    PinnedTransform pt;          // when pinned
    OmegaGraph pieces;           // (c,d')-colored attachments, when pinned

    // Finite truncation of the presented graph; omega pieces unfold `unfold`
    // times. Deterministic labels.
    ColoredGraph expand(std::uint32_t unfold) const;

    // The whole presentation is finite iff no omega multiplicity appears.
    bool is_finite() const;

    std::string canonical_key() const;
};

// Forbidden-substructure set: an explicit list, or the profile complement of
// a base graph (all graphs on <= k vertices that are not subgraphs of it),
// optionally with explicit extras. Candidates are tested for freeness.
struct ForbiddenSet {
    std::vector<ColoredGraph> explicit_graphs;
    std::optional<ColoredGraph> profile_base;
    int k = 0;  // max pattern size; for explicit sets, max member size

    static ForbiddenSet from_list(std::vector<ColoredGraph> list);
    static ForbiddenSet profile_complement(const ColoredGraph& base, int k);

    int max_size() const { return k; }

    // True iff no member of the set embeds into `candidate` as a colored
    // subgraph. For the profile form: every <= k-vertex induced part of the
    // candidate must embed into the base.
    bool is_free(const ColoredGraph& candidate) const;

    // True iff every (c,d)-coloring of the n-edge path belongs to the set.
    bool contains_all_path_colorings(int n, int c, int d) const;
};

struct SaturationLimits {
    std::size_t search_budget = kDefaultNodeBudget;
    int max_guest_vertices = 24;   // saturate refuses larger inputs
    int max_catalog_guest = 4;     // build_catalog enumerates guests up to this size
    std::size_t max_catalog_graphs = 5000;
};

// Raised when saturation or catalog construction would exceed its limits;
// names the blowup point instead of silently shrinking the result.
struct CatalogLimitError : std::runtime_error {
    explicit CatalogLimitError(const std::string& what) : std::runtime_error(what) {}
};

// The saturation operator: extends a connected forbidden-free graph g to a
// finitely presented universal host containing it induced. `forbidden` must
// contain every coloring of P_n. Components of the transformed graph are
// saturated recursively against their subgraph profiles; piece types occurring
// at least max_size times get omega multiplicity.
Saturation saturate(const ColoredGraph& g, const ForbiddenSet& forbidden, int n,
                    const SaturationLimits& limits = {});

Saturation saturate(const ColoredGraph& g, const std::vector<ColoredGraph>& forbidden, int n,
                    const SaturationLimits& limits = {});

// Finite catalog: saturations of every connected forbidden-free (c,d)-graph
// with at most limits.max_catalog_guest vertices, deduplicated by
// presentation. Memoized on the canonical form of (forbidden, c, d, n).
std::vector<Saturation> build_catalog(const std::vector<ColoredGraph>& forbidden, int c, int d,
                                      int n, const SaturationLimits& limits = {});

// All (c,d)-colorings of the path with n edges, up to colored isomorphism.
std::vector<ColoredGraph> all_path_colorings(int n, int c, int d);

// Connected (c,d)-graphs with at most max_vertices vertices, up to colored
// isomorphism, that avoid all members of `forbidden` as subgraphs.
std::vector<ColoredGraph> enumerate_connected_free_graphs(const std::vector<ColoredGraph>& forbidden,
                                                          int c, int d, int max_vertices,
                                                          std::size_t max_results);

}  // namespace minoruniv
