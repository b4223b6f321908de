#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "minoruniv/families.hpp"
#include "minoruniv/minor.hpp"

namespace minoruniv {

// Raised when a lemma's preconditions hold but exhaustive search cannot find
// the promised structure. Tests require zero of these; one would mean either
// a search bug or a serious finding.
struct CounterexampleCandidate : std::runtime_error {
    explicit CounterexampleCandidate(const std::string& what) : std::runtime_error(what) {}
};

struct ExtractionCertificate {
    FamilySpec target;
    MinorModel witness;
    std::string route;  // which case of the argument produced it
};

// Long cycles in 2-connected graphs with long paths: demands a path of length
// n*n (measured exactly), then returns a cycle of length >= n.
std::vector<VertexId> find_long_cycle(const Graph& g, int n);

// Extraction of the two-cycles pattern: finds cycles D1 (>= 2n) and
// D2 (>= |D1|*m) and follows the three-way case split on |D1 & D2|; the
// witness is returned as a verified minor model built from a subdivision.
ExtractionCertificate find_cycle_pair_minor(const Graph& g, int n, int m);

// Two fully disjoint a-b paths (Menger at desk scale).
std::pair<std::vector<VertexId>, std::vector<VertexId>> two_disjoint_connecting_paths(
    const Graph& g, const std::set<VertexId>& a, const std::set<VertexId>& b);

// Certified wheel-minor search in a 3-connected host: the hub branch set is
// grown first (degree ordering), rim sets after.
SearchResult<ExtractionCertificate> find_wheel_minor(const Graph& g, int k,
                                                     std::size_t budget = kDefaultNodeBudget);

struct ReductionFactReport {
    // one entry per deleted-vertex symmetry class: vertex representative + outcome
    struct FactDetail {
        std::string host;
        std::vector<std::pair<VertexId, Outcome>> per_vertex;
        Outcome overall = Outcome::None;
        bool holds() const { return overall == Outcome::Found; }
    };
    FactDetail double_wheel;      // W_k minor of D_{k+1} - v
    FactDetail circular_ladder;   // W_k minor of O_{k+1} - v
    FactDetail moebius_ladder;    // W_k minor of M_{k+1} - v
    FactDetail bipartite;         // K_{3,k} minor of K_{4,k+1} - v
    bool all_hold() const {
        return double_wheel.holds() && circular_ladder.holds() && moebius_ladder.holds() &&
               bipartite.holds();
    }
};

// Verifies the four cone-reduction containments for every deleted vertex up
// to symmetry class (orbits via marked canonical forms).
ReductionFactReport check_reduction_facts(int k, std::size_t budget = kDefaultNodeBudget,
                                          int max_k = 6);

// Composes supplied w(.) and p(.) tables with the ell recurrence: ell_{w(k+1)}(p(k+1)).
std::uint64_t f_bound(int k, const std::map<int, std::uint64_t>& w_fn,
                      const std::map<int, std::uint64_t>& p_fn);

// Certificate that W_k is a minor of the R_2 truncation with m ray vertices.
// On exact failure, reports the smallest sufficient m found nearby.
ExtractionCertificate wheel_in_r2_truncation(int k, int m,
                                             std::size_t budget = kDefaultNodeBudget);

}  // namespace minoruniv
