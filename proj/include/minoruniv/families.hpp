#pragma once

#include <optional>
#include <string>

#include "minoruniv/graph.hpp"

namespace minoruniv {

enum class Family {
    Path,             // P_n: path with n edges
    Cycle,            // C_n
    TwoCycles,        // C_{n,m}: cycles of lengths n and m sharing exactly one edge
    Wheel,            // W_k: k-cycle plus a hub
    DoubleWheel,      // D_k: k-cycle plus two non-adjacent apexes
    Ladder,           // L_k
    CircularLadder,   // O_k
    MoebiusLadder,    // M_k
    CompleteBipartite,// K_{a,b}
    RayTruncation,    // R_2 truncated to m ray vertices (two non-adjacent apexes over a path)
    Cone,             // apex over an arbitrary base graph
};

struct FamilySpec {
    Family family;
    int a = 0;  // primary parameter (n, k, or first side)
    int b = 0;  // secondary parameter (m or second side)
    Graph cone_base;  // only for Family::Cone

    static FamilySpec path(int n) { return {Family::Path, n, 0, {}}; }
    static FamilySpec cycle(int n) { return {Family::Cycle, n, 0, {}}; }
    static FamilySpec two_cycles(int n, int m) { return {Family::TwoCycles, n, m, {}}; }
    static FamilySpec wheel(int k) { return {Family::Wheel, k, 0, {}}; }
    static FamilySpec double_wheel(int k) { return {Family::DoubleWheel, k, 0, {}}; }
    static FamilySpec ladder(int k) { return {Family::Ladder, k, 0, {}}; }
    static FamilySpec circular_ladder(int k) { return {Family::CircularLadder, k, 0, {}}; }
    static FamilySpec moebius_ladder(int k) { return {Family::MoebiusLadder, k, 0, {}}; }
    static FamilySpec complete_bipartite(int a, int b) { return {Family::CompleteBipartite, a, b, {}}; }
    static FamilySpec ray_truncation(int m) { return {Family::RayTruncation, m, 0, {}}; }
    static FamilySpec cone_over(Graph base) { return {Family::Cone, 0, 0, std::move(base)}; }

    std::string name() const;
};

// Deterministic generator with canonical vertex labels 0..n-1.
// Throws std::invalid_argument with a range diagnostic for out-of-range parameters.
Graph generate(const FamilySpec& spec);

// G plus one fresh apex adjacent to every original vertex.
Graph cone(const Graph& g);

// Parses compact CLI names: "P7", "C5", "C3,4", "W5", "D5", "L4", "O5", "M5",
// "K3,4", "R6". Returns nullopt if unrecognized.
std::optional<FamilySpec> parse_family(const std::string& text);

}  // namespace minoruniv
