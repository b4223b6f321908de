#pragma once

#include "minoruniv/families.hpp"
#include "minoruniv/minor.hpp"
#include "minoruniv/saturation.hpp"
#include "minoruniv/tutte.hpp"

namespace minoruniv {

enum class HostMode { CycleHost, WheelHost };
enum class HostBackend { Catalog, Adaptive };

// In wheel hosts edge color 0 is real and 1 is virtual; the universal graph
// is the color-0 restriction of the materialized union.
inline constexpr int kRealEdge = 0;
inline constexpr int kVirtualEdge = 1;

struct HostPiece {
    int id = 0;
    int tag_n = 0;  // the piece is {X, P_tag}-minor-free by construction
    ColoredGraph graph;
    enum class Glue { Root, AtVertex, AtEdge } glue = Glue::Root;
    std::vector<VertexId> glue_at;  // the host vertices shared with earlier material
    int parent = -1;                // least earlier piece containing the glue set
};

struct EmbeddingCertificate {
    Graph guest;
    Graph host_truncation;  // color-0 restriction at certification time
    VertexMap map;
    bool induced = true;
};

std::string certificate_to_json(const EmbeddingCertificate& cert);
EmbeddingCertificate certificate_from_json(const std::string& text);

struct HostVerifyReport {
    bool ok = false;
    std::vector<std::string> violations;
    std::size_t pieces_checked = 0;
    bool truncation_free = false;  // direct oracle check on the truncation
    std::string summary() const;
};

struct HostRejection : std::runtime_error {
    MinorModel violating_model;
    explicit HostRejection(const std::string& what, MinorModel model)
        : std::runtime_error(what), violating_model(std::move(model)) {}
};

// Lazily grown universal host: a gluing tree of pieces, each a finite
// {X, P_n}-minor-free graph attached to earlier material at one vertex
// (cycle hosts) or at one vertex or one color-matched edge (wheel hosts).
class HostDescription {
public:
    // Fresh host: a single root vertex. Supported forbidden families:
    // C_n, C_{n,m} (cycle mode) and W_k (wheel mode).
    static HostDescription build(const FamilySpec& forbidden,
                                 HostBackend backend = HostBackend::Adaptive);

    // Induced embedding of a connected guest from the class. Guests outside
    // the class are rejected with the violating minor model (HostRejection).
    // Cycle hosts embed block by block; wheel hosts embed the torsos of the
    // Tutte decomposition, gluing at vertices or color-matched edges.
    EmbeddingCertificate embed(const Graph& guest, std::size_t budget = kDefaultNodeBudget);

    // Union of all pieces materialized so far, padded deterministically with
    // fresh copies of known piece types up to size_budget vertices. Wheel
    // hosts return the color-0 restriction unless expose_star is set.
    Graph materialize(std::size_t size_budget = 0, bool expose_star = false);

    // The union as a colored graph (wheel hosts keep both edge colors).
    ColoredGraph star_union() const;

    HostVerifyReport verify(std::size_t size_budget = 0, std::size_t budget = kDefaultNodeBudget);

    std::string to_json() const;
    static HostDescription from_json(const std::string& text);

    HostMode mode() const { return mode_; }
    HostBackend backend() const { return backend_; }
    const FamilySpec& forbidden() const { return forbidden_; }
    const std::vector<HostPiece>& pieces() const { return pieces_; }

private:
    HostDescription() = default;

    void check_membership(const Graph& guest, std::size_t budget) const;
    int add_piece(const ColoredGraph& graph, int tag, HostPiece::Glue glue,
                  const std::vector<VertexId>& at);
    int parent_for(const std::vector<VertexId>& glue_set) const;

    // Returns the map of one block/torso into a new or reused piece.
    VertexMap place_fragment(const ColoredGraph& fragment, int tag,
                             const std::vector<std::pair<VertexId, VertexId>>& anchor,
                             std::set<int>& used_pieces, std::size_t budget);

    ColoredGraph catalog_expansion(const ColoredGraph& fragment, int tag, std::size_t budget);

    Graph pattern_graph() const { return generate(forbidden_); }

    HostMode mode_ = HostMode::CycleHost;
    HostBackend backend_ = HostBackend::Adaptive;
    FamilySpec forbidden_ = FamilySpec::cycle(3);
    std::vector<HostPiece> pieces_;
    VertexId next_id_ = 0;
};

}  // namespace minoruniv
