#pragma once

#include <map>

#include "minoruniv/colored_graph.hpp"

namespace minoruniv {

// Pin-path transform: removes a fixed colored path P and re-encodes, for each
// remaining vertex, (its color, its neighbors on P, the colors of those
// edges) into a single vertex color in [0, d'), d' = d * (c+1)^|P|. The
// encoding is a bijection over all realizable descriptors, so the transform
// inverts uniquely.
struct PinnedTransform {
    ColoredGraph pin;                  // the path, with its (c,d) colors
    std::vector<VertexId> pin_order;   // path vertex sequence
    int c = 1;
    int d = 1;

    int d_prime() const;

    struct Descriptor {
        int base_color = 0;
        std::map<int, int> pin_edges;  // pin position -> edge color
    };

    int encode(const Descriptor& desc) const;
    Descriptor decode(int color) const;
};

// Builds the transform from a host graph and one of its paths (colors are
// inherited from the host).
PinnedTransform make_pinned_transform(const ColoredGraph& host, const std::vector<VertexId>& path);

// h minus the pin vertices, edge colors kept, vertex colors re-encoded.
// h need not contain the pin vertices. Rejects colors outside the palette.
ColoredGraph transform_t(const ColoredGraph& h, const PinnedTransform& pt);

// Unique reconstruction: the pin path plus h' decoded; requires h' disjoint
// from the pin and vertex colors in [0, d').
ColoredGraph transform_t_inv(const ColoredGraph& h_prime, const PinnedTransform& pt);

}  // namespace minoruniv
