#include "minoruniv/transform.hpp"

#include <stdexcept>

namespace minoruniv {

namespace {

// d' = d * (c+1)^p with overflow guard; palettes stay modest at desk scale.
long long dprime_checked(int c, int d, std::size_t p) {
    long long out = d;
    for (std::size_t i = 0; i < p; ++i) {
        out *= (c + 1);
        if (out > (1 << 24))
            throw std::invalid_argument("pinned transform: descriptor palette too large");
    }
    return out;
}

}  // namespace

int PinnedTransform::d_prime() const {
    return static_cast<int>(dprime_checked(c, d, pin_order.size()));
}

int PinnedTransform::encode(const Descriptor& desc) const {
    if (desc.base_color < 0 || desc.base_color >= d)
        throw std::invalid_argument("descriptor base color out of range");
    long long code = 0;
    for (std::size_t i = pin_order.size(); i-- > 0;) {
        auto it = desc.pin_edges.find(static_cast<int>(i));
        int digit = 0;  // 0 = no edge, 1 + color otherwise
        if (it != desc.pin_edges.end()) {
            if (it->second < 0 || it->second >= c)
                throw std::invalid_argument("descriptor edge color out of range");
            digit = 1 + it->second;
        }
        code = code * (c + 1) + digit;
    }
    return static_cast<int>(code * d + desc.base_color);
}

PinnedTransform::Descriptor PinnedTransform::decode(int color) const {
    if (color < 0 || color >= d_prime())
        throw std::invalid_argument("descriptor code out of range");
    Descriptor desc;
    desc.base_color = color % d;
    long long code = color / d;
    for (std::size_t i = 0; i < pin_order.size(); ++i) {
        int digit = static_cast<int>(code % (c + 1));
        code /= (c + 1);
        if (digit > 0) desc.pin_edges[static_cast<int>(i)] = digit - 1;
    }
    return desc;
}

PinnedTransform make_pinned_transform(const ColoredGraph& host, const std::vector<VertexId>& path) {
    PinnedTransform pt;
    pt.c = host.c;
    pt.d = host.d;
    pt.pin_order = path;
    pt.pin.c = host.c;
    pt.pin.d = host.d;
    for (std::size_t i = 0; i < path.size(); ++i) {
        pt.pin.set_vcolor(path[i], host.vcolor(path[i]));
        if (i + 1 < path.size()) {
            Edge e(path[i], path[i + 1]);
            if (!host.base.has_edge(e))
                throw std::invalid_argument("pin path uses a non-edge of the host");
            pt.pin.set_ecolor(e, host.ecolor(e));
        }
    }
    (void)pt.d_prime();  // size guard
    return pt;
}

ColoredGraph transform_t(const ColoredGraph& h, const PinnedTransform& pt) {
    if (h.c != pt.c)
        throw std::invalid_argument("transform_t: edge palette mismatch");
    std::map<VertexId, int> pin_pos;
    for (std::size_t i = 0; i < pt.pin_order.size(); ++i)
        pin_pos[pt.pin_order[i]] = static_cast<int>(i);

    ColoredGraph out;
    out.c = pt.c;
    out.d = pt.d_prime();
    for (const auto& [v, _] : h.base.adjacency()) {
        if (pin_pos.count(v)) continue;
        int base = h.vcolor(v);
        if (base < 0 || base >= pt.d)
            throw std::invalid_argument("transform_t: vertex color outside the declared palette");
        PinnedTransform::Descriptor desc;
        desc.base_color = base;
        for (VertexId w : h.base.neighbors(v)) {
            auto it = pin_pos.find(w);
            if (it != pin_pos.end()) desc.pin_edges[it->second] = h.ecolor(Edge(v, w));
        }
        out.set_vcolor(v, pt.encode(desc));
    }
    for (const Edge& e : h.base.edges()) {
        if (pin_pos.count(e.u) || pin_pos.count(e.v)) continue;
        out.set_ecolor(e, h.ecolor(e));
    }
    return out;
}

ColoredGraph transform_t_inv(const ColoredGraph& h_prime, const PinnedTransform& pt) {
    for (VertexId v : pt.pin_order)
        if (h_prime.base.has_vertex(v))
            throw std::invalid_argument("transform_t_inv: input shares vertex " + std::to_string(v) +
                                        " with the pin path");
    if (h_prime.c != pt.c) throw std::invalid_argument("transform_t_inv: edge palette mismatch");

    ColoredGraph out = pt.pin;
    out.d = pt.d;
    out.c = pt.c;
    for (const auto& [v, _] : h_prime.base.adjacency()) {
        PinnedTransform::Descriptor desc = pt.decode(h_prime.vcolor(v));
        out.set_vcolor(v, desc.base_color);
        for (const auto& [pos, color] : desc.pin_edges)
            out.set_ecolor(Edge(v, pt.pin_order[static_cast<std::size_t>(pos)]), color);
    }
    for (const Edge& e : h_prime.base.edges()) out.set_ecolor(e, h_prime.ecolor(e));
    return out;
}

}  // namespace minoruniv
