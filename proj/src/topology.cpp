#include "khop/topology.hpp"

#include <cmath>
#include <deque>
#include <stdexcept>

namespace khop {

std::string to_string(Placement p) {
    switch (p) {
        case Placement::Grid: return "grid";
        case Placement::UniformRandom: return "uniform-random";
        case Placement::Line: return "line";
    }
    return "?";
}

static void build_adjacency(Topology& topo) {
    const uint32_t n = topo.size();
    topo.adjacency.assign(n, {});
    for (NodeId a = 0; a < n; ++a) {
        for (NodeId b = a + 1; b < n; ++b) {
            if (distance(topo.positions[a], topo.positions[b]) <= topo.radio_range) {
                topo.adjacency[a].push_back(b);
                topo.adjacency[b].push_back(a);
            }
        }
    }
}

Topology build_topology(const TopologySpec& spec, Rng& rng) {
    if (spec.node_count < 2) {
        throw std::invalid_argument("topology: node_count must be >= 2");
    }
    Topology topo;
    topo.placement = spec.placement;
    const uint32_t n = spec.node_count;
    topo.positions.reserve(n);

    switch (spec.placement) {
        case Placement::Line: {
            const double spacing = 1.0 / static_cast<double>(n - 1);
            for (uint32_t i = 0; i < n; ++i) {
                topo.positions.push_back({static_cast<double>(i) * spacing, 0.5});
            }
            // Default range covers the next node but not the one after it.
            topo.radio_range = spec.radio_range > 0.0 ? spec.radio_range : 1.5 * spacing;
            break;
        }
        case Placement::Grid: {
            const uint32_t side = static_cast<uint32_t>(std::ceil(std::sqrt(static_cast<double>(n))));
            const double step = side > 1 ? 1.0 / static_cast<double>(side - 1) : 0.0;
            for (uint32_t i = 0; i < n; ++i) {
                topo.positions.push_back(
                    {static_cast<double>(i % side) * step, static_cast<double>(i / side) * step});
            }
            topo.radio_range = spec.radio_range > 0.0 ? spec.radio_range : 1.5 * step;
            break;
        }
        case Placement::UniformRandom: {
            for (uint32_t i = 0; i < n; ++i) {
                topo.positions.push_back({rng.uniform(), rng.uniform()});
            }
            topo.radio_range = spec.radio_range > 0.0 ? spec.radio_range : 0.25;
            break;
        }
    }
    if (topo.radio_range <= 0.0) {
        throw std::invalid_argument("topology: radio_range must be > 0");
    }
    build_adjacency(topo);
    return topo;
}

Topology make_topology(std::vector<Locator> positions, double radio_range) {
    if (positions.size() < 2) throw std::invalid_argument("topology: node_count must be >= 2");
    if (radio_range <= 0.0) throw std::invalid_argument("topology: radio_range must be > 0");
    Topology topo;
    topo.positions = std::move(positions);
    topo.radio_range = radio_range;
    build_adjacency(topo);
    return topo;
}

uint32_t radio_diameter(const Topology& topo) {
    const uint32_t n = topo.size();
    uint32_t best = 0;
    std::vector<int64_t> dist(n);
    for (NodeId src = 0; src < n; ++src) {
        std::fill(dist.begin(), dist.end(), -1);
        std::deque<NodeId> q{src};
        dist[src] = 0;
        while (!q.empty()) {
            NodeId v = q.front();
            q.pop_front();
            for (NodeId w : topo.adjacency[v]) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    if (dist[w] > static_cast<int64_t>(best)) best = static_cast<uint32_t>(dist[w]);
                    q.push_back(w);
                }
            }
        }
    }
    return best;
}

} // namespace khop
