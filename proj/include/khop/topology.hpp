#pragma once

#include <string>
#include <vector>

#include "khop/rng.hpp"
#include "khop/types.hpp"

namespace khop {

enum class Placement { Grid, UniformRandom, Line };

std::string to_string(Placement p);

struct TopologySpec {
    uint32_t node_count = 0;
    Placement placement = Placement::UniformRandom;
    // <= 0 means "use the placement default". Line placement defaults to
    // 1.5x the node spacing, which makes each node hear exactly its
    // predecessor and successor.
    double radio_range = 0.0;
};

// Static sensor field: positions plus the symmetric radio-neighbour relation.
struct Topology {
    std::vector<Locator> positions;
    double radio_range = 0.0;
    Placement placement = Placement::UniformRandom;
    std::vector<std::vector<NodeId>> adjacency;

    uint32_t size() const { return static_cast<uint32_t>(positions.size()); }
    bool in_range(NodeId a, NodeId b) const {
        return distance(positions[a], positions[b]) <= radio_range;
    }
    const std::vector<NodeId>& neighbors(NodeId n) const { return adjacency[n]; }
};

// Builds a topology from the spec. Identical (spec, rng state) gives an
// identical field. Throws std::invalid_argument on node_count < 2 or a
// non-positive resolved radio range.
Topology build_topology(const TopologySpec& spec, Rng& rng);

// Explicit placement, used by canned scenarios and tests.
Topology make_topology(std::vector<Locator> positions, double radio_range);

// Longest shortest-path hop distance over the radio graph; computed per
// connected component, 0 for an edgeless graph.
uint32_t radio_diameter(const Topology& topo);

} // namespace khop
