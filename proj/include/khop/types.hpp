#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

namespace khop {

using NodeId = uint32_t;
using ChunkId = uint32_t;
using Slot = uint64_t;

constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

// Unitless position in the unit square.
struct Locator {
    double x = 0.0;
    double y = 0.0;
};

inline double distance(const Locator& a, const Locator& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

} // namespace khop
