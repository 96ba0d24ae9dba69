#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "khop/types.hpp"

namespace khop {

enum class FailReason : uint8_t { None, RoutingExhausted, EnergyRefusal, MaxSlots };

std::string to_string(FailReason r);

struct ChunkOutcome {
    NodeId origin = kNoNode;
    NodeId final_dest = kNoNode;
    Slot injected_slot = 0;
    bool delivered = false;
    Slot delivered_slot = 0;
    FailReason failure = FailReason::None;

    Slot elapsed_slots() const { return delivered ? delivered_slot - injected_slot : 0; }
};

// Per-run result sheet. Message counts and bytes_total cover attempts that
// actually hit the air (delivered or lost); refused attempts appear in the
// transmission log but radiate nothing.
struct RunReport {
    std::map<ChunkId, ChunkOutcome> chunks;
    uint64_t data_msgs = 0;
    uint64_t ack_msgs = 0;
    uint64_t member_msgs = 0;
    uint64_t bytes_total = 0;
    uint64_t retries = 0;
    uint64_t removed_members = 0;
    Slot end_slot = 0;
    uint64_t log_digest = 0;

    uint64_t delivered_count() const {
        uint64_t n = 0;
        for (const auto& [id, c] : chunks) n += c.delivered ? 1 : 0;
        return n;
    }
    double delivery_rate() const {
        return chunks.empty() ? 0.0
                              : static_cast<double>(delivered_count()) / static_cast<double>(chunks.size());
    }
};

inline std::string to_string(FailReason r) {
    switch (r) {
        case FailReason::None: return "none";
        case FailReason::RoutingExhausted: return "routing-exhausted";
        case FailReason::EnergyRefusal: return "energy-refusal";
        case FailReason::MaxSlots: return "max-slots";
    }
    return "?";
}

} // namespace khop
