#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <unordered_set>

#include "khop/message.hpp"
#include "khop/routing_table.hpp"
#include "khop/types.hpp"

namespace khop {

// FIFO-evicting membership set, used for duplicate suppression windows.
class BoundedSeen {
  public:
    explicit BoundedSeen(uint32_t cap = 256) : cap_(cap) {}

    bool contains(uint64_t key) const { return set_.count(key) > 0; }

    void insert(uint64_t key) {
        if (!set_.insert(key).second) return;
        fifo_.push_back(key);
        if (fifo_.size() > cap_) {
            set_.erase(fifo_.front());
            fifo_.pop_front();
        }
    }

  private:
    uint32_t cap_;
    std::unordered_set<uint64_t> set_;
    std::deque<uint64_t> fifo_;
};

// Source-side routing state for one cached chunk: which candidate is being
// waited on, in which recovery phase, and who must not be tried again.
struct PendingRoute {
    enum class Phase : uint8_t { Initial, Retry, Probe };

    DataChunk chunk;
    NodeId dest = kNoNode;
    uint32_t route_k = 1;   // K this custody was reset with
    Phase phase = Phase::Initial;
    uint32_t probe_k = 0;   // halving schedule during localization
    NodeId candidate = kNoNode;
    bool candidate_in_table = false;
    bool shortcut_considered = false;
    std::set<NodeId> tried; // failed candidates, prior sources, weak nodes
    double timer_budget = 0.0;
    Slot deadline = 0;
    uint64_t timer_gen = 0;
};

struct NodeState {
    NodeId id = kNoNode;
    Locator loc;
    double energy = 0.0;
    bool crashed = false;
    bool corrupt = false;

    RoutingTable table;
    std::map<ChunkId, DataChunk> cache;
    std::map<ChunkId, PendingRoute> pending;

    BoundedSeen seen{256};           // (chunk, source, attempt) forwarding dedup
    BoundedSeen sourced{256};        // chunks this node held custody of
    BoundedSeen delivered_seen{256}; // destination-side dedup (re-acks)

    std::map<NodeId, Locator> learned;   // locators harvested from acks
    std::map<NodeId, NodeId> last_acker; // destination -> latest acking node

    uint32_t k_adaptive = 1;
    uint32_t next_attempt = 1;

    // One membership probe in flight at a time.
    std::optional<NodeId> member_probe;
    bool member_is_join = false;
    uint64_t member_timer_gen = 0;

    bool alive() const { return !crashed; }
};

} // namespace khop
