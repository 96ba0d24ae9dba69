#pragma once

#include <cstdint>
#include <vector>

#include "khop/message.hpp"
#include "khop/rng.hpp"
#include "khop/types.hpp"

namespace khop {

// Bounded peer list T_p: at most `capacity` entries, no duplicates, and the
// owner never lists itself as a forwarding candidate. Entry order is
// insertion order; source-side routing walks it front to back.
class RoutingTable {
  public:
    struct Entry {
        NodeId id = kNoNode;
        Locator loc;
        Slot last_seen = 0;
    };

    RoutingTable() = default;
    RoutingTable(NodeId owner, uint32_t capacity) : owner_(owner), capacity_(capacity) {}

    NodeId owner() const { return owner_; }
    uint32_t capacity() const { return capacity_; }
    size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    const std::vector<Entry>& entries() const { return entries_; }

    bool contains(NodeId id) const;

    enum class MergeOutcome { Inserted, Updated, Evicted, SkippedSelf };

    // Insert or refresh one entry. When the table is full the victim is a
    // uniformly random pre-existing entry.
    MergeOutcome update(NodeId id, Locator loc, Slot now, Rng& rng);

    // Idempotent removal; returns true if the entry was present.
    bool remove(NodeId id);

    std::vector<MemberEntry> as_member_entries() const;

  private:
    NodeId owner_ = kNoNode;
    uint32_t capacity_ = 0;
    std::vector<Entry> entries_;
};

} // namespace khop
