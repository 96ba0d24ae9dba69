#include "khop/routing_table.hpp"

namespace khop {

bool RoutingTable::contains(NodeId id) const {
    for (const Entry& e : entries_) {
        if (e.id == id) return true;
    }
    return false;
}

RoutingTable::MergeOutcome RoutingTable::update(NodeId id, Locator loc, Slot now, Rng& rng) {
    if (id == owner_) return MergeOutcome::SkippedSelf;
    for (Entry& e : entries_) {
        if (e.id == id) {
            e.loc = loc;
            e.last_seen = now;
            return MergeOutcome::Updated;
        }
    }
    if (entries_.size() < capacity_) {
        entries_.push_back({id, loc, now});
        return MergeOutcome::Inserted;
    }
    if (capacity_ == 0) return MergeOutcome::SkippedSelf;
    // Over capacity: evict a uniformly random old entry, then append.
    size_t victim = static_cast<size_t>(rng.below(entries_.size()));
    entries_.erase(entries_.begin() + static_cast<ptrdiff_t>(victim));
    entries_.push_back({id, loc, now});
    return MergeOutcome::Evicted;
}

bool RoutingTable::remove(NodeId id) {
    for (size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i].id == id) {
            entries_.erase(entries_.begin() + static_cast<ptrdiff_t>(i));
            return true;
        }
    }
    return false;
}

std::vector<MemberEntry> RoutingTable::as_member_entries() const {
    std::vector<MemberEntry> out;
    out.reserve(entries_.size());
    for (const Entry& e : entries_) out.push_back({e.id, e.loc});
    return out;
}

} // namespace khop
