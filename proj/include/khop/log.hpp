#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "khop/message.hpp"
#include "khop/types.hpp"

namespace khop {

enum class TxOutcome : uint8_t { Delivered, Lost, Refused, Collided };

std::string to_string(TxOutcome o);

// One transmission attempt. k_remaining is 0 for non-DATA rows and chunk_id
// is 0 for membership traffic (chunk ids start at 1).
struct TxRecord {
    Slot slot = 0;
    MsgKind kind = MsgKind::Data;
    NodeId from = kNoNode;
    NodeId to = kNoNode;
    ChunkId chunk_id = 0;
    uint32_t k_remaining = 0;
    uint32_t bytes = 0;
    TxOutcome outcome = TxOutcome::Delivered;
};

struct TransmissionLog {
    std::vector<TxRecord> records;

    void clear() { records.clear(); }
    size_t size() const { return records.size(); }

    // CSV, one line per attempt: slot,kind,from,to,chunk_id,k_remaining,bytes,outcome
    std::string to_csv() const;
    void write_csv(const std::string& path) const;

    // FNV-1a over the CSV text; used by determinism checks.
    uint64_t digest() const;
};

inline std::string to_string(TxOutcome o) {
    switch (o) {
        case TxOutcome::Delivered: return "delivered";
        case TxOutcome::Lost: return "lost";
        case TxOutcome::Refused: return "refused";
        case TxOutcome::Collided: return "collided";
    }
    return "?";
}

} // namespace khop
