#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "khop/types.hpp"

namespace khop {

// One unit of application data. chunk_id is the dedup key and stays stable
// across retries and source handoffs.
struct DataChunk {
    ChunkId chunk_id = 0;
    NodeId origin = kNoNode;
    NodeId final_dest = kNoNode;
    uint32_t payload_size = 48;
};

enum class MsgKind : uint8_t { Data, Ack, MemberReq, MemberResp };

// What an acknowledgement means to its receiver:
//   Handoff        the responder took over as the chunk's source
//   Delivery       the responder is the final destination
//   EnergyReport   a weak node delegated the chunk and reports its level
//   DelegateConfirm the delegate confirms back to the weak node
enum class AckRole : uint8_t { Handoff, Delivery, EnergyReport, DelegateConfirm };

std::string to_string(MsgKind k);

struct MemberEntry {
    NodeId id = kNoNode;
    Locator loc;
};

// Wire sizes are fixed by convention so byte costs are reproducible:
// 16-byte header for everything, plus payload for DATA and 8 bytes per
// carried member entry. The digest and bookkeeping fields below are
// modelling metadata and do not count toward the wire size.
struct Message {
    MsgKind kind = MsgKind::Data;

    // Data / Ack
    DataChunk chunk;
    NodeId current_source = kNoNode; // the node awaiting the delayed ack

    // Data only
    uint32_t k_remaining = 0;
    uint32_t hop_count = 0;
    uint32_t attempt = 0;                 // per-source retransmission counter
    std::optional<NodeId> delegator;      // set when a weak node forced K=1
    std::vector<NodeId> visited;          // prior sources and dead candidates

    // Ack only
    AckRole ack_role = AckRole::Handoff;
    NodeId responder = kNoNode;
    Locator responder_locator;
    std::optional<double> energy_report;

    // MemberReq / MemberResp
    bool join_request = false;
    std::vector<MemberEntry> entries;

    uint32_t size_bytes() const {
        switch (kind) {
            case MsgKind::Data: return 16 + chunk.payload_size;
            case MsgKind::Ack: return 16;
            case MsgKind::MemberReq: return 16;
            case MsgKind::MemberResp: return 16 + 8 * static_cast<uint32_t>(entries.size());
        }
        return 16;
    }
};

inline std::string to_string(MsgKind k) {
    switch (k) {
        case MsgKind::Data: return "DATA";
        case MsgKind::Ack: return "ACK";
        case MsgKind::MemberReq: return "MEMBER_REQ";
        case MsgKind::MemberResp: return "MEMBER_RESP";
    }
    return "?";
}

} // namespace khop
