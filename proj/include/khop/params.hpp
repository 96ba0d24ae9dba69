#pragma once

#include <cstdint>
#include <set>

#include "khop/types.hpp"

namespace khop {

// Battery model. Thresholds follow the two-band rule: below theta_refuse a
// node does not participate at all, in [theta_refuse, theta_delegate) it
// hands data off to a neighbour instead of carrying it further.
struct EnergyParams {
    double initial = 10000.0;
    double tx_cost = 2.0;
    double rx_cost = 1.0;
    double theta_refuse = 10.0;
    double theta_delegate = 100.0;
};

// Fault injection for one run. Corrupt nodes receive but never forward or
// acknowledge; crashed nodes are unreachable.
struct FaultSpec {
    double link_loss_rate = 0.0;
    std::set<NodeId> corrupt_nodes;
    std::set<NodeId> crashed_nodes;

    bool is_null() const {
        return link_loss_rate == 0.0 && corrupt_nodes.empty() && crashed_nodes.empty();
    }
};

struct ProtocolParams {
    uint32_t k = 4;               // reliability factor: hops between delayed acks
    uint32_t table_capacity = 8;  // routing table size I
    double timer_coeff = 3.0;     // ack-wait budget t0 = ceil(timer_coeff * K) slots
    double timer_backoff = 1.5;   // budget multiplier after a missed ack
    uint32_t timer_max = 600;     // cap for the enlarged budget, in slots
    bool localization = true;     // halve-K probing of a silent candidate
    bool adaptive_k = false;      // grow/shrink K from ack outcomes
    uint32_t k_max = 8;           // ceiling for adaptive K
    bool shortcut = true;         // one-hop direct send to a learned, in-range node
    uint32_t hop_cap = 0;         // per-message hop budget; 0 = 4 * radio diameter
    uint32_t refresh_period = 0;  // membership gossip period in slots; 0 = off
    uint32_t member_timeout = 5;  // slots to wait for a membership response
    uint32_t payload_bytes = 48;  // data payload size
    uint32_t seen_capacity = 256; // per-node duplicate-suppression window
};

} // namespace khop
