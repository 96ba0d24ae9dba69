#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "khop/params.hpp"
#include "khop/topology.hpp"
#include "khop/types.hpp"

namespace khop {

// How the initial routing tables come to exist. Chain links node i to i+1
// only (the N-hop pipeline experiments); RadioSample draws up to I radio
// neighbours per node; Explicit takes them verbatim from the scenario.
enum class TableInit { Chain, RadioSample, Explicit };

std::string to_string(TableInit t);

struct Injection {
    Slot slot = 0;
    NodeId origin = kNoNode;
    NodeId destination = kNoNode;
    uint32_t payload_size = 48;
};

struct Scenario {
    TopologySpec topology;
    // When set, overrides topology generation entirely.
    std::optional<Topology> explicit_topology;

    TableInit table_init = TableInit::RadioSample;
    std::vector<std::vector<NodeId>> explicit_tables;

    FaultSpec fault;
    ProtocolParams protocol;
    EnergyParams energy;
    // Per-node initial energy overrides (golden scenarios use this to plant
    // a weak node).
    std::vector<std::pair<NodeId, double>> energy_overrides;

    std::vector<Injection> workload;
    Slot max_slots = 100000;
    // Keep the clock alive at least this long even with no routing work;
    // membership-only experiments need ticks without traffic.
    Slot run_until = 0;

    bool collision_mode = false;
    bool validate = false; // enable the in-run invariant checker

    void check() const; // throws std::invalid_argument naming the bad field
};

// Convenience builders used by tests, golden scenarios and the sweep runner.
Scenario chain_scenario(uint32_t hops, uint32_t k, double loss = 0.0);

} // namespace khop
