// Copyright (c) 2026 the stairsim authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "stair/rng.hpp"
#include "stair/scenario.hpp"

namespace stair {

struct PeerCandidate {
    AccountId id;
    Role role;
    Tokens stake = 0;
};

// Stake-weighted peer pick: first one opposite-type peer, then k-2 further
// distinct peers from everyone else. Throws no_opposite_type_peer when the
// opposite set is empty, invalid_structure when fewer than k-1 peers exist.
std::vector<AccountId> k_peer_selection(Role self_role, const std::vector<PeerCandidate>& candidates,
                                        Rng& rng, std::int64_t k, SelectionMode mode);

// Everything a finished run hands to the CLI and the tests. All strings are
// rendered deterministically from (config, seed).
struct RunOutputs {
    ScenarioConfig config;
    bool pass = true;
    std::vector<std::string> violations;
    std::vector<std::pair<std::string, std::string>> metrics;
    std::vector<std::pair<AccountId, std::string>> finality_logs; // node order
    std::string dag_csv;
    std::string roots_csv;
    std::string rewards_csv;
    std::string ledger_csv;
    std::string saga_csv;
    std::string report_text;
    std::string config_echo;
};

// Deterministic discrete-event run: two loops per node (create, respond) over
// a virtual clock, seeded latency draws per message, fault injection, then a
// drain plus honest anti-entropy to quiescence before the final checks.
RunOutputs run_scenario(const ScenarioConfig& cfg);

} // namespace stair
