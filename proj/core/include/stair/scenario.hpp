// Copyright (c) 2026 the stairsim authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <vector>

#include "stair/params.hpp"
#include "stair/power_schedule.hpp"

namespace stair {

enum class FaultKind : std::uint8_t { honest, silent_after, equivocate, spam };

struct FaultSpec {
    FaultKind kind = FaultKind::honest;
    std::int64_t param = 0; // silent_after: tick; equivocate: rate in percent
};

struct NodeSpec {
    AccountId id;
    Tokens stake = 0;
};

enum class SelectionMode : std::uint8_t { proportional, inverse };
enum class FeeMode : std::uint8_t { creator, equal_split };

// One simulation scenario: population, faults, protocol knobs, run length.
// Parsed from `key = value` text; every key unknown to the schema is an error.
struct ScenarioConfig {
    std::string name = "scenario";
    std::vector<NodeSpec> nodes;
    std::map<AccountId, FaultSpec> faults;
    std::int64_t k = 2;
    Tokens upper_bound_u = 1000;
    Tokens lower_bound_l = 1;
    std::uint64_t seed = 1;
    std::int64_t max_ticks = 1000;
    std::int64_t latency_min = 1;
    std::int64_t latency_max = 5;
    Frame checkpoint_interval = 100;
    std::int64_t create_prob_pct = 50; // chance per node per tick, percent
    Cents txn_fee = 0;                 // fee carried by each created block
    std::int64_t ticks_per_day = 500;
    SelectionMode selection_mode = SelectionMode::proportional;
    FeeMode fee_mode = FeeMode::creator;
    std::vector<StakeMutation> stake_events;
    std::int64_t reporter_fraction_bp = 1000;
    Tokens epsilon = 1;
    std::int64_t lambda_days = 90;
    std::int64_t exit_lock_days = 90;
    std::int64_t points_per_finding = 1;

    ProtocolParams to_params() const;
    Role role_of(const NodeSpec& n) const;
    void validate() const; // throws config_invalid
    std::string echo() const;
};

ScenarioConfig parse_scenario(const std::string& text);
ScenarioConfig load_scenario(const std::string& path);

// one `--set key=value` override, same keys and syntax as the file
void apply_override(ScenarioConfig& cfg, const std::string& assignment);

std::string to_string(FaultKind k);
std::string to_string(SelectionMode m);
std::string to_string(FeeMode m);

} // namespace stair
