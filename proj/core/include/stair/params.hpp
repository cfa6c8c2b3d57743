// Copyright (c) 2026 the stairsim authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "stair/common.hpp"

namespace stair {

// Protocol constants. Defaults follow the network parameterization the
// simulator models; scenario files may override the tunable ones.
struct ProtocolParams {
    Tokens upper_bound_u = 1000; // validator threshold U
    Tokens lower_bound_l = 1;    // participation threshold L
    int k = 2;                   // parent references per non-leaf block
    Tokens epsilon = 1;          // minimum stake per operation
    std::int64_t lambda_days = 90;
    std::int64_t checkpoint_frame_interval = 100;
    std::int64_t exit_lock_days = 90;

    Tokens total_supply = 3'175'000'000;
    Tokens total_block_rewards = 996'341'176;
    std::int64_t reward_days = 1460;
    Cents daily_block_reward_cents = 68'242'546; // 682,425.46 per rewarded day

    int phi_spv_fee_bp = 3000;      // SPV fee commission, basis points
    int mu_commission_bp = 1500;    // validator commission on delegated share
    Tokens delegation_cap_multiplier = 15;
    int reporter_fraction_bp = 1000; // reporter share of a burned deposit
    std::int64_t points_per_finding = 1;

    void validate() const; // throws Error(config_invalid)
};

// validating power: 0 below L, 1 for [L, U), U * floor(stake / U) at or above U
Tokens validating_power(Tokens effective_stake, const ProtocolParams& p);
Role role_for_stake(Tokens effective_stake, const ProtocolParams& p);

// pool accrued for one simulated day (zero outside the reward window)
Cents daily_block_reward(Day day, const ProtocolParams& p);

} // namespace stair
