// Copyright (c) 2026 the stairsim authors
// SPDX-License-Identifier: Apache-2.0
#include "stair/params.hpp"

namespace stair {

void ProtocolParams::validate() const {
    if (lower_bound_l < 1) fail(Errc::config_invalid, "L must be >= 1");
    if (upper_bound_u <= lower_bound_l) fail(Errc::config_invalid, "U must exceed L");
    if (k < 2) fail(Errc::config_invalid, "k must be >= 2");
    if (epsilon < 1) fail(Errc::config_invalid, "epsilon must be >= 1");
    if (lambda_days < 1) fail(Errc::config_invalid, "lambda_days must be >= 1");
    if (checkpoint_frame_interval < 1) fail(Errc::config_invalid, "checkpoint interval must be >= 1");
    if (exit_lock_days < 0) fail(Errc::config_invalid, "exit_lock_days must be >= 0");
    if (reward_days < 0) fail(Errc::config_invalid, "reward_days must be >= 0");
    if (phi_spv_fee_bp < 0 || phi_spv_fee_bp > 10000) fail(Errc::config_invalid, "phi out of range");
    if (mu_commission_bp < 0 || mu_commission_bp > 10000) fail(Errc::config_invalid, "mu out of range");
    if (reporter_fraction_bp < 0 || reporter_fraction_bp > 10000)
        fail(Errc::config_invalid, "reporter fraction out of range");
    if (delegation_cap_multiplier < 1) fail(Errc::config_invalid, "delegation cap must be >= 1");
}

Tokens validating_power(Tokens effective_stake, const ProtocolParams& p) {
    if (effective_stake < p.lower_bound_l) return 0;
    if (effective_stake < p.upper_bound_u) return 1;
    return p.upper_bound_u * (effective_stake / p.upper_bound_u);
}

Role role_for_stake(Tokens effective_stake, const ProtocolParams& p) {
    if (effective_stake < p.lower_bound_l) return Role::observer;
    if (effective_stake < p.upper_bound_u) return Role::user;
    return Role::validator;
}

Cents daily_block_reward(Day day, const ProtocolParams& p) {
    if (day < 0 || day >= p.reward_days) return 0;
    return p.daily_block_reward_cents;
}

} // namespace stair
