// Copyright (c) 2026 the stairsim authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <vector>

#include "stair/common.hpp"
#include "stair/params.hpp"
#include "stair/stake_ledger.hpp"

namespace stair {

// Stake change queued for a checkpoint. Deposits grant tokens and stake them
// for validation; exits pull that much stake out of the active set.
struct StakeMutation {
    Frame checkpoint_frame = 0;
    AccountId account;
    enum class Kind { deposit, exit_stake } kind = Kind::deposit;
    Tokens amount = 0;
    bool operator==(const StakeMutation&) const = default;
};

// A checkpoint at frame f activates its era at f + k_era_activation_margin.
// The margin is one more frame than the fame coin delay: sealing frame f can
// lag at most that far behind the frame front, so no block of an affected
// frame can exist anywhere before the checkpoint applies. Weight lookups are
// therefore order-independent and replicas stay in agreement.
inline constexpr Frame k_era_activation_margin = 11;

// Validating power per account, frozen between checkpoints.
class PowerSchedule {
public:
    struct Era {
        Frame from_frame = 0;
        std::map<AccountId, Tokens> active_stake; // power basis per account
        Tokens total_power = 0;
        std::map<AccountId, Tokens> power;
    };

    PowerSchedule(const StakeLedger& genesis, ProtocolParams params);

    // fold mutations into a new era effective from the activation frame
    const Era& apply_checkpoint(Frame checkpoint_frame, const std::vector<StakeMutation>& muts);

    const Era& era_for(Frame f) const;
    Tokens power(const AccountId& id, Frame f) const;
    Tokens total(Frame f) const;
    std::size_t era_count() const { return eras_.size(); }
    std::string digest_of(Frame f) const; // content digest of the active era

private:
    ProtocolParams params_;
    std::vector<Era> eras_;
};

} // namespace stair
