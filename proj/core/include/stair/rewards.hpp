// Copyright (c) 2026 the stairsim authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "stair/scenario.hpp"
#include "stair/stake_ledger.hpp"
#include "stair/xdag.hpp"

namespace stair {

// Saga points: one point to a block's creator the first time any of the
// block's other-parents turns out to be an Atropos. Monotone, at most one
// award per block.
struct SagaLedger {
    std::map<AccountId, std::int64_t> points;
    std::unordered_set<BlockId, BlockIdHash> awarded;
    std::set<std::string> reported; // finding digests already paid out

    std::int64_t points_of(const AccountId& id) const {
        auto it = points.find(id);
        return it == points.end() ? 0 : it->second;
    }
};

// returns the number of points handed out
std::int64_t award_saga_points(SagaLedger& saga, const std::vector<BlockId>& new_atroposes,
                               const XDag& dag);

struct RewardRow {
    Cents validation_reward = 0;
    Cents fees = 0;
    Cents delegation_share = 0;
    Cents commission = 0;
    Cents burn = 0; // validation stake destroyed from this account
};

// One settlement window. Conservation identity (exact, in hundredths):
//   sum(credits) + spv + remainder + sum(burn column) = pool + fees + burned_stake
// where credits are the four non-burn columns, remainder is a pool nobody
// could claim, and burned_stake is the total validation stake removed (the
// part not destroyed reappears as a reporter credit).
struct RewardStatement {
    Day day = 0;
    Cents pool = 0;
    Cents fees_collected = 0;
    Cents burned_stake = 0;
    std::map<AccountId, RewardRow> rows;
    Cents spv = 0;
    Cents remainder = 0;

    Cents credit_total() const;
    Cents burn_column_total() const;
    bool conserved() const;
};

// pool split as pool * (alpha_i * w_i) / sum_j(alpha_j * w_j) over accounts
// with positive validating power; rounding dust goes to the SPV, and the
// whole pool rolls into `remainder` when no account qualifies
void distribute_validation_rewards(RewardStatement& st, Cents pool, const SagaLedger& saga,
                                   const StakeLedger& ledger);

// fee routing for newly final blocks: SPV keeps phi, the rest goes to the
// creator side (split with its delegators) or is spread equally, per mode
void route_transaction_fees(RewardStatement& st, const std::vector<BlockPtr>& finalized,
                            const StakeLedger& ledger, FeeMode mode, const ProtocolParams& params);

enum class CreditColumn : std::uint8_t { validation, fees };

// split a gross credit between a validator and its delegators: the delegated
// share D/(D+S) is paid out pro rata net of the mu commission; the validator
// keeps its own share, the commission, and any rounding dust
void split_with_delegators(RewardStatement& st, const AccountId& validator, Cents gross,
                           CreditColumn own_column, const StakeLedger& ledger,
                           const ProtocolParams& params);

struct BurnOutcome {
    Tokens burned = 0;    // removed from validation stake
    Tokens bounty = 0;    // credited to the reporter
    Tokens destroyed = 0; // gone for good
};

// burn a flagged account's validation stake; a reporter, if present, is
// credited the configured fraction and the rest is destroyed
BurnOutcome burn_deposit(RewardStatement& st, StakeLedger& ledger, const AccountId& flagged,
                         const std::optional<AccountId>& reporter, const ProtocolParams& params,
                         bool is_flagged);

// header plus one POOL line, account rows, an SPV line, and a REMAINDER line
// (when nonzero) per statement
std::string render_rewards_csv(const std::vector<RewardStatement>& statements);

std::string render_saga_csv(const SagaLedger& saga);

} // namespace stair
