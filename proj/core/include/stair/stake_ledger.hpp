// Copyright (c) 2026 the stairsim authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <vector>

#include "stair/common.hpp"
#include "stair/params.hpp"

namespace stair {

enum class StakeKind { transaction, validation };

struct Account {
    AccountId id;
    Tokens tokens_held = 0;
    Tokens txn_staked = 0;
    Tokens validation_staked = 0;
    std::map<AccountId, Tokens> delegations_out;
    std::map<AccountId, Day> delegation_lock_until;
    Day stake_renewal_day = k_no_renewal; // set when validation stake is placed
    Tokens exiting_stake = 0;             // withdrawn validation stake, still locked
    Day exit_lock_until = 0;

    Tokens committed() const; // txn + validation + delegations out
};

// Balances, delegations, and the role/power view derived from them.
// All mutating operations validate first and either apply fully or throw.
class StakeLedger {
public:
    explicit StakeLedger(ProtocolParams params);

    void add_account(const AccountId& id, Tokens tokens_held);
    bool has_account(const AccountId& id) const;
    const Account& account(const AccountId& id) const;
    std::vector<AccountId> account_ids() const; // sorted

    Day current_day() const { return day_; }
    void set_day(Day d);

    Tokens effective_stake(const AccountId& id) const; // held + delegated-in
    Tokens delegated_in(const AccountId& id) const;
    Role role_of(const AccountId& id) const;
    Tokens power_of(const AccountId& id) const; // 0 while validation stake is lapsed
    Tokens total_validating_power() const;

    void stake_tokens(const AccountId& id, StakeKind kind, Tokens amount);
    void delegate(const AccountId& from, const AccountId& to, Tokens amount, std::int64_t lock_days);
    void undelegate(const AccountId& from, const AccountId& to, Tokens amount);

    // validator exits: unstake is queued by consensus at a checkpoint, tokens
    // stay locked for exit_lock_days before withdraw_exited releases them
    void begin_exit(const AccountId& id, Tokens amount);
    Tokens withdraw_exited(const AccountId& id);

    void credit_tokens(const AccountId& id, Tokens amount);
    Tokens burn_validation_stake(const AccountId& id); // returns burned amount

    const ProtocolParams& params() const { return params_; }

    // snapshot export: one line per account,
    // account_id,tokens_held,txn_staked,validation_staked,delegated_in,role,power
    std::string snapshot() const;

private:
    Account& acct(const AccountId& id);
    const Account& acct(const AccountId& id) const;

    ProtocolParams params_;
    std::map<AccountId, Account> accounts_;
    std::map<AccountId, Tokens> delegated_in_;
    Day day_ = 0;
};

} // namespace stair
