// Copyright (c) 2026 the stairsim authors
// SPDX-License-Identifier: Apache-2.0
#include "stair/stake_ledger.hpp"

namespace stair {

Tokens Account::committed() const {
    Tokens total = txn_staked + validation_staked;
    for (const auto& [to, amount] : delegations_out)
        total += amount;
    return total;
}

StakeLedger::StakeLedger(ProtocolParams params) : params_(params) { params_.validate(); }

void StakeLedger::add_account(const AccountId& id, Tokens tokens_held) {
    if (id.empty()) fail(Errc::config_invalid, "empty account id");
    if (tokens_held < 0) fail(Errc::config_invalid, "negative balance for " + id);
    if (accounts_.contains(id)) fail(Errc::config_invalid, "duplicate account " + id);
    Account a;
    a.id = id;
    a.tokens_held = tokens_held;
    accounts_.emplace(id, std::move(a));
}

bool StakeLedger::has_account(const AccountId& id) const { return accounts_.contains(id); }

Account& StakeLedger::acct(const AccountId& id) {
    auto it = accounts_.find(id);
    if (it == accounts_.end()) fail(Errc::unknown_account, id);
    return it->second;
}

const Account& StakeLedger::acct(const AccountId& id) const {
    auto it = accounts_.find(id);
    if (it == accounts_.end()) fail(Errc::unknown_account, id);
    return it->second;
}

const Account& StakeLedger::account(const AccountId& id) const { return acct(id); }

std::vector<AccountId> StakeLedger::account_ids() const {
    std::vector<AccountId> ids;
    ids.reserve(accounts_.size());
    for (const auto& [id, a] : accounts_)
        ids.push_back(id);
    return ids;
}

void StakeLedger::set_day(Day d) {
    if (d < day_) fail(Errc::config_invalid, "day moves forward only");
    day_ = d;
}

Tokens StakeLedger::delegated_in(const AccountId& id) const {
    acct(id);
    auto it = delegated_in_.find(id);
    return it == delegated_in_.end() ? 0 : it->second;
}

Tokens StakeLedger::effective_stake(const AccountId& id) const {
    return acct(id).tokens_held + delegated_in(id);
}

Role StakeLedger::role_of(const AccountId& id) const {
    return role_for_stake(effective_stake(id), params_);
}

Tokens StakeLedger::power_of(const AccountId& id) const {
    const Account& a = acct(id);
    // a lapsed validation stake sidelines the account until it renews
    if (a.validation_staked > 0 && day_ > a.stake_renewal_day) return 0;
    // exiting stake stays locked but is already out of play
    return validating_power(effective_stake(id) - a.exiting_stake, params_);
}

Tokens StakeLedger::total_validating_power() const {
    Tokens total = 0;
    for (const auto& [id, a] : accounts_)
        total += power_of(id);
    return total;
}

void StakeLedger::stake_tokens(const AccountId& id, StakeKind kind, Tokens amount) {
    Account& a = acct(id);
    if (amount < params_.epsilon) fail(Errc::below_minimum, id + " stake of " + std::to_string(amount));
    if (a.committed() + amount > a.tokens_held)
        fail(Errc::insufficient_balance, id + " cannot commit " + std::to_string(amount));
    if (kind == StakeKind::transaction) {
        a.txn_staked += amount;
    } else {
        a.validation_staked += amount;
        a.stake_renewal_day = day_ + params_.lambda_days;
    }
}

void StakeLedger::delegate(const AccountId& from, const AccountId& to, Tokens amount,
                           std::int64_t lock_days) {
    Account& src = acct(from);
    Account& dst = acct(to);
    if (from == to) fail(Errc::config_invalid, "self-delegation by " + from);
    if (amount < 1) fail(Errc::below_minimum, "delegation of " + std::to_string(amount));
    if (lock_days < 1) fail(Errc::lock_too_short, "lock of " + std::to_string(lock_days) + " days");
    if (src.committed() + amount > src.tokens_held)
        fail(Errc::insufficient_balance, from + " cannot delegate " + std::to_string(amount));
    Tokens cap = params_.delegation_cap_multiplier * dst.tokens_held;
    if (delegated_in(to) + amount > cap)
        fail(Errc::delegation_cap_exceeded, to + " cap is " + std::to_string(cap));

    src.delegations_out[to] += amount;
    Day until = day_ + lock_days;
    auto [it, fresh] = src.delegation_lock_until.emplace(to, until);
    if (!fresh && until > it->second) it->second = until;
    delegated_in_[to] += amount;
}

void StakeLedger::undelegate(const AccountId& from, const AccountId& to, Tokens amount) {
    Account& src = acct(from);
    acct(to);
    auto it = src.delegations_out.find(to);
    if (it == src.delegations_out.end() || amount < 1 || amount > it->second)
        fail(Errc::no_such_delegation, from + " -> " + to);
    if (day_ < src.delegation_lock_until.at(to))
        fail(Errc::still_locked, from + " -> " + to + " until day " +
                                     std::to_string(src.delegation_lock_until.at(to)));
    it->second -= amount;
    if (it->second == 0) {
        src.delegations_out.erase(it);
        src.delegation_lock_until.erase(to);
    }
    delegated_in_[to] -= amount;
    if (delegated_in_[to] == 0) delegated_in_.erase(to);
}

void StakeLedger::begin_exit(const AccountId& id, Tokens amount) {
    Account& a = acct(id);
    if (amount < 1 || amount > a.validation_staked)
        fail(Errc::insufficient_balance, id + " exit of " + std::to_string(amount));
    a.validation_staked -= amount;
    a.exiting_stake += amount;
    a.exit_lock_until = day_ + params_.exit_lock_days;
    if (a.validation_staked == 0) a.stake_renewal_day = k_no_renewal;
}

Tokens StakeLedger::withdraw_exited(const AccountId& id) {
    Account& a = acct(id);
    if (a.exiting_stake == 0) fail(Errc::no_such_delegation, id + " has no exiting stake");
    if (day_ < a.exit_lock_until)
        fail(Errc::still_locked, id + " exit locked until day " + std::to_string(a.exit_lock_until));
    Tokens freed = a.exiting_stake;
    a.exiting_stake = 0;
    return freed;
}

void StakeLedger::credit_tokens(const AccountId& id, Tokens amount) {
    if (amount < 0) fail(Errc::config_invalid, "negative credit");
    acct(id).tokens_held += amount;
}

Tokens StakeLedger::burn_validation_stake(const AccountId& id) {
    Account& a = acct(id);
    Tokens burned = a.validation_staked;
    a.validation_staked = 0;
    a.tokens_held -= burned; // deposit is destroyed, not released
    a.stake_renewal_day = k_no_renewal;
    return burned;
}

std::string StakeLedger::snapshot() const {
    std::string out = "# account_id,tokens_held,txn_staked,validation_staked,delegated_in,role,power\n";
    for (const auto& [id, a] : accounts_) {
        out += id;
        out += ',';
        out += std::to_string(a.tokens_held);
        out += ',';
        out += std::to_string(a.txn_staked);
        out += ',';
        out += std::to_string(a.validation_staked);
        out += ',';
        out += std::to_string(delegated_in(id));
        out += ',';
        out += to_string(role_of(id));
        out += ',';
        out += std::to_string(power_of(id));
        out += '\n';
    }
    return out;
}

} // namespace stair
