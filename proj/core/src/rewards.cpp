// Copyright (c) 2026 the stairsim authors
// SPDX-License-Identifier: Apache-2.0
#include "stair/rewards.hpp"

#include <sstream>

#include "stair/money.hpp"

namespace stair {

namespace {

Cents mul_div(Cents value, std::int64_t num, std::int64_t den) {
    if (den == 0) return 0;
    return static_cast<Cents>(static_cast<__int128>(value) * num / den);
}

} // namespace

std::int64_t award_saga_points(SagaLedger& saga, const std::vector<BlockId>& new_atroposes,
                               const XDag& dag) {
    std::int64_t handed = 0;
    for (const auto& atropos : new_atroposes) {
        for (const auto& child : dag.other_children(atropos)) {
            if (!saga.awarded.insert(child).second) continue;
            saga.points[dag.block(child).creator] += 1;
            ++handed;
        }
    }
    return handed;
}

Cents RewardStatement::credit_total() const {
    Cents total = 0;
    for (const auto& [id, r] : rows)
        total += r.validation_reward + r.fees + r.delegation_share + r.commission;
    return total;
}

Cents RewardStatement::burn_column_total() const {
    Cents total = 0;
    for (const auto& [id, r] : rows)
        total += r.burn;
    return total;
}

bool RewardStatement::conserved() const {
    return credit_total() + spv + remainder + burn_column_total() ==
           pool + fees_collected + burned_stake;
}

void split_with_delegators(RewardStatement& st, const AccountId& validator, Cents gross,
                           CreditColumn own_column, const StakeLedger& ledger,
                           const ProtocolParams& params) {
    if (gross <= 0) return;
    Cents& own = own_column == CreditColumn::validation ? st.rows[validator].validation_reward
                                                        : st.rows[validator].fees;
    Tokens d = ledger.delegated_in(validator);
    Tokens s = ledger.account(validator).tokens_held;
    if (d <= 0 || d + s <= 0) {
        own += gross;
        return;
    }
    Cents attributable = mul_div(gross, d, d + s);
    Cents paid_out = 0;
    Cents commission = 0;
    for (const auto& id : ledger.account_ids()) {
        const Account& a = ledger.account(id);
        auto it = a.delegations_out.find(validator);
        if (it == a.delegations_out.end() || it->second <= 0) continue;
        Cents share = mul_div(attributable, it->second, d);
        Cents net = mul_div(share, 10000 - params.mu_commission_bp, 10000);
        st.rows[id].delegation_share += net;
        paid_out += net;
        commission += share - net;
    }
    st.rows[validator].commission += commission;
    own += gross - attributable + (attributable - paid_out - commission);
}

void distribute_validation_rewards(RewardStatement& st, Cents pool, const SagaLedger& saga,
                                   const StakeLedger& ledger) {
    st.pool += pool;
    if (pool <= 0) return;
    std::vector<std::pair<AccountId, Cents>> weights;
    Cents total_weight = 0;
    for (const auto& id : ledger.account_ids()) {
        Tokens w = ledger.power_of(id);
        std::int64_t alpha = saga.points_of(id);
        if (w <= 0 || alpha <= 0) continue;
        Cents aw = static_cast<Cents>(alpha) * w;
        weights.emplace_back(id, aw);
        total_weight += aw;
    }
    if (total_weight == 0) {
        st.remainder += pool;
        return;
    }
    Cents granted = 0;
    for (const auto& [id, aw] : weights) {
        Cents credit = mul_div(pool, aw, total_weight);
        granted += credit;
        split_with_delegators(st, id, credit, CreditColumn::validation, ledger, ledger.params());
    }
    st.spv += pool - granted; // rounding dust
}

void route_transaction_fees(RewardStatement& st, const std::vector<BlockPtr>& finalized,
                            const StakeLedger& ledger, FeeMode mode, const ProtocolParams& params) {
    if (mode == FeeMode::equal_split) {
        Cents total = 0;
        for (const auto& b : finalized)
            total += b->fee_total();
        if (total <= 0) return;
        st.fees_collected += total;
        Cents cut = mul_div(total, params.phi_spv_fee_bp, 10000);
        Cents pot = total - cut;
        auto ids = ledger.account_ids();
        Cents granted = 0;
        for (const auto& id : ids) {
            Cents share = pot / static_cast<Cents>(ids.size());
            st.rows[id].fees += share;
            granted += share;
        }
        st.spv += cut + (pot - granted);
        return;
    }
    for (const auto& b : finalized) {
        Cents fee = b->fee_total();
        if (fee <= 0) continue;
        st.fees_collected += fee;
        Cents creator_gross = mul_div(fee, 10000 - params.phi_spv_fee_bp, 10000);
        st.spv += fee - creator_gross;
        split_with_delegators(st, b->creator, creator_gross, CreditColumn::fees, ledger, params);
    }
}

BurnOutcome burn_deposit(RewardStatement& st, StakeLedger& ledger, const AccountId& flagged,
                         const std::optional<AccountId>& reporter, const ProtocolParams& params,
                         bool is_flagged) {
    if (!is_flagged) fail(Errc::not_flagged, flagged + " has no double-vote evidence");
    BurnOutcome out;
    out.burned = ledger.burn_validation_stake(flagged);
    if (out.burned == 0) return out;
    if (reporter) {
        out.bounty = mul_div(out.burned, params.reporter_fraction_bp, 10000);
        if (out.bounty > 0) ledger.credit_tokens(*reporter, out.bounty);
    }
    out.destroyed = out.burned - out.bounty;
    st.burned_stake += tokens_to_cents(out.burned);
    st.rows[flagged].burn += tokens_to_cents(out.destroyed);
    if (out.bounty > 0) st.rows[*reporter].commission += tokens_to_cents(out.bounty);
    return out;
}

std::string render_rewards_csv(const std::vector<RewardStatement>& statements) {
    std::ostringstream os;
    os << "# day,account,validation_reward,fees,delegation_share,commission,burn\n";
    for (const auto& st : statements) {
        os << st.day << ",POOL," << format_cents(st.pool) << "," << format_cents(st.fees_collected)
           << "," << format_cents(st.burned_stake) << ",0.00,0.00\n";
        for (const auto& [id, r] : st.rows) {
            os << st.day << "," << id << "," << format_cents(r.validation_reward) << ","
               << format_cents(r.fees) << "," << format_cents(r.delegation_share) << ","
               << format_cents(r.commission) << "," << format_cents(r.burn) << "\n";
        }
        os << st.day << ",SPV,0.00," << format_cents(st.spv) << ",0.00,0.00,0.00\n";
        if (st.remainder > 0)
            os << st.day << ",REMAINDER," << format_cents(st.remainder) << ",0.00,0.00,0.00,0.00\n";
    }
    return os.str();
}

std::string render_saga_csv(const SagaLedger& saga) {
    std::ostringstream os;
    os << "# account,points\n";
    for (const auto& [id, pts] : saga.points)
        os << id << "," << pts << "\n";
    return os.str();
}

} // namespace stair
