// Copyright (c) 2026 the stairsim authors
// SPDX-License-Identifier: Apache-2.0
#include "stair/power_schedule.hpp"

#include "stair/hash.hpp"

namespace stair {

static void derive_power(PowerSchedule::Era& era, const ProtocolParams& params) {
    era.total_power = 0;
    era.power.clear();
    for (const auto& [id, stake] : era.active_stake) {
        Tokens p = validating_power(stake, params);
        era.power[id] = p;
        era.total_power += p;
    }
}

PowerSchedule::PowerSchedule(const StakeLedger& genesis, ProtocolParams params) : params_(params) {
    Era era;
    era.from_frame = 0;
    for (const auto& id : genesis.account_ids())
        era.active_stake[id] = genesis.effective_stake(id);
    derive_power(era, params_);
    eras_.push_back(std::move(era));
}

const PowerSchedule::Era& PowerSchedule::apply_checkpoint(Frame checkpoint_frame,
                                                          const std::vector<StakeMutation>& muts) {
    Era era = eras_.back();
    era.from_frame = checkpoint_frame + k_era_activation_margin;
    for (const auto& m : muts) {
        Tokens& stake = era.active_stake[m.account];
        if (m.kind == StakeMutation::Kind::deposit) {
            stake += m.amount;
        } else {
            stake -= std::min(stake, m.amount);
        }
    }
    derive_power(era, params_);
    eras_.push_back(std::move(era));
    return eras_.back();
}

const PowerSchedule::Era& PowerSchedule::era_for(Frame f) const {
    for (auto it = eras_.rbegin(); it != eras_.rend(); ++it)
        if (it->from_frame <= f) return *it;
    return eras_.front();
}

Tokens PowerSchedule::power(const AccountId& id, Frame f) const {
    const Era& era = era_for(f);
    auto it = era.power.find(id);
    return it == era.power.end() ? 0 : it->second;
}

Tokens PowerSchedule::total(Frame f) const { return era_for(f).total_power; }

std::string PowerSchedule::digest_of(Frame f) const {
    const Era& era = era_for(f);
    HashWriter w;
    w.u64(static_cast<std::uint64_t>(era.from_frame));
    for (const auto& [id, stake] : era.active_stake) {
        w.str(id);
        w.u64(static_cast<std::uint64_t>(stake));
    }
    return w.finish().hex();
}

} // namespace stair
