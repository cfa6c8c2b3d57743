// Copyright (c) 2026 the stairsim authors
// SPDX-License-Identifier: Apache-2.0
#include "stair/event_block.hpp"

#include <algorithm>
#include <set>

#include "stair/hash.hpp"

namespace stair {

Tokens EventBlock::fee_total() const {
    Tokens total = 0;
    for (const auto& t : transactions)
        total += t.fee;
    return total;
}

BlockId EventBlock::compute_id(const EventBlock& b) {
    HashWriter w;
    w.str(b.creator);
    w.id(b.self_parent);
    w.u64(b.other_parents.size());
    for (const auto& p : b.other_parents)
        w.id(p);
    HashWriter payload;
    payload.u64(b.transactions.size());
    for (const auto& t : b.transactions) {
        payload.str(t.payload);
        payload.u64(static_cast<std::uint64_t>(t.fee));
    }
    w.id(payload.finish());
    w.u64(b.lamport_ts);
    w.u64(b.seq);
    return w.finish();
}

static Role opposite(Role r) { return r == Role::user ? Role::validator : Role::user; }

BlockPtr create_event(const AccountId& creator, Role creator_role, const EventBlock* self_top,
                      const std::vector<const EventBlock*>& other_tops,
                      std::vector<Transaction> txns, int k) {
    if (creator_role == Role::observer)
        fail(Errc::invalid_structure, creator + " is an observer and cannot create blocks");
    if (self_top == nullptr) fail(Errc::invalid_structure, "non-leaf block needs a self-parent");
    if (self_top->creator != creator)
        fail(Errc::invalid_structure, "self-parent belongs to " + self_top->creator);
    if (static_cast<int>(other_tops.size()) != k - 1)
        fail(Errc::invalid_structure, "expected " + std::to_string(k - 1) + " other-parents");

    std::set<AccountId> creators;
    std::set<BlockId> ids;
    bool has_opposite = false;
    for (const EventBlock* p : other_tops) {
        if (p == nullptr) fail(Errc::invalid_structure, "null other-parent");
        if (p->creator == creator) fail(Errc::duplicate_creator, "other-parent by " + creator + " itself");
        if (!creators.insert(p->creator).second) fail(Errc::duplicate_creator, p->creator);
        if (!ids.insert(p->id).second) fail(Errc::invalid_structure, "other-parent repeated");
        if (p->creator_role == opposite(creator_role)) has_opposite = true;
    }
    if (!has_opposite)
        fail(Errc::cross_type_violation,
             creator + " (" + std::string(to_string(creator_role)) + ") has no opposite-type parent");

    auto b = std::make_shared<EventBlock>();
    b->creator = creator;
    b->creator_role = creator_role;
    b->seq = self_top->seq + 1;
    b->self_parent = self_top->id;
    b->other_parents.reserve(other_tops.size());
    std::uint64_t lamport = self_top->lamport_ts;
    for (const EventBlock* p : other_tops) {
        b->other_parents.push_back(p->id);
        lamport = std::max(lamport, p->lamport_ts);
    }
    b->lamport_ts = lamport + 1;
    b->transactions = std::move(txns);
    b->id = EventBlock::compute_id(*b);
    return b;
}

BlockPtr create_leaf(const AccountId& creator, Role creator_role, std::vector<Transaction> txns) {
    if (creator_role == Role::observer)
        fail(Errc::invalid_structure, creator + " is an observer and cannot create blocks");
    auto b = std::make_shared<EventBlock>();
    b->creator = creator;
    b->creator_role = creator_role;
    b->seq = 0;
    b->lamport_ts = 0;
    b->transactions = std::move(txns);
    b->id = EventBlock::compute_id(*b);
    return b;
}

} // namespace stair
