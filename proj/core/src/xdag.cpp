// Copyright (c) 2026 the stairsim authors
// SPDX-License-Identifier: Apache-2.0
#include "stair/xdag.hpp"

#include <algorithm>

namespace stair {

static Role opposite(Role r) { return r == Role::user ? Role::validator : Role::user; }

XDag::InsertResult XDag::validate(const EventBlock& b) const {
    if (b.creator.empty()) return {InsertStatus::invalid, "empty creator"};
    if (b.id != EventBlock::compute_id(b)) return {InsertStatus::invalid, "id does not match content"};

    if (b.is_leaf()) {
        if (!b.self_parent.is_null() || !b.other_parents.empty())
            return {InsertStatus::invalid, "leaf with parents"};
        if (b.lamport_ts != 0) return {InsertStatus::invalid, "leaf lamport must be 0"};
        return {InsertStatus::inserted, {}};
    }

    if (b.self_parent.is_null()) return {InsertStatus::invalid, "non-leaf without self-parent"};
    auto sp = blocks_.find(b.self_parent);
    if (sp == blocks_.end()) return {InsertStatus::missing_parents, b.self_parent.hex()};
    if (sp->second->creator != b.creator)
        return {InsertStatus::invalid, "self-parent creator mismatch"};
    if (b.seq != sp->second->seq + 1) return {InsertStatus::invalid, "seq must follow self-parent"};
    if (b.other_parents.empty()) return {InsertStatus::invalid, "non-leaf without other-parents"};

    std::uint64_t max_lamport = sp->second->lamport_ts;
    std::set<AccountId> creators;
    std::set<BlockId> seen;
    bool has_opposite = false;
    for (const auto& pid : b.other_parents) {
        auto it = blocks_.find(pid);
        if (it == blocks_.end()) return {InsertStatus::missing_parents, pid.hex()};
        const EventBlock& p = *it->second;
        if (p.creator == b.creator) return {InsertStatus::invalid, "other-parent by creator itself"};
        if (!creators.insert(p.creator).second)
            return {InsertStatus::invalid, "duplicate other-parent creator " + p.creator};
        if (!seen.insert(pid).second) return {InsertStatus::invalid, "repeated other-parent"};
        if (p.creator_role == opposite(b.creator_role)) has_opposite = true;
        max_lamport = std::max(max_lamport, p.lamport_ts);
    }
    if (!has_opposite) return {InsertStatus::invalid, "no opposite-type other-parent"};
    if (b.lamport_ts != max_lamport + 1)
        return {InsertStatus::invalid, "lamport must be 1 + max parent lamport"};
    return {InsertStatus::inserted, {}};
}

XDag::InsertResult XDag::insert(BlockPtr block) {
    const EventBlock& b = *block;
    if (blocks_.contains(b.id)) return {InsertStatus::duplicate, {}};
    InsertResult check = validate(b);
    if (check.status != InsertStatus::inserted) return check;

    bool fork = false;
    auto& chain = chains_[b.creator];
    if (chain.size() <= b.seq) chain.resize(b.seq + 1);
    if (!chain[b.seq].empty()) {
        fork = true;
        // one pair per new branch, anchored at the first-seen block
        forks_.push_back({b.creator, b.seq, chain[b.seq].front(), b.id});
        flagged_.insert(b.creator);
    }
    chain[b.seq].push_back(b.id);

    blocks_.emplace(b.id, block);
    order_.push_back(b.id);
    for (const auto& pid : b.other_parents)
        other_children_[pid].push_back(b.id);

    auto top = tops_.find(b.creator);
    if (top == tops_.end()) {
        tops_.emplace(b.creator, b.id);
    } else if (blocks_.at(top->second)->seq < b.seq) {
        top->second = b.id;
    }
    return fork ? InsertResult{InsertStatus::fork_detected, b.creator}
                : InsertResult{InsertStatus::inserted, {}};
}

bool XDag::contains(const BlockId& id) const { return blocks_.contains(id); }

const EventBlock& XDag::block(const BlockId& id) const {
    auto it = blocks_.find(id);
    if (it == blocks_.end()) fail(Errc::unknown_block, id.hex());
    return *it->second;
}

BlockPtr XDag::block_ptr(const BlockId& id) const {
    auto it = blocks_.find(id);
    if (it == blocks_.end()) fail(Errc::unknown_block, id.hex());
    return it->second;
}

std::uint64_t XDag::height_of(const AccountId& creator) const {
    auto it = tops_.find(creator);
    if (it == tops_.end()) return static_cast<std::uint64_t>(-1);
    return blocks_.at(it->second)->seq;
}

std::vector<BlockPtr> XDag::blocks_of_creator_above(const AccountId& creator, std::int64_t seq) const {
    std::vector<BlockPtr> out;
    auto it = chains_.find(creator);
    if (it == chains_.end()) return out;
    bool forked = flagged_.contains(creator);
    for (std::size_t s = 0; s < it->second.size(); ++s) {
        if (!forked && static_cast<std::int64_t>(s) <= seq) continue;
        for (const auto& id : it->second[s])
            out.push_back(blocks_.at(id));
    }
    return out;
}

const std::vector<BlockId>& XDag::other_children(const BlockId& id) const {
    static const std::vector<BlockId> none;
    auto it = other_children_.find(id);
    return it == other_children_.end() ? none : it->second;
}

std::vector<AccountId> XDag::flagged_creators() const {
    return {flagged_.begin(), flagged_.end()};
}

void XDag::register_root(Frame frame, const BlockId& id, const AccountId& creator, Tokens weight) {
    roots_[frame].push_back({id, creator, weight});
}

const std::vector<XDag::RootEntry>& XDag::roots_of(Frame frame) const {
    auto it = roots_.find(frame);
    if (it == roots_.end()) fail(Errc::unknown_frame, std::to_string(frame));
    return it->second;
}

std::set<BlockId> XDag::reachable_roots(const BlockId& id, Frame frame) const {
    const auto& frame_roots = roots_of(frame);
    block(id);

    std::unordered_set<BlockId, BlockIdHash> visited;
    std::vector<BlockId> stack{id};
    visited.insert(id);
    while (!stack.empty()) {
        BlockId cur = stack.back();
        stack.pop_back();
        const EventBlock& b = *blocks_.at(cur);
        auto push = [&](const BlockId& p) {
            if (!p.is_null() && visited.insert(p).second) stack.push_back(p);
        };
        push(b.self_parent);
        for (const auto& p : b.other_parents)
            push(p);
    }

    // a creator with both sides of a fork pair inside this cone is excluded
    std::set<AccountId> excluded;
    for (const auto& f : forks_)
        if (visited.contains(f.a) && visited.contains(f.b)) excluded.insert(f.creator);

    std::set<BlockId> out;
    for (const auto& r : frame_roots)
        if (visited.contains(r.id) && !excluded.contains(r.creator)) out.insert(r.id);
    return out;
}

Tokens XDag::validation_score(const BlockId& id, Frame frame) const {
    std::set<BlockId> reach = reachable_roots(id, frame);
    Tokens score = 0;
    for (const auto& r : roots_of(frame))
        if (reach.contains(r.id)) score += r.weight;
    return score;
}

std::vector<BlockId> XDag::topological_order(std::vector<BlockId> ids,
                                             const std::map<BlockId, Frame>* final_frame) const {
    auto key = [&](const BlockId& id) {
        Frame f = 0;
        if (final_frame) {
            auto it = final_frame->find(id);
            if (it != final_frame->end()) f = it->second;
        }
        return std::tuple(blocks_.at(id)->lamport_ts, f, id);
    };
    std::sort(ids.begin(), ids.end(), [&](const BlockId& a, const BlockId& b) { return key(a) < key(b); });
    return ids;
}

std::string XDag::export_csv() const {
    std::string out = "# id,creator,seq,self_parent,other_parents...,lamport_ts,fee_total,role\n";
    std::vector<BlockId> ids = order_;
    ids = topological_order(std::move(ids));
    for (const auto& id : ids) {
        const EventBlock& b = *blocks_.at(id);
        out += b.id.hex();
        out += ',';
        out += b.creator;
        out += ',';
        out += std::to_string(b.seq);
        out += ',';
        out += b.self_parent.is_null() ? "-" : b.self_parent.hex();
        out += ',';
        if (b.other_parents.empty()) {
            out += '-';
        } else {
            for (std::size_t i = 0; i < b.other_parents.size(); ++i) {
                if (i) out += ',';
                out += b.other_parents[i].hex();
            }
        }
        out += ',';
        out += std::to_string(b.lamport_ts);
        out += ',';
        out += std::to_string(b.fee_total());
        out += ',';
        out += to_string(b.creator_role);
        out += '\n';
    }
    return out;
}

} // namespace stair
