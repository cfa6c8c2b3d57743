// Copyright (c) 2026 the stairsim authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "stair/event_block.hpp"

namespace stair {

// Append-only block store with structural validation, per-creator chains,
// fork (equivocation) tracking, and the root index that consensus populates.
class XDag {
public:
    enum class InsertStatus { inserted, duplicate, missing_parents, invalid, fork_detected };
    struct InsertResult {
        InsertStatus status;
        std::string detail;
    };

    struct ForkPair {
        AccountId creator;
        std::uint64_t seq;
        BlockId a, b; // a was inserted first
    };

    struct RootEntry {
        BlockId id;
        AccountId creator;
        Tokens weight;
    };

    InsertResult insert(BlockPtr block);

    bool contains(const BlockId& id) const;
    const EventBlock& block(const BlockId& id) const; // throws unknown_block
    BlockPtr block_ptr(const BlockId& id) const;
    std::size_t size() const { return order_.size(); }
    const std::vector<BlockId>& insertion_order() const { return order_; }

    // latest block per creator (highest seq; first-seen branch wins on forks)
    const std::map<AccountId, BlockId>& tops() const { return tops_; }
    std::uint64_t height_of(const AccountId& creator) const; // max seq, -1 as none
    std::vector<BlockPtr> blocks_of_creator_above(const AccountId& creator, std::int64_t seq) const;

    // children that reference the given block as an other-parent
    const std::vector<BlockId>& other_children(const BlockId& id) const;

    // fork bookkeeping
    const std::vector<ForkPair>& forks() const { return forks_; }
    bool is_flagged(const AccountId& creator) const { return flagged_.contains(creator); }
    std::vector<AccountId> flagged_creators() const;

    // root index, populated by the consensus engine
    void register_root(Frame frame, const BlockId& id, const AccountId& creator, Tokens weight);
    bool frame_known(Frame frame) const { return roots_.contains(frame); }
    const std::vector<RootEntry>& roots_of(Frame frame) const; // throws unknown_frame

    // frame-f roots inside the block's ancestry cone (reflexive). Roots of a
    // creator whose fork pair is fully visible from the block are excluded.
    std::set<BlockId> reachable_roots(const BlockId& id, Frame frame) const;
    Tokens validation_score(const BlockId& id, Frame frame) const;

    // (lamport_ts, frame-of-finalization when supplied, id) ascending;
    // parents always precede children because lamport is strictly increasing
    std::vector<BlockId> topological_order(std::vector<BlockId> ids,
                                           const std::map<BlockId, Frame>* final_frame = nullptr) const;

    // one row per block: id,creator,seq,self_parent,other_parents...,lamport_ts,fee_total,role
    std::string export_csv() const;

private:
    InsertResult validate(const EventBlock& b) const;

    std::unordered_map<BlockId, BlockPtr, BlockIdHash> blocks_;
    std::vector<BlockId> order_; // insertion order, parents before children
    std::map<AccountId, std::vector<std::vector<BlockId>>> chains_; // per creator, per seq
    std::map<AccountId, BlockId> tops_;
    std::unordered_map<BlockId, std::vector<BlockId>, BlockIdHash> other_children_;
    std::vector<ForkPair> forks_;
    std::set<AccountId> flagged_;
    std::map<Frame, std::vector<RootEntry>> roots_;
};

} // namespace stair
