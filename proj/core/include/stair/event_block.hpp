// Copyright (c) 2026 the stairsim authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "stair/common.hpp"

namespace stair {

struct Transaction {
    std::string payload;
    Tokens fee = 0;
};

struct EventBlock {
    BlockId id;
    AccountId creator;
    std::uint64_t seq = 0;
    BlockId self_parent; // null for a leaf
    std::vector<BlockId> other_parents;
    std::vector<Transaction> transactions;
    std::uint64_t lamport_ts = 0;
    Role creator_role = Role::user; // stamped at creation time

    bool is_leaf() const { return seq == 0; }
    Tokens fee_total() const;

    static BlockId compute_id(const EventBlock& b);
};

using BlockPtr = std::shared_ptr<const EventBlock>;

struct ParentRef {
    const EventBlock* block;
};

// Builds and validates a block against its parents: the cross-type reference
// rule, distinct-creator other-parents, seq/lamport bookkeeping. Throws Error
// (cross_type_violation, duplicate_creator, invalid_structure).
BlockPtr create_event(const AccountId& creator, Role creator_role, const EventBlock* self_top,
                      const std::vector<const EventBlock*>& other_tops,
                      std::vector<Transaction> txns, int k);

// Leaf constructor (seq 0, no parents).
BlockPtr create_leaf(const AccountId& creator, Role creator_role, std::vector<Transaction> txns);

} // namespace stair
