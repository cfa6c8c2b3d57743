// Copyright (c) 2026 the stairsim authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "stair/common.hpp"

namespace stair {

// SHA-256 truncated to 128 bits
BlockId digest16(std::span<const std::uint8_t> bytes);
BlockId digest16(std::string_view s);

// canonical length-prefixed serialization for hashing
class HashWriter {
public:
    HashWriter& u64(std::uint64_t v);
    HashWriter& str(std::string_view s);
    HashWriter& id(const BlockId& v);
    BlockId finish() const;

private:
    std::vector<std::uint8_t> buf_;
};

} // namespace stair
