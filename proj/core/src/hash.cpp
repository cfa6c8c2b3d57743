// Copyright (c) 2026 the stairsim authors
// SPDX-License-Identifier: Apache-2.0
#include "stair/hash.hpp"

#include <openssl/sha.h>

namespace stair {

BlockId digest16(std::span<const std::uint8_t> bytes) {
    std::uint8_t out[SHA256_DIGEST_LENGTH];
    SHA256(bytes.data(), bytes.size(), out);
    BlockId id;
    for (std::size_t i = 0; i < id.b.size(); ++i)
        id.b[i] = out[i];
    return id;
}

BlockId digest16(std::string_view s) {
    return digest16(std::span(reinterpret_cast<const std::uint8_t*>(s.data()), s.size()));
}

HashWriter& HashWriter::u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i)
        buf_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    return *this;
}

HashWriter& HashWriter::str(std::string_view s) {
    u64(s.size());
    buf_.insert(buf_.end(), s.begin(), s.end());
    return *this;
}

HashWriter& HashWriter::id(const BlockId& v) {
    buf_.insert(buf_.end(), v.b.begin(), v.b.end());
    return *this;
}

BlockId HashWriter::finish() const { return digest16(std::span(buf_.data(), buf_.size())); }

} // namespace stair
