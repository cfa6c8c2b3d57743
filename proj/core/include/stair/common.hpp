// Copyright (c) 2026 the stairsim authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace stair {

using Tokens = std::int64_t; // whole tokens
using Cents = std::int64_t;  // fixed-point hundredths of a token
using Frame = std::int64_t;
using Tick = std::int64_t;
using Day = std::int64_t;
using AccountId = std::string;

inline constexpr Day k_no_renewal = INT64_MAX;

enum class Role { observer, user, validator };

std::string_view to_string(Role r);
std::optional<Role> role_from_string(std::string_view s);

// 128-bit content id, hex-printed in exports
struct BlockId {
    std::array<std::uint8_t, 16> b{};

    auto operator<=>(const BlockId&) const = default;
    bool is_null() const { return *this == BlockId{}; }
    std::string hex() const;
    static std::optional<BlockId> from_hex(std::string_view s);
};

struct BlockIdHash {
    std::size_t operator()(const BlockId& id) const {
        std::size_t h = 0;
        for (std::size_t i = 0; i < sizeof(h); ++i)
            h = (h << 8) | id.b[i];
        return h;
    }
};

enum class Errc {
    unknown_account,
    insufficient_balance,
    below_minimum,
    delegation_cap_exceeded,
    still_locked,
    no_such_delegation,
    lock_too_short,
    cross_type_violation,
    duplicate_creator,
    missing_parents,
    invalid_structure,
    unknown_block,
    unknown_frame,
    earlier_frames_undecided,
    no_opposite_type_peer,
    not_flagged,
    duplicate_report,
    config_invalid,
    malformed_export,
};

std::string_view to_string(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg)
        : std::runtime_error(std::string(to_string(code)) + ": " + msg), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

} // namespace stair
