// Copyright (c) 2026 the stairsim authors
// SPDX-License-Identifier: Apache-2.0
#include "stair/common.hpp"

namespace stair {

std::string_view to_string(Role r) {
    switch (r) {
    case Role::observer: return "observer";
    case Role::user: return "user";
    case Role::validator: return "validator";
    }
    return "?";
}

std::optional<Role> role_from_string(std::string_view s) {
    if (s == "observer") return Role::observer;
    if (s == "user") return Role::user;
    if (s == "validator") return Role::validator;
    return std::nullopt;
}

static constexpr char hex_digits[] = "0123456789abcdef";

std::string BlockId::hex() const {
    std::string out;
    out.reserve(32);
    for (auto byte : b) {
        out.push_back(hex_digits[byte >> 4]);
        out.push_back(hex_digits[byte & 0xf]);
    }
    return out;
}

static int hex_val(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

std::optional<BlockId> BlockId::from_hex(std::string_view s) {
    if (s.size() != 32) return std::nullopt;
    BlockId id;
    for (std::size_t i = 0; i < 16; ++i) {
        int hi = hex_val(s[2 * i]), lo = hex_val(s[2 * i + 1]);
        if (hi < 0 || lo < 0) return std::nullopt;
        id.b[i] = static_cast<std::uint8_t>((hi << 4) | lo);
    }
    return id;
}

std::string_view to_string(Errc c) {
    switch (c) {
    case Errc::unknown_account: return "UnknownAccount";
    case Errc::insufficient_balance: return "InsufficientBalance";
    case Errc::below_minimum: return "BelowMinimum";
    case Errc::delegation_cap_exceeded: return "DelegationCapExceeded";
    case Errc::still_locked: return "StillLocked";
    case Errc::no_such_delegation: return "NoSuchDelegation";
    case Errc::lock_too_short: return "LockTooShort";
    case Errc::cross_type_violation: return "CrossTypeViolation";
    case Errc::duplicate_creator: return "DuplicateCreator";
    case Errc::missing_parents: return "MissingParents";
    case Errc::invalid_structure: return "InvalidStructure";
    case Errc::unknown_block: return "UnknownBlock";
    case Errc::unknown_frame: return "UnknownFrame";
    case Errc::earlier_frames_undecided: return "EarlierFramesUndecided";
    case Errc::no_opposite_type_peer: return "NoOppositeTypePeer";
    case Errc::not_flagged: return "NotFlagged";
    case Errc::duplicate_report: return "DuplicateReport";
    case Errc::config_invalid: return "ConfigInvalid";
    case Errc::malformed_export: return "MalformedExport";
    }
    return "?";
}

} // namespace stair
