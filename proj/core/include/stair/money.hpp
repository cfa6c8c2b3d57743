// Copyright (c) 2026 the stairsim authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "stair/common.hpp"

namespace stair {

// Cents render as "12345.67"; whole negatives keep the sign on the units.
std::string format_cents(Cents v);
std::optional<Cents> parse_cents(std::string_view s);

inline Cents tokens_to_cents(Tokens t) { return t * 100; }

// floor((v * num_bp) / 10000) for basis-point takes; exact in int64
inline Cents take_bp(Cents v, int bp) { return v * bp / 10000; }

} // namespace stair
