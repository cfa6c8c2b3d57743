// Copyright (c) 2026 the stairsim authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>
#include <span>

#include "stair/common.hpp"

namespace stair {

// mt19937_64 output is pinned by the standard; the std distributions are not.
// Every bounded or weighted draw goes through this wrapper so that a seed
// reproduces the same run on any platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // uniform in [0, n), rejection-sampled to stay unbiased
    std::uint64_t below(std::uint64_t n) {
        if (n < 2) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do {
            v = eng_();
        } while (v >= limit);
        return v % n;
    }

    // true with probability num/den
    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

    // index drawn proportionally to non-negative weights; total must be > 0
    std::size_t pick_weighted(std::span<const Tokens> weights) {
        Tokens total = 0;
        for (Tokens w : weights)
            total += w;
        std::uint64_t r = below(static_cast<std::uint64_t>(total));
        for (std::size_t i = 0; i < weights.size(); ++i) {
            if (r < static_cast<std::uint64_t>(weights[i])) return i;
            r -= static_cast<std::uint64_t>(weights[i]);
        }
        return weights.size() - 1; // unreachable with total > 0
    }

private:
    std::mt19937_64 eng_;
};

} // namespace stair
