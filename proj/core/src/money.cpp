// Copyright (c) 2026 the stairsim authors
// SPDX-License-Identifier: Apache-2.0
#include "stair/money.hpp"

#include <cctype>
#include <cstdlib>

namespace stair {

std::string format_cents(Cents v) {
    bool neg = v < 0;
    if (neg) v = -v;
    std::string out = neg ? "-" : "";
    out += std::to_string(v / 100);
    out += '.';
    Cents frac = v % 100;
    out += static_cast<char>('0' + frac / 10);
    out += static_cast<char>('0' + frac % 10);
    return out;
}

std::optional<Cents> parse_cents(std::string_view s) {
    if (s.empty()) return std::nullopt;
    bool neg = false;
    std::size_t i = 0;
    if (s[0] == '-') {
        neg = true;
        i = 1;
    }
    Cents whole = 0, frac = 0;
    bool any = false;
    for (; i < s.size() && s[i] != '.'; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
        whole = whole * 10 + (s[i] - '0');
        any = true;
    }
    if (!any) return std::nullopt;
    if (i < s.size()) { // fractional part, at most two digits
        ++i;
        std::size_t digits = 0;
        for (; i < s.size(); ++i, ++digits) {
            if (!std::isdigit(static_cast<unsigned char>(s[i])) || digits >= 2) return std::nullopt;
            frac = frac * 10 + (s[i] - '0');
        }
        if (digits == 1) frac *= 10;
    }
    Cents v = whole * 100 + frac;
    return neg ? -v : v;
}

} // namespace stair
