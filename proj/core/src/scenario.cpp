// Copyright (c) 2026 the stairsim authors
// SPDX-License-Identifier: Apache-2.0
#include "stair/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "stair/money.hpp"

namespace stair {

namespace {

std::string trim(std::string_view s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    std::size_t e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(const std::string& value, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, sep)) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

std::int64_t parse_int(const std::string& key, const std::string& v) {
    std::int64_t n = 0;
    auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), n);
    if (ec != std::errc{} || p != v.data() + v.size())
        fail(Errc::config_invalid, key + ": not an integer: '" + v + "'");
    return n;
}

std::uint64_t parse_uint(const std::string& key, const std::string& v) {
    std::uint64_t n = 0;
    auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), n);
    if (ec != std::errc{} || p != v.data() + v.size())
        fail(Errc::config_invalid, key + ": not an unsigned integer: '" + v + "'");
    return n;
}

// decimals like "0.5" or "30" are carried as hundredths
std::int64_t parse_hundredths(const std::string& key, const std::string& v) {
    std::optional<Cents> c = parse_cents(v);
    if (!c) fail(Errc::config_invalid, key + ": not a decimal: '" + v + "'");
    return *c;
}

bool valid_id(const std::string& id) {
    if (id.empty() || id.size() > 32) return false;
    return std::all_of(id.begin(), id.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_' || c == '-';
    });
}

void set_key(ScenarioConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "name") {
        if (!valid_id(value)) fail(Errc::config_invalid, "name: must be [a-z0-9_-]+");
        cfg.name = value;
    } else if (key == "nodes") {
        cfg.nodes.clear();
        for (const auto& item : split_list(value, ',')) {
            auto parts = split_list(item, ':');
            if (parts.size() != 2) fail(Errc::config_invalid, "nodes: expected id:stake, got '" + item + "'");
            if (!valid_id(parts[0])) fail(Errc::config_invalid, "nodes: bad id '" + parts[0] + "'");
            cfg.nodes.push_back({parts[0], parse_int("nodes", parts[1])});
        }
    } else if (key == "faults") {
        cfg.faults.clear();
        for (const auto& item : split_list(value, ',')) {
            auto parts = split_list(item, ':');
            if (parts.size() < 2 || parts.size() > 3)
                fail(Errc::config_invalid, "faults: expected id:kind[:param], got '" + item + "'");
            FaultSpec f;
            if (parts[1] == "honest") {
                f.kind = FaultKind::honest;
            } else if (parts[1] == "silent_after") {
                f.kind = FaultKind::silent_after;
                if (parts.size() != 3) fail(Errc::config_invalid, "faults: silent_after needs a tick");
                f.param = parse_int("faults", parts[2]);
            } else if (parts[1] == "equivocate") {
                f.kind = FaultKind::equivocate;
                f.param = parts.size() == 3 ? parse_hundredths("faults", parts[2]) : 25;
            } else if (parts[1] == "spam") {
                f.kind = FaultKind::spam;
            } else {
                fail(Errc::config_invalid, "faults: unknown kind '" + parts[1] + "'");
            }
            cfg.faults[parts[0]] = f;
        }
    } else if (key == "k") {
        cfg.k = parse_int(key, value);
    } else if (key == "U") {
        cfg.upper_bound_u = parse_int(key, value);
    } else if (key == "L") {
        cfg.lower_bound_l = parse_int(key, value);
    } else if (key == "seed") {
        cfg.seed = parse_uint(key, value);
    } else if (key == "max_ticks") {
        cfg.max_ticks = parse_int(key, value);
    } else if (key == "latency_min") {
        cfg.latency_min = parse_int(key, value);
    } else if (key == "latency_max") {
        cfg.latency_max = parse_int(key, value);
    } else if (key == "checkpoint_interval") {
        cfg.checkpoint_interval = parse_int(key, value);
    } else if (key == "create_prob") {
        cfg.create_prob_pct = parse_hundredths(key, value);
    } else if (key == "txn_fee") {
        cfg.txn_fee = parse_hundredths(key, value);
    } else if (key == "ticks_per_day") {
        cfg.ticks_per_day = parse_int(key, value);
    } else if (key == "selection_mode") {
        if (value == "proportional") cfg.selection_mode = SelectionMode::proportional;
        else if (value == "inverse") cfg.selection_mode = SelectionMode::inverse;
        else fail(Errc::config_invalid, "selection_mode: expected proportional|inverse");
    } else if (key == "fee_mode") {
        if (value == "creator") cfg.fee_mode = FeeMode::creator;
        else if (value == "equal_split") cfg.fee_mode = FeeMode::equal_split;
        else fail(Errc::config_invalid, "fee_mode: expected creator|equal_split");
    } else if (key == "stake_events") {
        cfg.stake_events.clear();
        for (const auto& item : split_list(value, ',')) {
            auto parts = split_list(item, ':');
            if (parts.size() != 4)
                fail(Errc::config_invalid, "stake_events: expected frame:id:kind:amount, got '" + item + "'");
            StakeMutation m;
            m.checkpoint_frame = parse_int("stake_events", parts[0]);
            if (!valid_id(parts[1])) fail(Errc::config_invalid, "stake_events: bad id '" + parts[1] + "'");
            m.account = parts[1];
            if (parts[2] == "deposit") m.kind = StakeMutation::Kind::deposit;
            else if (parts[2] == "exit") m.kind = StakeMutation::Kind::exit_stake;
            else fail(Errc::config_invalid, "stake_events: kind must be deposit|exit");
            m.amount = parse_int("stake_events", parts[3]);
            cfg.stake_events.push_back(std::move(m));
        }
    } else if (key == "reporter_fraction") {
        cfg.reporter_fraction_bp = parse_hundredths(key, value) * 100;
    } else if (key == "epsilon") {
        cfg.epsilon = parse_int(key, value);
    } else if (key == "lambda_days") {
        cfg.lambda_days = parse_int(key, value);
    } else if (key == "exit_lock_days") {
        cfg.exit_lock_days = parse_int(key, value);
    } else if (key == "points_per_finding") {
        cfg.points_per_finding = parse_int(key, value);
    } else {
        fail(Errc::config_invalid, "unknown key '" + key + "'");
    }
}

} // namespace

std::string to_string(FaultKind k) {
    switch (k) {
    case FaultKind::honest: return "honest";
    case FaultKind::silent_after: return "silent_after";
    case FaultKind::equivocate: return "equivocate";
    case FaultKind::spam: return "spam";
    }
    return "honest";
}

std::string to_string(SelectionMode m) {
    return m == SelectionMode::proportional ? "proportional" : "inverse";
}

std::string to_string(FeeMode m) { return m == FeeMode::creator ? "creator" : "equal_split"; }

ProtocolParams ScenarioConfig::to_params() const {
    ProtocolParams p;
    p.upper_bound_u = upper_bound_u;
    p.lower_bound_l = lower_bound_l;
    p.k = k;
    p.epsilon = epsilon;
    p.lambda_days = lambda_days;
    p.checkpoint_frame_interval = checkpoint_interval;
    p.exit_lock_days = exit_lock_days;
    p.reporter_fraction_bp = reporter_fraction_bp;
    p.points_per_finding = points_per_finding;
    return p;
}

Role ScenarioConfig::role_of(const NodeSpec& n) const {
    return role_for_stake(n.stake, to_params());
}

void ScenarioConfig::validate() const {
    ProtocolParams p = to_params();
    p.validate();
    if (nodes.empty()) fail(Errc::config_invalid, "nodes: empty population");
    if (nodes.size() > 64) fail(Errc::config_invalid, "nodes: at most 64");
    std::set<AccountId> ids;
    std::int64_t users = 0, validators = 0;
    for (const auto& n : nodes) {
        if (!ids.insert(n.id).second) fail(Errc::config_invalid, "nodes: duplicate id '" + n.id + "'");
        if (n.stake < 0) fail(Errc::config_invalid, "nodes: negative stake for '" + n.id + "'");
        Role r = role_of(n);
        if (r == Role::user) ++users;
        if (r == Role::validator) ++validators;
    }
    if (validators == 0) fail(Errc::config_invalid, "nodes: no validator in population");
    if (users == 0) fail(Errc::config_invalid, "nodes: no user in population");
    if (k < 2) fail(Errc::config_invalid, "k: must be at least 2");
    if (static_cast<std::size_t>(k) > nodes.size()) fail(Errc::config_invalid, "k: exceeds node count");
    if (max_ticks < 1) fail(Errc::config_invalid, "max_ticks: must be positive");
    if (latency_min < 1) fail(Errc::config_invalid, "latency_min: must be at least 1");
    if (latency_max < latency_min) fail(Errc::config_invalid, "latency_max: below latency_min");
    if (create_prob_pct < 0 || create_prob_pct > 100)
        fail(Errc::config_invalid, "create_prob: must be within [0,1]");
    if (txn_fee < 0) fail(Errc::config_invalid, "txn_fee: negative");
    if (ticks_per_day < 1) fail(Errc::config_invalid, "ticks_per_day: must be positive");
    for (const auto& [id, f] : faults) {
        if (!ids.contains(id)) fail(Errc::config_invalid, "faults: unknown node '" + id + "'");
        if (f.kind == FaultKind::silent_after && f.param < 0)
            fail(Errc::config_invalid, "faults: silent_after tick negative");
        if (f.kind == FaultKind::equivocate && (f.param < 1 || f.param > 100))
            fail(Errc::config_invalid, "faults: equivocate rate outside (0,1]");
    }
    for (const auto& m : stake_events) {
        if (m.checkpoint_frame < 1) fail(Errc::config_invalid, "stake_events: frame must be >= 1");
        if (m.amount < 1) fail(Errc::config_invalid, "stake_events: amount must be positive");
        if (m.kind == StakeMutation::Kind::exit_stake && !ids.contains(m.account))
            fail(Errc::config_invalid, "stake_events: exit for unknown node '" + m.account + "'");
    }
}

std::string ScenarioConfig::echo() const {
    std::ostringstream os;
    os << "name = " << name << "\n";
    os << "nodes = ";
    for (std::size_t i = 0; i < nodes.size(); ++i)
        os << (i ? ", " : "") << nodes[i].id << ":" << nodes[i].stake;
    os << "\n";
    if (!faults.empty()) {
        os << "faults = ";
        bool first = true;
        for (const auto& [id, f] : faults) {
            os << (first ? "" : ", ") << id << ":" << to_string(f.kind);
            if (f.kind == FaultKind::silent_after) os << ":" << f.param;
            if (f.kind == FaultKind::equivocate) os << ":" << format_cents(f.param);
            first = false;
        }
        os << "\n";
    }
    os << "k = " << k << "\n";
    os << "U = " << upper_bound_u << "\n";
    os << "L = " << lower_bound_l << "\n";
    os << "seed = " << seed << "\n";
    os << "max_ticks = " << max_ticks << "\n";
    os << "latency_min = " << latency_min << "\n";
    os << "latency_max = " << latency_max << "\n";
    os << "checkpoint_interval = " << checkpoint_interval << "\n";
    os << "create_prob = " << format_cents(create_prob_pct) << "\n";
    os << "txn_fee = " << format_cents(txn_fee) << "\n";
    os << "ticks_per_day = " << ticks_per_day << "\n";
    os << "selection_mode = " << to_string(selection_mode) << "\n";
    os << "fee_mode = " << to_string(fee_mode) << "\n";
    if (!stake_events.empty()) {
        os << "stake_events = ";
        for (std::size_t i = 0; i < stake_events.size(); ++i) {
            const auto& m = stake_events[i];
            os << (i ? ", " : "") << m.checkpoint_frame << ":" << m.account << ":"
               << (m.kind == StakeMutation::Kind::deposit ? "deposit" : "exit") << ":" << m.amount;
        }
        os << "\n";
    }
    os << "reporter_fraction = " << format_cents(reporter_fraction_bp / 100) << "\n";
    os << "epsilon = " << epsilon << "\n";
    os << "lambda_days = " << lambda_days << "\n";
    os << "exit_lock_days = " << exit_lock_days << "\n";
    os << "points_per_finding = " << points_per_finding << "\n";
    return os.str();
}

ScenarioConfig parse_scenario(const std::string& text) {
    ScenarioConfig cfg;
    std::stringstream ss(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::size_t eq = t.find('=');
        if (eq == std::string::npos)
            fail(Errc::config_invalid, "line " + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(t.substr(0, eq));
        std::string value = trim(t.substr(eq + 1));
        set_key(cfg, key, value);
    }
    return cfg;
}

ScenarioConfig load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::config_invalid, "cannot open config '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return parse_scenario(os.str());
}

void apply_override(ScenarioConfig& cfg, const std::string& assignment) {
    std::size_t eq = assignment.find('=');
    if (eq == std::string::npos)
        fail(Errc::config_invalid, "override '" + assignment + "': expected key=value");
    std::string key = trim(assignment.substr(0, eq));
    std::string value = trim(assignment.substr(eq + 1));
    set_key(cfg, key, value);
}

} // namespace stair
