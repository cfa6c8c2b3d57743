// Copyright (c) 2026 the stairsim authors
// SPDX-License-Identifier: Apache-2.0
#include "stair/exports.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "stair/money.hpp"

namespace stair {

namespace {

[[noreturn]] void bad_line(std::size_t lineno, const std::string& why) {
    fail(Errc::malformed_export, "line " + std::to_string(lineno) + ": " + why);
}

std::int64_t to_int(const std::string& v, std::size_t lineno) {
    std::int64_t n = 0;
    auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), n);
    if (ec != std::errc{} || p != v.data() + v.size()) bad_line(lineno, "not an integer: '" + v + "'");
    return n;
}

std::uint64_t to_uint(const std::string& v, std::size_t lineno) {
    std::uint64_t n = 0;
    auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), n);
    if (ec != std::errc{} || p != v.data() + v.size())
        bad_line(lineno, "not an unsigned integer: '" + v + "'");
    return n;
}

BlockId to_id(const std::string& v, std::size_t lineno) {
    auto id = BlockId::from_hex(v);
    if (!id) bad_line(lineno, "not a block id: '" + v + "'");
    return *id;
}

Cents to_cents(const std::string& v, std::size_t lineno) {
    std::optional<Cents> c = parse_cents(v);
    if (!c) bad_line(lineno, "not a money amount: '" + v + "'");
    return *c;
}

// iterate data lines, skipping the header and blank lines
template <typename Fn> void each_line(const std::string& text, Fn&& fn) {
    std::stringstream ss(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        fn(line, lineno);
    }
}

} // namespace

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(Errc::malformed_export, "cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::filesystem::path p(path);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail(Errc::malformed_export, "cannot write '" + path + "'");
    out << content;
}

bool file_exists(const std::string& path) {
    std::error_code ec;
    return std::filesystem::is_regular_file(path, ec);
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::size_t begin = 0;
    while (true) {
        std::size_t comma = line.find(',', begin);
        if (comma == std::string::npos) {
            out.push_back(line.substr(begin));
            return out;
        }
        out.push_back(line.substr(begin, comma - begin));
        begin = comma + 1;
    }
}

std::vector<DagRow> parse_dag_csv(const std::string& text) {
    std::vector<DagRow> rows;
    each_line(text, [&](const std::string& line, std::size_t lineno) {
        auto f = split_csv(line);
        // 4 head fields, at least one other-parent slot, 3 tail fields
        if (f.size() < 8) bad_line(lineno, "expected at least 8 fields");
        DagRow r;
        r.id = to_id(f[0], lineno);
        r.creator = f[1];
        if (r.creator.empty()) bad_line(lineno, "empty creator");
        r.seq = to_uint(f[2], lineno);
        if (f[3] != "-") r.self_parent = to_id(f[3], lineno);
        for (std::size_t i = 4; i + 3 < f.size(); ++i) {
            if (f[i] == "-") continue;
            r.other_parents.push_back(to_id(f[i], lineno));
        }
        r.lamport = to_uint(f[f.size() - 3], lineno);
        r.fee_total = to_int(f[f.size() - 2], lineno);
        auto role = role_from_string(f[f.size() - 1]);
        if (!role) bad_line(lineno, "bad role: '" + f[f.size() - 1] + "'");
        r.role = *role;
        rows.push_back(std::move(r));
    });
    return rows;
}

std::vector<FinalRow> parse_finality_log(const std::string& text) {
    std::vector<FinalRow> rows;
    each_line(text, [&](const std::string& line, std::size_t lineno) {
        auto f = split_csv(line);
        if (f.size() != 5) bad_line(lineno, "expected 5 fields");
        FinalRow r;
        r.position = to_uint(f[0], lineno);
        r.block = to_id(f[1], lineno);
        r.atropos = to_id(f[2], lineno);
        r.frame = to_int(f[3], lineno);
        r.lamport = to_uint(f[4], lineno);
        rows.push_back(r);
    });
    return rows;
}

std::string render_finality_log(const std::vector<FinalEntry>& log) {
    std::string out = "# position,block_id,atropos_id,frame,lamport_ts\n";
    for (const auto& e : log) {
        out += std::to_string(e.position);
        out += ',';
        out += e.block.hex();
        out += ',';
        out += e.atropos.hex();
        out += ',';
        out += std::to_string(e.frame);
        out += ',';
        out += std::to_string(e.lamport);
        out += '\n';
    }
    return out;
}

std::string to_string(FameState f) {
    switch (f) {
    case FameState::undecided: return "undecided";
    case FameState::famous: return "famous";
    case FameState::not_famous: return "not-famous";
    }
    return "undecided";
}

std::vector<RootRow> parse_roots_csv(const std::string& text) {
    std::vector<RootRow> rows;
    each_line(text, [&](const std::string& line, std::size_t lineno) {
        auto f = split_csv(line);
        if (f.size() != 6) bad_line(lineno, "expected 6 fields");
        RootRow r;
        r.id = to_id(f[0], lineno);
        r.creator = f[1];
        r.frame = to_int(f[2], lineno);
        r.weight = to_int(f[3], lineno);
        r.election_score = to_int(f[4], lineno);
        r.fame = f[5];
        if (r.fame != "undecided" && r.fame != "famous" && r.fame != "not-famous")
            bad_line(lineno, "bad fame: '" + r.fame + "'");
        rows.push_back(std::move(r));
    });
    return rows;
}

std::string render_roots_csv(const std::vector<ConsensusEngine::RootView>& roots) {
    std::string out = "# id,creator,frame,weight,election_score,fame\n";
    for (const auto& r : roots) {
        out += r.id.hex();
        out += ',';
        out += r.creator;
        out += ',';
        out += std::to_string(r.frame);
        out += ',';
        out += std::to_string(r.weight);
        out += ',';
        out += std::to_string(r.election_score);
        out += ',';
        out += to_string(r.fame);
        out += '\n';
    }
    return out;
}

std::vector<RewardLine> parse_rewards_csv(const std::string& text) {
    std::vector<RewardLine> rows;
    each_line(text, [&](const std::string& line, std::size_t lineno) {
        auto f = split_csv(line);
        if (f.size() != 7) bad_line(lineno, "expected 7 fields");
        RewardLine r;
        r.day = to_int(f[0], lineno);
        r.account = f[1];
        if (r.account.empty()) bad_line(lineno, "empty account");
        for (int i = 0; i < 5; ++i)
            r.col[i] = to_cents(f[2 + i], lineno);
        rows.push_back(std::move(r));
    });
    return rows;
}

std::map<AccountId, std::int64_t> parse_saga_csv(const std::string& text) {
    std::map<AccountId, std::int64_t> out;
    each_line(text, [&](const std::string& line, std::size_t lineno) {
        auto f = split_csv(line);
        if (f.size() != 2) bad_line(lineno, "expected 2 fields");
        if (f[0].empty()) bad_line(lineno, "empty account");
        if (out.contains(f[0])) bad_line(lineno, "duplicate account '" + f[0] + "'");
        out[f[0]] = to_int(f[1], lineno);
    });
    return out;
}

std::vector<LedgerRow> parse_ledger_csv(const std::string& text) {
    std::vector<LedgerRow> rows;
    each_line(text, [&](const std::string& line, std::size_t lineno) {
        auto f = split_csv(line);
        if (f.size() != 7) bad_line(lineno, "expected 7 fields");
        LedgerRow r;
        r.id = f[0];
        if (r.id.empty()) bad_line(lineno, "empty account id");
        r.tokens_held = to_int(f[1], lineno);
        r.txn_staked = to_int(f[2], lineno);
        r.validation_staked = to_int(f[3], lineno);
        r.delegated_in = to_int(f[4], lineno);
        r.role = f[5];
        r.power = to_int(f[6], lineno);
        rows.push_back(std::move(r));
    });
    return rows;
}

std::vector<std::pair<std::string, std::string>> parse_kv(const std::string& text) {
    std::vector<std::pair<std::string, std::string>> out;
    each_line(text, [&](const std::string& line, std::size_t lineno) {
        std::size_t eq = line.find('=');
        if (eq == std::string::npos) bad_line(lineno, "expected key=value");
        out.emplace_back(line.substr(0, eq), line.substr(eq + 1));
    });
    return out;
}

} // namespace stair
