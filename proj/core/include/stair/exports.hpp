// Copyright (c) 2026 the stairsim authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <vector>

#include "stair/consensus.hpp"

namespace stair {

// Plain-text run artifacts: writers used by the simulator and CLI, parsers
// used by the audit path. Parsers throw malformed_export with a line number.

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);
bool file_exists(const std::string& path);

std::vector<std::string> split_csv(const std::string& line);

struct DagRow {
    BlockId id;
    AccountId creator;
    std::uint64_t seq = 0;
    BlockId self_parent; // null when absent
    std::vector<BlockId> other_parents;
    std::uint64_t lamport = 0;
    Cents fee_total = 0;
    Role role = Role::observer;
};
std::vector<DagRow> parse_dag_csv(const std::string& text);

struct FinalRow {
    std::uint64_t position = 0;
    BlockId block;
    BlockId atropos;
    Frame frame = 0;
    std::uint64_t lamport = 0;
};
std::vector<FinalRow> parse_finality_log(const std::string& text);
std::string render_finality_log(const std::vector<FinalEntry>& log);

struct RootRow {
    BlockId id;
    AccountId creator;
    Frame frame = 0;
    Tokens weight = 0;
    Tokens election_score = 0;
    std::string fame;
};
std::vector<RootRow> parse_roots_csv(const std::string& text);
std::string render_roots_csv(const std::vector<ConsensusEngine::RootView>& roots);
std::string to_string(FameState f);

struct RewardLine {
    Day day = 0;
    std::string account; // account id or POOL / SPV / REMAINDER
    Cents col[5] = {0, 0, 0, 0, 0};
};
std::vector<RewardLine> parse_rewards_csv(const std::string& text);

std::map<AccountId, std::int64_t> parse_saga_csv(const std::string& text);

struct LedgerRow {
    AccountId id;
    Tokens tokens_held = 0;
    Tokens txn_staked = 0;
    Tokens validation_staked = 0;
    Tokens delegated_in = 0;
    std::string role;
    Tokens power = 0;
};
std::vector<LedgerRow> parse_ledger_csv(const std::string& text);

std::vector<std::pair<std::string, std::string>> parse_kv(const std::string& text);

} // namespace stair
