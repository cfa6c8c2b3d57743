// Copyright (c) 2026 the stairsim authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "stair/consensus.hpp"
#include "stair/event_block.hpp"
#include "stair/exports.hpp"
#include "stair/gossip.hpp"
#include "stair/stake_ledger.hpp"
#include "stair/xdag.hpp"

namespace stair::test {

// the five-account population used throughout: W = 3003, 2W/3 floor = 2002
inline StakeLedger fig4_ledger(const ProtocolParams& p = {}) {
    StakeLedger ledger(p);
    ledger.add_account("u1", 1);
    ledger.add_account("u2", 1);
    ledger.add_account("u3", 1);
    ledger.add_account("v1k", 1000);
    ledger.add_account("v2k", 2000);
    return ledger;
}

// hand-built DAG with named blocks, fed straight into one engine
struct HandDag {
    XDag dag;
    ConsensusEngine engine;
    std::map<std::string, BlockPtr> named;
    int k;

    explicit HandDag(const StakeLedger& genesis, ProtocolParams p = {},
                     std::vector<StakeMutation> queued = {}, ConsensusEngine::Options opts = {})
        : engine(dag, p, genesis, std::move(queued), opts), k(p.k) {}

    const EventBlock* get(const std::string& name) const {
        auto it = named.find(name);
        if (it == named.end()) throw std::logic_error("no block named " + name);
        return it->second.get();
    }
    BlockId id(const std::string& name) const { return get(name)->id; }

    BlockPtr leaf(const std::string& name, const AccountId& creator, Role role) {
        BlockPtr b = create_leaf(creator, role, {});
        admit(name, b);
        return b;
    }

    BlockPtr block(const std::string& name, const AccountId& creator, Role role,
                   const std::string& self, const std::vector<std::string>& others,
                   Tokens fee = 0) {
        std::vector<const EventBlock*> tops;
        tops.reserve(others.size());
        for (const auto& o : others)
            tops.push_back(get(o));
        std::vector<Transaction> txns;
        if (fee > 0) txns.push_back({"t", fee});
        BlockPtr b = create_event(creator, role, get(self), tops, std::move(txns), k);
        admit(name, b);
        return b;
    }

    void admit(const std::string& name, BlockPtr b) {
        auto r = dag.insert(b);
        if (r.status != XDag::InsertStatus::inserted &&
            r.status != XDag::InsertStatus::fork_detected)
            throw std::logic_error("insert of " + name + " failed: " + r.detail);
        engine.on_inserted(*b);
        named.emplace(name, std::move(b));
    }
};

struct TempDir {
    std::filesystem::path path;

    TempDir() {
        static int counter = 0;
        auto base = std::filesystem::temp_directory_path();
        for (int i = 0; i < 10000; ++i) {
            auto p = base / ("stair_t" + std::to_string(++counter) + "_" + std::to_string(i));
            std::error_code ec;
            if (std::filesystem::create_directory(p, ec)) {
                path = p;
                return;
            }
        }
        throw std::runtime_error("could not create a temp directory");
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    std::string str() const { return path.string(); }
};

inline void write_bundle(const std::filesystem::path& dir, const RunOutputs& out) {
    write_text_file((dir / "dag.csv").string(), out.dag_csv);
    write_text_file((dir / "roots.csv").string(), out.roots_csv);
    write_text_file((dir / "rewards.csv").string(), out.rewards_csv);
    write_text_file((dir / "saga.csv").string(), out.saga_csv);
    write_text_file((dir / "ledger.csv").string(), out.ledger_csv);
    for (const auto& [node, log] : out.finality_logs)
        write_text_file((dir / ("finality_" + node + ".log")).string(), log);
}

inline ScenarioConfig fig4_config(std::uint64_t seed = 42, std::int64_t ticks = 400) {
    ScenarioConfig cfg;
    cfg.name = "fig4";
    cfg.nodes = {{"u1", 1}, {"u2", 1}, {"u3", 1}, {"v1k", 1000}, {"v2k", 2000}};
    cfg.seed = seed;
    cfg.max_ticks = ticks;
    cfg.txn_fee = 25;
    cfg.ticks_per_day = 100;
    cfg.create_prob_pct = 60;
    return cfg;
}

} // namespace stair::test
