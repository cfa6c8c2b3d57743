// Copyright (c) 2026 the stairsim authors
// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include <map>
#include <string>
#include <vector>

#include "stair/gossip.hpp"
#include "stair/rng.hpp"
#include "stair/scenario.hpp"
#include "stair/xdag.hpp"

using namespace stair;

namespace {

// deterministic weave over six creators, adjacent indices alternate roles so
// the cross-type rule is always satisfiable with k = 2
std::vector<BlockPtr> make_chain(std::size_t n_blocks) {
    const std::size_t n = 6;
    std::vector<AccountId> ids;
    std::vector<Role> roles;
    std::vector<BlockPtr> blocks;
    std::map<AccountId, BlockPtr> top;
    for (std::size_t i = 0; i < n; ++i) {
        ids.push_back("c" + std::to_string(i));
        roles.push_back(i % 2 ? Role::user : Role::validator);
        top[ids[i]] = create_leaf(ids[i], roles[i], {});
        blocks.push_back(top[ids[i]]);
    }
    for (std::size_t step = 0; blocks.size() < n_blocks; ++step) {
        std::size_t i = step % n;
        std::size_t j = (i + 1) % n;
        BlockPtr b = create_event(ids[i], roles[i], top[ids[i]].get(), {top[ids[j]].get()}, {}, 2);
        top[ids[i]] = b;
        blocks.push_back(b);
    }
    return blocks;
}

void bm_xdag_insert(benchmark::State& state) {
    auto blocks = make_chain(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        XDag dag;
        for (const auto& b : blocks)
            benchmark::DoNotOptimize(dag.insert(b));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(blocks.size()));
}
BENCHMARK(bm_xdag_insert)->Arg(256)->Arg(2048);

void bm_validation_score(benchmark::State& state) {
    auto blocks = make_chain(static_cast<std::size_t>(state.range(0)));
    XDag dag;
    for (const auto& b : blocks)
        dag.insert(b);
    for (std::size_t i = 0; i < 6; ++i)
        dag.register_root(0, blocks[i]->id, blocks[i]->creator, 1000);
    const BlockId tip = blocks.back()->id;
    for (auto _ : state)
        benchmark::DoNotOptimize(dag.validation_score(tip, 0));
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(bm_validation_score)->Arg(2048);

void bm_scenario_run(benchmark::State& state) {
    ScenarioConfig cfg;
    cfg.name = "bench";
    cfg.nodes = {{"u1", 1}, {"u2", 1}, {"u3", 1}, {"v1k", 1000}, {"v2k", 2000}};
    cfg.k = 2;
    cfg.seed = 9;
    cfg.max_ticks = state.range(0);
    cfg.create_prob_pct = 60;
    cfg.txn_fee = 25;
    cfg.ticks_per_day = 100;
    cfg.validate();
    for (auto _ : state) {
        RunOutputs out = run_scenario(cfg);
        benchmark::DoNotOptimize(out.dag_csv.size());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(bm_scenario_run)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);

void bm_peer_selection(benchmark::State& state) {
    std::vector<PeerCandidate> candidates;
    for (int i = 0; i < 48; ++i) {
        bool validator = i % 3 == 0;
        candidates.push_back({(validator ? "v" : "u") + std::to_string(i),
                              validator ? Role::validator : Role::user,
                              validator ? 1000 * (1 + i % 4) : 1 + i});
    }
    Rng rng(7);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            k_peer_selection(Role::user, candidates, rng, 4, SelectionMode::proportional));
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(bm_peer_selection);

} // namespace

BENCHMARK_MAIN();
