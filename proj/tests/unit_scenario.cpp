// Copyright (c) 2026 the stairsim authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "stair/scenario.hpp"
#include "support/helpers.hpp"

using namespace stair;

namespace {

const char* k_minimal = R"(# two nodes, one per type
name = tiny
nodes = u1:5, v1:1500
seed = 9
max_ticks = 50
)";

} // namespace

TEST_SUITE("scenario") {

TEST_CASE("parsing fills fields and keeps defaults") {
    ScenarioConfig cfg = parse_scenario(k_minimal);
    CHECK(cfg.name == "tiny");
    REQUIRE(cfg.nodes.size() == 2);
    CHECK(cfg.nodes[0].id == "u1");
    CHECK(cfg.nodes[0].stake == 5);
    CHECK(cfg.nodes[1].stake == 1500);
    CHECK(cfg.seed == 9);
    CHECK(cfg.max_ticks == 50);
    CHECK(cfg.k == 2);               // default
    CHECK(cfg.latency_min == 1);     // default
    CHECK(cfg.checkpoint_interval == 100);
    CHECK(cfg.role_of(cfg.nodes[0]) == Role::user);
    CHECK(cfg.role_of(cfg.nodes[1]) == Role::validator);
    CHECK_NOTHROW(cfg.validate());
}

TEST_CASE("the full key set round-trips through echo") {
    ScenarioConfig cfg = parse_scenario(R"(
name = all_keys
nodes = u1:10, u2:20, v1:2000
faults = u2:silent_after:40, v1:equivocate:0.25
k = 2
seed = 77
max_ticks = 300
latency_min = 2
latency_max = 7
checkpoint_interval = 50
create_prob = 0.35
txn_fee = 1.25
ticks_per_day = 99
selection_mode = inverse
fee_mode = equal_split
stake_events = 50:u1:deposit:990, 100:v1:exit:1000
reporter_fraction = 0.10
epsilon = 1
lambda_days = 45
exit_lock_days = 30
points_per_finding = 2
)");
    CHECK(cfg.create_prob_pct == 35);
    CHECK(cfg.txn_fee == 125);
    CHECK(cfg.selection_mode == SelectionMode::inverse);
    CHECK(cfg.fee_mode == FeeMode::equal_split);
    REQUIRE(cfg.stake_events.size() == 2);
    CHECK(cfg.stake_events[0].checkpoint_frame == 50);
    CHECK(cfg.stake_events[0].account == "u1");
    CHECK(cfg.stake_events[0].kind == StakeMutation::Kind::deposit);
    CHECK(cfg.stake_events[1].kind == StakeMutation::Kind::exit_stake);
    REQUIRE(cfg.faults.size() == 2);
    CHECK(cfg.faults.at("u2").kind == FaultKind::silent_after);
    CHECK(cfg.faults.at("u2").param == 40);
    CHECK(cfg.faults.at("v1").kind == FaultKind::equivocate);
    CHECK(cfg.faults.at("v1").param == 25); // hundredths

    ScenarioConfig back = parse_scenario(cfg.echo());
    CHECK(back.echo() == cfg.echo());
    CHECK(back.nodes.size() == cfg.nodes.size());
    CHECK(back.stake_events == cfg.stake_events);
    CHECK(back.seed == cfg.seed);
}

TEST_CASE("overrides reuse the file syntax") {
    ScenarioConfig cfg = parse_scenario(k_minimal);
    apply_override(cfg, "seed=123");
    CHECK(cfg.seed == 123);
    apply_override(cfg, "max_ticks = 75");
    CHECK(cfg.max_ticks == 75);
    apply_override(cfg, "faults=u1:spam");
    CHECK(cfg.faults.at("u1").kind == FaultKind::spam);
    CHECK_THROWS_AS(apply_override(cfg, "nonsense_key=1"), Error);
    CHECK_THROWS_AS(apply_override(cfg, "no_equals_sign"), Error);
}

TEST_CASE("rejects are typed config errors") {
    auto rejects = [](const std::string& text) {
        try {
            ScenarioConfig cfg = parse_scenario(text);
            cfg.validate();
            return false;
        } catch (const Error& e) {
            return e.code() == Errc::config_invalid;
        }
    };
    CHECK(rejects("nodes = u1:1, v1:1000\nbogus = 1\n"));          // unknown key
    CHECK(rejects("nodes = u1:1\n"));                              // population of one
    CHECK(rejects("nodes = u1:1, u2:2\n"));                        // no validator
    CHECK(rejects("nodes = v1:1000, v2:2000\n"));                  // no user
    CHECK(rejects("nodes = u1:1, u1:3, v1:1000\n"));               // duplicate id
    CHECK(rejects("nodes = u1:-1, v1:1000\n"));                    // negative stake
    CHECK(rejects("nodes = u1:1, v1:1000\nk = 1\n"));              // bad k
    CHECK(rejects("nodes = u1:1, v1:1000\nlatency_min = 4\nlatency_max = 2\n"));
    CHECK(rejects("nodes = u1:1, v1:1000\nfaults = ghost:spam\n"));// unknown account
    CHECK(rejects("nodes = u1:1, v1:1000\nfaults = v1:equivocate:1.5\n")); // rate > 1
    CHECK(rejects("nodes = u1:1, v1:1000\nfaults = v1:equivocate:0\n"));   // rate 0
    CHECK(rejects("nodes = u1:1, v1:1000\nmax_ticks = 0\n"));
    CHECK(rejects("nodes = u1:1, v1:1000\ncreate_prob = 1.5\n"));
    CHECK(rejects("nodes = u1:1, v1:1000\nstake_events = 0:u1:deposit:5\n")); // frame 0
}

TEST_CASE("derived protocol params inherit the overrides") {
    ScenarioConfig cfg = parse_scenario(k_minimal);
    apply_override(cfg, "lambda_days=45");
    apply_override(cfg, "reporter_fraction=0.2");
    ProtocolParams p = cfg.to_params();
    CHECK(p.lambda_days == 45);
    CHECK(p.reporter_fraction_bp == 2000);
    CHECK(p.k == 2);
    CHECK_NOTHROW(p.validate());
}

} // TEST_SUITE
