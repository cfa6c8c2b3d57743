// Copyright (c) 2026 the stairsim authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "stair/exports.hpp"
#include "stair/rewards.hpp"
#include "support/helpers.hpp"

using namespace stair;

TEST_SUITE("rewards") {

TEST_CASE("saga points go to other-children of new atroposes, once") {
    test::HandDag h(test::fig4_ledger());
    h.leaf("Lu1", "u1", Role::user);
    h.leaf("Lv1k", "v1k", Role::validator);
    h.leaf("Lv2k", "v2k", Role::validator);
    h.block("a", "v1k", Role::validator, "Lv1k", {"Lu1"});
    h.block("b", "v2k", Role::validator, "Lv2k", {"Lu1"});
    h.block("c", "u1", Role::user, "Lu1", {"a"});

    SagaLedger saga;
    CHECK(award_saga_points(saga, {h.id("Lu1")}, h.dag) == 2); // a and b reference it
    CHECK(saga.points_of("v1k") == 1);
    CHECK(saga.points_of("v2k") == 1);
    CHECK(saga.points_of("u1") == 0);
    // a second atropos list touching the same children pays nothing new
    CHECK(award_saga_points(saga, {h.id("Lu1"), h.id("a")}, h.dag) == 1); // only c is new
    CHECK(saga.points_of("u1") == 1);
    CHECK(saga.points_of("v1k") == 1);
}

TEST_CASE("validation pool splits by saga points times power") {
    StakeLedger ledger = test::fig4_ledger();
    SagaLedger saga;
    saga.points["v1k"] = 2; // alpha*w = 2000
    saga.points["v2k"] = 1; // alpha*w = 2000
    saga.points["u1"] = 3;  // alpha*w = 3
    RewardStatement st;
    distribute_validation_rewards(st, 4000, saga, ledger);
    CHECK(st.pool == 4000);
    CHECK(st.rows["v1k"].validation_reward == 1998); // floor(4000*2000/4003)
    CHECK(st.rows["v2k"].validation_reward == 1998);
    CHECK(st.rows["u1"].validation_reward == 2);     // floor(4000*3/4003)
    CHECK(st.spv == 2);                              // rounding dust
    CHECK(st.remainder == 0);
    CHECK(st.conserved());
}

TEST_CASE("an unclaimable pool lands in the remainder") {
    StakeLedger ledger = test::fig4_ledger();
    SagaLedger saga; // nobody has points
    RewardStatement st;
    distribute_validation_rewards(st, 1000, saga, ledger);
    CHECK(st.remainder == 1000);
    CHECK(st.credit_total() == 0);
    CHECK(st.conserved());
}

TEST_CASE("delegators get their share net of commission") {
    StakeLedger ledger{ProtocolParams{}};
    ledger.add_account("v", 1000);
    ledger.add_account("d", 600);
    ledger.delegate("d", "v", 500, 30);

    RewardStatement st;
    split_with_delegators(st, "v", 15000, CreditColumn::validation, ledger, ledger.params());
    // attributable = 15000 * 500/1500 = 5000; commission 15% of it = 750
    CHECK(st.rows["d"].delegation_share == 4250);
    CHECK(st.rows["v"].commission == 750);
    CHECK(st.rows["v"].validation_reward == 10000);
    CHECK(st.credit_total() == 15000);
}

TEST_CASE("a validator with no delegators keeps the whole credit") {
    StakeLedger ledger = test::fig4_ledger();
    RewardStatement st;
    split_with_delegators(st, "v2k", 777, CreditColumn::fees, ledger, ledger.params());
    CHECK(st.rows["v2k"].fees == 777);
    CHECK(st.rows["v2k"].commission == 0);
}

TEST_CASE("creator fee routing takes the spv cut off the top") {
    StakeLedger ledger = test::fig4_ledger();
    BlockPtr leaf = create_leaf("v2k", Role::validator, {{"t", 100}});
    RewardStatement st;
    route_transaction_fees(st, {leaf}, ledger, FeeMode::creator, ledger.params());
    CHECK(st.fees_collected == 100);
    CHECK(st.spv == 30); // phi = 30%
    CHECK(st.rows["v2k"].fees == 70);
    CHECK(st.conserved());
}

TEST_CASE("equal split fee routing spreads the pot") {
    StakeLedger ledger = test::fig4_ledger();
    BlockPtr leaf = create_leaf("v2k", Role::validator, {{"t", 103}});
    RewardStatement st;
    route_transaction_fees(st, {leaf}, ledger, FeeMode::equal_split, ledger.params());
    CHECK(st.fees_collected == 103);
    // cut = floor(103*0.3) = 30, pot 73, five ways 14 each, 3 back to spv
    for (const char* id : {"u1", "u2", "u3", "v1k", "v2k"})
        CHECK(st.rows[id].fees == 14);
    CHECK(st.spv == 33);
    CHECK(st.conserved());
}

TEST_CASE("burning a flagged deposit pays the reporter a tenth") {
    StakeLedger ledger{ProtocolParams{}};
    ledger.add_account("bad", 5000);
    ledger.add_account("obs", 0);
    ledger.stake_tokens("bad", StakeKind::validation, 5000);

    RewardStatement st;
    BurnOutcome out = burn_deposit(st, ledger, "bad", AccountId{"obs"}, ledger.params(), true);
    CHECK(out.burned == 5000);
    CHECK(out.bounty == 500);
    CHECK(out.destroyed == 4500);
    CHECK(ledger.account("bad").tokens_held == 0);
    CHECK(ledger.account("bad").validation_staked == 0);
    CHECK(ledger.account("obs").tokens_held == 500);
    CHECK(st.burned_stake == 500000); // cents
    CHECK(st.rows["bad"].burn == 450000);
    CHECK(st.rows["obs"].commission == 50000);
    CHECK(st.conserved());

    // without evidence the call is refused
    try {
        (void)burn_deposit(st, ledger, "bad", std::nullopt, ledger.params(), false);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::not_flagged);
    }
}

TEST_CASE("a burn without a reporter destroys everything") {
    StakeLedger ledger{ProtocolParams{}};
    ledger.add_account("bad", 900);
    ledger.stake_tokens("bad", StakeKind::validation, 900);
    RewardStatement st;
    BurnOutcome out = burn_deposit(st, ledger, "bad", std::nullopt, ledger.params(), true);
    CHECK(out.burned == 900);
    CHECK(out.bounty == 0);
    CHECK(out.destroyed == 900);
    CHECK(st.conserved());
}

TEST_CASE("statements render and parse back") {
    StakeLedger ledger = test::fig4_ledger();
    SagaLedger saga;
    saga.points["v2k"] = 1;
    RewardStatement st;
    st.day = 3;
    distribute_validation_rewards(st, 68'242'546, saga, ledger);
    std::string csv = render_rewards_csv({st});
    auto lines = parse_rewards_csv(csv);
    REQUIRE(lines.size() >= 3);
    CHECK(lines[0].account == "POOL");
    CHECK(lines[0].day == 3);
    CHECK(lines[0].col[0] == 68'242'546);
    bool saw_spv = false, saw_v2k = false;
    for (const auto& l : lines) {
        if (l.account == "SPV") saw_spv = true;
        if (l.account == "v2k") {
            saw_v2k = true;
            CHECK(l.col[0] == 68'242'546); // only eligible account takes it all
        }
    }
    CHECK(saw_spv);
    CHECK(saw_v2k);
    CHECK_THROWS_AS((void)parse_rewards_csv("# h\n1,x,bad-cents,0,0,0,0\n"), Error);
}

} // TEST_SUITE
