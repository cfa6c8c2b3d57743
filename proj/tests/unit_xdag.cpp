// Copyright (c) 2026 the stairsim authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>

#include "stair/event_block.hpp"
#include "stair/exports.hpp"
#include "stair/xdag.hpp"
#include "support/helpers.hpp"

using namespace stair;

TEST_SUITE("xdag") {

TEST_CASE("block ids are a pure function of content") {
    BlockPtr a = create_leaf("u1", Role::user, {});
    BlockPtr b = create_leaf("u1", Role::user, {});
    BlockPtr c = create_leaf("u2", Role::user, {});
    CHECK(a->id == b->id);
    CHECK(a->id != c->id);
    CHECK(a->is_leaf());
    CHECK(a->lamport_ts == 0);
    CHECK(a->seq == 0);
}

TEST_CASE("event construction enforces the cross-type rule") {
    BlockPtr lu = create_leaf("u1", Role::user, {});
    BlockPtr lu2 = create_leaf("u2", Role::user, {});
    BlockPtr lv = create_leaf("v1", Role::validator, {});
    BlockPtr lv2 = create_leaf("v2", Role::validator, {});

    // k=2: the single other-parent must be the opposite type
    CHECK_NOTHROW((void)create_event("u1", Role::user, lu.get(), {lv.get()}, {}, 2));
    CHECK_THROWS_AS((void)create_event("u1", Role::user, lu.get(), {lu2.get()}, {}, 2), Error);
    CHECK_THROWS_AS((void)create_event("v1", Role::validator, lv.get(), {lv2.get()}, {}, 2), Error);

    // k=3: one same-type reference is fine as long as one crosses
    BlockPtr lv3 = create_leaf("v3", Role::validator, {});
    CHECK_NOTHROW((void)create_event("u1", Role::user, lu.get(), {lv.get(), lu2.get()}, {}, 3));
    CHECK_THROWS_AS((void)create_event("v1", Role::validator, lv.get(), {lv2.get(), lv3.get()}, {}, 3),
                    Error);
}

TEST_CASE("event construction rejects malformed parent sets") {
    BlockPtr lu = create_leaf("u1", Role::user, {});
    BlockPtr lv = create_leaf("v1", Role::validator, {});
    BlockPtr lv2 = create_leaf("v2", Role::validator, {});
    BlockPtr lu3 = create_leaf("u3", Role::user, {});

    // wrong arity for k
    CHECK_THROWS_AS((void)create_event("u1", Role::user, lu.get(), {lv.get(), lv2.get()}, {}, 2),
                    Error);
    CHECK_THROWS_AS((void)create_event("u1", Role::user, lu.get(), {}, {}, 2), Error);
    // no self-parent
    CHECK_THROWS_AS((void)create_event("u1", Role::user, nullptr, {lv.get()}, {}, 2), Error);
    // two other-parents by one creator
    CHECK_THROWS_AS(
        (void)create_event("u1", Role::user, lu.get(), {lv.get(), lv.get()}, {}, 3), Error);
    // own block among the other-parents
    BlockPtr u1b = create_event("u1", Role::user, lu.get(), {lv.get()}, {}, 2);
    CHECK_THROWS_AS((void)create_event("u1", Role::user, u1b.get(), {lu3.get(), u1b.get()}, {}, 3),
                    Error);
}

TEST_CASE("lamport and seq advance along parents") {
    BlockPtr lu = create_leaf("u1", Role::user, {});
    BlockPtr lv = create_leaf("v1", Role::validator, {});
    BlockPtr b1 = create_event("u1", Role::user, lu.get(), {lv.get()}, {}, 2);
    BlockPtr b2 = create_event("v1", Role::validator, lv.get(), {b1.get()}, {}, 2);
    CHECK(b1->seq == 1);
    CHECK(b1->lamport_ts == 1);
    CHECK(b2->lamport_ts == 2);
    CHECK(b2->self_parent == lv->id);
}

TEST_CASE("insert statuses cover the contract") {
    XDag dag;
    BlockPtr lu = create_leaf("u1", Role::user, {});
    BlockPtr lv = create_leaf("v1", Role::validator, {});
    BlockPtr child = create_event("u1", Role::user, lu.get(), {lv.get()}, {}, 2);

    CHECK(dag.insert(child).status == XDag::InsertStatus::missing_parents);
    CHECK(dag.insert(lu).status == XDag::InsertStatus::inserted);
    CHECK(dag.insert(lu).status == XDag::InsertStatus::duplicate);
    CHECK(dag.insert(lv).status == XDag::InsertStatus::inserted);
    CHECK(dag.insert(child).status == XDag::InsertStatus::inserted);
    CHECK(dag.size() == 3);
    CHECK(dag.contains(child->id));
    CHECK(dag.tops().at("u1") == child->id);
    CHECK(dag.height_of("u1") == 1);
    CHECK(dag.height_of("v1") == 0);
    CHECK(dag.other_children(lv->id) == std::vector<BlockId>{child->id});
    CHECK(dag.blocks_of_creator_above("u1", 0).size() == 1);
}

TEST_CASE("equivocation is flagged as a fork") {
    XDag dag;
    BlockPtr lu = create_leaf("u1", Role::user, {});
    BlockPtr lv = create_leaf("v1", Role::validator, {});
    BlockPtr lu2 = create_leaf("u2", Role::user, {});
    dag.insert(lu);
    dag.insert(lv);
    dag.insert(lu2);
    BlockPtr a = create_event("v1", Role::validator, lv.get(), {lu.get()}, {}, 2);
    BlockPtr b = create_event("v1", Role::validator, lv.get(), {lu2.get()}, {}, 2);
    CHECK(dag.insert(a).status == XDag::InsertStatus::inserted);
    auto r = dag.insert(b);
    CHECK(r.status == XDag::InsertStatus::fork_detected);
    REQUIRE(dag.forks().size() == 1);
    CHECK(dag.forks()[0].creator == "v1");
    CHECK(dag.forks()[0].seq == 1);
    CHECK(dag.forks()[0].a == a->id);
    CHECK(dag.is_flagged("v1"));
    CHECK_FALSE(dag.is_flagged("u1"));
    CHECK(dag.flagged_creators() == std::vector<AccountId>{"v1"});
    // first-seen branch keeps the top
    CHECK(dag.tops().at("v1") == a->id);
}

TEST_CASE("reachable roots and validation scores count the cone") {
    test::HandDag h(test::fig4_ledger());
    h.leaf("Lu1", "u1", Role::user);
    h.leaf("Lu2", "u2", Role::user);
    h.leaf("Lv1k", "v1k", Role::validator);
    h.leaf("Lv2k", "v2k", Role::validator);
    h.block("a", "u1", Role::user, "Lu1", {"Lv2k"});
    h.block("b", "v1k", Role::validator, "Lv1k", {"a"});

    // the engine registered every leaf as a frame-0 root
    auto score = [&](const std::string& n) { return h.dag.validation_score(h.id(n), 0); };
    CHECK(score("Lu1") == 1);
    CHECK(score("a") == 2001); // own leaf + v2k's
    CHECK(score("b") == 3001); // everything but u2
    CHECK(score("Lu2") == 1);

    auto roots = h.dag.reachable_roots(h.id("b"), 0);
    CHECK(roots.size() == 3);
    CHECK(roots.contains(h.id("Lu1")));
    CHECK(roots.contains(h.id("Lv1k")));
    CHECK(roots.contains(h.id("Lv2k")));
    CHECK_FALSE(roots.contains(h.id("Lu2")));

    CHECK_THROWS_AS((void)h.dag.roots_of(7), Error);
    CHECK(h.dag.frame_known(0));
    // b's 3001 cone crossed the 2/3 line, so the engine opened frame 1
    CHECK(h.dag.frame_known(1));
    CHECK_FALSE(h.dag.frame_known(2));
}

TEST_CASE("a visible fork pair disqualifies that creator's roots") {
    test::HandDag h(test::fig4_ledger());
    h.leaf("Lu1", "u1", Role::user);
    h.leaf("Lu2", "u2", Role::user);
    h.leaf("Lv2k", "v2k", Role::validator);
    // v2k equivocates at seq 1
    h.block("f_a", "v2k", Role::validator, "Lv2k", {"Lu1"});
    auto fb = create_event("v2k", Role::validator, h.get("Lv2k"), {h.get("Lu2")}, {}, 2);
    h.admit("f_b", fb);
    // u1 sees only branch a: v2k's leaf still counts
    h.block("x", "u1", Role::user, "Lu1", {"f_a"});
    CHECK(h.dag.validation_score(h.id("x"), 0) == 2001);
    // u2 sees both branches: v2k's root is excluded from its count
    h.block("y1", "u2", Role::user, "Lu2", {"f_a"});
    h.block("y2", "u2", Role::user, "y1", {"f_b"});
    CHECK(h.dag.validation_score(h.id("y2"), 0) == 2); // u1 + u2, nothing from v2k
}

TEST_CASE("topological order sorts by lamport then id") {
    test::HandDag h(test::fig4_ledger());
    h.leaf("Lu1", "u1", Role::user);
    h.leaf("Lv1k", "v1k", Role::validator);
    h.block("a", "u1", Role::user, "Lu1", {"Lv1k"});
    h.block("b", "v1k", Role::validator, "Lv1k", {"a"});
    std::vector<BlockId> ids = {h.id("b"), h.id("a"), h.id("Lu1"), h.id("Lv1k")};
    auto sorted = h.dag.topological_order(ids);
    REQUIRE(sorted.size() == 4);
    CHECK(sorted[0] == std::min(h.id("Lu1"), h.id("Lv1k")));
    CHECK(sorted[1] == std::max(h.id("Lu1"), h.id("Lv1k")));
    CHECK(sorted[2] == h.id("a"));
    CHECK(sorted[3] == h.id("b"));
}

TEST_CASE("csv export round-trips") {
    test::HandDag h(test::fig4_ledger());
    h.leaf("Lu1", "u1", Role::user);
    h.leaf("Lv1k", "v1k", Role::validator);
    h.block("a", "u1", Role::user, "Lu1", {"Lv1k"}, 25);
    auto rows = parse_dag_csv(h.dag.export_csv());
    REQUIRE(rows.size() == 3);
    const DagRow* a = nullptr;
    for (const auto& r : rows)
        if (r.id == h.id("a")) a = &r;
    REQUIRE(a != nullptr);
    CHECK(a->creator == "u1");
    CHECK(a->seq == 1);
    CHECK(a->self_parent == h.id("Lu1"));
    REQUIRE(a->other_parents.size() == 1);
    CHECK(a->other_parents[0] == h.id("Lv1k"));
    CHECK(a->fee_total == 25);
    CHECK(a->role == Role::user);
    CHECK_THROWS_AS((void)parse_dag_csv("# header\nnot,enough\n"), Error);
}

} // TEST_SUITE
