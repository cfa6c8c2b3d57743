// Copyright (c) 2026 the stairsim authors
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance gate: twelve end-to-end criteria, one pass/fail line each.
// Everything here re-derives its expectations independently (brute-force
// oracles, artifact recounts, statistical bounds) rather than trusting the
// library's own bookkeeping.

#include <algorithm>
#include <cstdint>
#include <exception>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "stair/exports.hpp"
#include "stair/gossip.hpp"
#include "stair/money.hpp"
#include "stair/observer.hpp"
#include "stair/params.hpp"
#include "stair/power_schedule.hpp"
#include "stair/rewards.hpp"
#include "stair/rng.hpp"
#include "stair/scenario.hpp"
#include "stair/stake_ledger.hpp"
#include "stair/xdag.hpp"
#include "support/random_dag.hpp"

using namespace stair;

namespace {

struct check_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& msg) {
    if (!ok) throw check_failure(msg);
}

ScenarioConfig scenario(const std::string& name) {
    return load_scenario(std::string(STAIR_SCENARIO_DIR) + "/" + name + ".cfg");
}

std::string metric(const RunOutputs& out, const std::string& key) {
    for (const auto& [k, v] : out.metrics)
        if (k == key) return v;
    throw check_failure("metric " + key + " missing from run report");
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::string join_lines(const std::vector<std::string>& lines) {
    std::string out;
    for (const auto& l : lines) {
        out += l;
        out += '\n';
    }
    return out;
}

bool is_data(const std::string& line) { return !line.empty() && line[0] != '#'; }

std::vector<std::size_t> data_rows(const std::vector<std::string>& lines) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < lines.size(); ++i)
        if (is_data(lines[i])) idx.push_back(i);
    return idx;
}

std::string join_csv(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += fields[i];
    }
    return out;
}

// the same shape load_export_dir builds, but straight from run output strings
ExportBundle to_bundle(const RunOutputs& out) {
    ExportBundle b;
    b.dag = parse_dag_csv(out.dag_csv);
    b.roots = parse_roots_csv(out.roots_csv);
    b.has_roots = true;
    b.rewards = parse_rewards_csv(out.rewards_csv);
    b.has_rewards = true;
    b.saga = parse_saga_csv(out.saga_csv);
    b.has_saga = true;
    auto logs = out.finality_logs;
    std::sort(logs.begin(), logs.end());
    for (const auto& [node, text] : logs)
        b.logs.emplace_back(node, parse_finality_log(text));
    return b;
}

Tokens genesis_power(const ScenarioConfig& cfg) {
    ProtocolParams p = cfg.to_params();
    Tokens total = 0;
    for (const NodeSpec& n : cfg.nodes)
        total += validating_power(n.stake, p);
    return total;
}

// ---- criterion 1: power function and the block reward window ----

void c1_power_and_reward_window() {
    ProtocolParams p;
    const std::pair<Tokens, Tokens> table[] = {
        {0, 0},     {1, 1},       {2, 1},      {999, 1},    {1000, 1000}, {1001, 1000},
        {1999, 1000}, {2000, 2000}, {2500, 2000}, {10499, 10000},
    };
    for (auto [stake, power] : table)
        expect(validating_power(stake, p) == power,
               "power(" + std::to_string(stake) + ") != " + std::to_string(power));

    expect(role_for_stake(0, p) == Role::observer, "stake 0 must map to observer");
    expect(role_for_stake(1, p) == Role::user, "stake 1 must map to user");
    expect(role_for_stake(999, p) == Role::user, "stake 999 must map to user");
    expect(role_for_stake(1000, p) == Role::validator, "stake 1000 must map to validator");

    ProtocolParams shifted = p;
    shifted.lower_bound_l = 500;
    expect(validating_power(499, shifted) == 0, "raised L: 499 must have no power");
    expect(validating_power(500, shifted) == 1, "raised L: 500 must have power 1");
    expect(validating_power(1000, shifted) == 1000, "raised L: U unchanged");

    expect(daily_block_reward(0, p) == 68'242'546, "day 0 reward");
    expect(daily_block_reward(729, p) == 68'242'546, "mid-window reward");
    expect(daily_block_reward(1459, p) == 68'242'546, "last window day reward");
    expect(daily_block_reward(1460, p) == 0, "window must close at day 1460");
    expect(daily_block_reward(100000, p) == 0, "reward past the window");

    Cents sum = 0;
    for (Day d = 0; d < p.reward_days; ++d)
        sum += daily_block_reward(d, p);
    expect(sum == p.reward_days * p.daily_block_reward_cents, "window total");
    Cents budget = tokens_to_cents(p.total_block_rewards);
    expect(sum <= budget && budget - sum < p.reward_days,
           "window total must be within one cent per day of the budget");
}

// ---- criterion 2: every block in long runs obeys the cross-type rule ----

void c2_cross_type_structure() {
    std::size_t blocks_seen = 0;
    for (int s = 0; s < 10; ++s) {
        ScenarioConfig cfg = scenario("fig4");
        cfg.seed = 40 + static_cast<std::uint64_t>(s);
        cfg.max_ticks = 1000;
        cfg.k = 2 + s % 2;
        cfg.validate();
        RunOutputs out = run_scenario(cfg);
        expect(out.pass, cfg.name + " seed " + std::to_string(cfg.seed) + " did not pass");

        std::vector<DagRow> rows = parse_dag_csv(out.dag_csv);
        std::map<BlockId, const DagRow*> by_id;
        for (const DagRow& r : rows)
            by_id[r.id] = &r;
        for (const DagRow& r : rows) {
            const std::string where = "seed " + std::to_string(cfg.seed) + " block " + r.id.hex();
            if (r.seq == 0) {
                expect(r.self_parent.is_null() && r.other_parents.empty() && r.lamport == 0,
                       where + ": malformed leaf");
                continue;
            }
            expect(static_cast<std::int64_t>(r.other_parents.size()) == cfg.k - 1,
                   where + ": wrong other-parent count");
            auto sp = by_id.find(r.self_parent);
            expect(sp != by_id.end(), where + ": self-parent missing");
            expect(sp->second->creator == r.creator, where + ": self-parent creator mismatch");
            expect(sp->second->seq + 1 == r.seq, where + ": seq must step by one");

            std::set<AccountId> creators{r.creator};
            bool opposite = false;
            std::uint64_t max_parent_lamport = sp->second->lamport;
            for (const BlockId& p : r.other_parents) {
                auto it = by_id.find(p);
                expect(it != by_id.end(), where + ": other-parent missing");
                expect(creators.insert(it->second->creator).second,
                       where + ": repeated creator among parents");
                if (it->second->role != r.role) opposite = true;
                max_parent_lamport = std::max(max_parent_lamport, it->second->lamport);
            }
            expect(opposite, where + ": no opposite-type parent");
            expect(r.lamport == max_parent_lamport + 1, where + ": lamport not max(parents)+1");
            ++blocks_seen;
        }
    }
    expect(blocks_seen > 2000, "structural scan covered too few blocks");
}

// ---- criterion 3: incremental validation scores vs a brute-force oracle ----

void c3_score_oracle() {
    Rng rng(0xACCE11ull);
    long checked = 0;
    for (int round = 0; round < 50; ++round) {
        int n_accounts = 4 + static_cast<int>(rng.below(6));
        int n_blocks = 60 + static_cast<int>(rng.below(141));
        int k = 2 + static_cast<int>(rng.below(2));
        test::RandomDag d = test::build_random_dag(rng, n_accounts, n_blocks, k);
        for (const auto& b : d.blocks) {
            for (Frame f = 0; f <= 2; ++f) {
                Tokens want = d.oracle_score(b->id, f);
                Tokens got = d.dag.validation_score(b->id, f);
                expect(got == want, "round " + std::to_string(round) + " block " + b->id.hex() +
                                        " frame " + std::to_string(f) + ": score " +
                                        std::to_string(got) + " oracle " + std::to_string(want));
                expect(d.dag.reachable_roots(b->id, f) == d.oracle_roots(b->id, f),
                       "round " + std::to_string(round) + ": root set mismatch");
                ++checked;
            }
        }
    }
    expect(checked > 10000, "oracle comparison covered too few blocks");
}

// ---- criterion 4: every elected root clears the 2/3 supermajority ----

void c4_root_threshold() {
    for (std::uint64_t seed : {42ull, 11ull, 12ull}) {
        ScenarioConfig cfg = scenario("fig4");
        cfg.seed = seed;
        cfg.validate();
        RunOutputs out = run_scenario(cfg);
        expect(out.pass, "honest run must pass");

        Tokens w = genesis_power(cfg);
        expect(std::to_string(w) == metric(out, "total_power"),
               "independent power total disagrees with the run report");

        Frame max_root_frame = 0;
        std::size_t above = 0;
        for (const RootRow& r : parse_roots_csv(out.roots_csv)) {
            max_root_frame = std::max(max_root_frame, r.frame);
            if (r.frame == 0) continue; // leaves seed frame 0 without an election
            expect(3 * r.election_score > 2 * w,
                   "root " + r.id.hex() + " at frame " + std::to_string(r.frame) +
                       " scored only " + std::to_string(r.election_score) + " of " +
                       std::to_string(w));
            ++above;
        }
        expect(above > 20, "too few elected roots to be meaningful");
        expect(max_root_frame >= 5, "run too short to exercise elections");
    }
}

// ---- criterion 5: agreement across populations with in-budget faults ----

void c5_agreement_under_faults() {
    for (int s = 0; s < 20; ++s) {
        ScenarioConfig cfg;
        cfg.name = "agree" + std::to_string(s);
        int n = 5 + (s * 7 + 3) % 16;
        AccountId equivocator, silent;
        for (int i = 0; i < n; ++i) {
            if (i % 4 == 0) {
                cfg.nodes.push_back({"v" + std::to_string(i),
                                     1000 * (1 + (i / 4 + s) % 3)});
            } else {
                cfg.nodes.push_back({"u" + std::to_string(i),
                                     1 + (i * 37 + s * 11) % 400});
                if (equivocator.empty()) equivocator = cfg.nodes.back().id;
                silent = cfg.nodes.back().id;
            }
        }
        cfg.faults[equivocator] = {FaultKind::equivocate, 25};
        cfg.faults[silent] = {FaultKind::silent_after, 150};
        cfg.k = 2 + s % 2;
        cfg.seed = 1000 + static_cast<std::uint64_t>(s);
        cfg.max_ticks = 400;
        cfg.latency_min = 1;
        cfg.latency_max = 2 + s % 5;
        cfg.create_prob_pct = 50;
        cfg.txn_fee = s % 3 == 0 ? 25 : 0;
        cfg.ticks_per_day = 150;
        cfg.selection_mode = s % 2 ? SelectionMode::inverse : SelectionMode::proportional;
        cfg.fee_mode = s % 3 ? FeeMode::creator : FeeMode::equal_split;
        cfg.validate();

        RunOutputs out = run_scenario(cfg);
        std::string why;
        for (const auto& v : out.violations)
            why += " [" + v + "]";
        expect(out.pass, cfg.name + " failed:" + why);
        expect(std::stol(metric(out, "blocks_final")) > 0, cfg.name + ": nothing finalized");

        const std::string* reference = nullptr;
        for (const auto& [node, log] : out.finality_logs) {
            if (node == silent) continue;
            if (!reference) {
                reference = &log;
                continue;
            }
            expect(log == *reference, cfg.name + ": node " + node + " disagrees on the final order");
        }
        expect(reference != nullptr, cfg.name + ": no honest log");
        for (const auto& [node, log] : out.finality_logs) {
            if (node != silent) continue;
            expect(log.size() <= reference->size() &&
                       reference->compare(0, log.size(), log) == 0,
                   cfg.name + ": silent node log is not a prefix of the honest order");
        }
    }
}

// ---- criterion 6: checkpoints fire on cadence and survive an audit ----

void c6_checkpoint_cadence() {
    ScenarioConfig cfg = scenario("checkpoint100");
    RunOutputs out = run_scenario(cfg);
    expect(out.pass, "checkpoint run must pass");

    std::string frames = metric(out, "checkpoint_frames");
    expect(frames != "-", "no checkpoints fired");
    std::vector<Frame> fired;
    std::stringstream ss(frames);
    std::string tok;
    while (std::getline(ss, tok, ';'))
        fired.push_back(std::stoll(tok));
    expect(fired.size() >= 2, "expected at least two checkpoints, saw " + frames);
    Frame prev = 0;
    for (Frame f : fired) {
        expect(f > 0 && f % cfg.checkpoint_interval == 0,
               "checkpoint at frame " + std::to_string(f) + " is off cadence");
        expect(f == prev + cfg.checkpoint_interval,
               "checkpoint cadence has a gap before frame " + std::to_string(f));
        prev = f;
    }
    Frame sealed = std::stoll(metric(out, "frames_sealed"));
    expect(static_cast<Frame>(fired.size()) == (sealed - 1) / cfg.checkpoint_interval,
           "checkpoint count does not match sealed frames");

    AuditReport audit = run_audit(cfg, to_bundle(out));
    expect(audit.clean(), "audit found problems:\n" + audit.render());
}

// ---- criterion 7: reward arithmetic is exact in integer cents ----

void c7_economics_exactness() {
    ProtocolParams p;
    expect(take_bp(10000, p.phi_spv_fee_bp) == 3000, "spv commission on 100.00");
    expect(take_bp(99, p.phi_spv_fee_bp) == 29, "spv commission must floor");

    {
        StakeLedger ledger(p);
        ledger.add_account("v", 1000);
        ledger.add_account("d", 500);
        ledger.stake_tokens("v", StakeKind::validation, 1000);
        ledger.delegate("d", "v", 500, 30);
        RewardStatement st;
        split_with_delegators(st, "v", 15000, CreditColumn::validation, ledger, p);
        expect(st.rows["d"].delegation_share == 4250, "delegator share net of commission");
        expect(st.rows["v"].commission == 750, "validator commission");
        expect(st.rows["v"].validation_reward == 10000, "validator own share");
        Cents credited = st.rows["d"].delegation_share + st.rows["v"].commission +
                         st.rows["v"].validation_reward;
        expect(credited == 15000, "delegation split must conserve the gross");
    }

    {
        StakeLedger ledger(p);
        ledger.add_account("v", 1000);
        ledger.add_account("rich", 20000);
        ledger.delegate("rich", "v", 15 * 1000, 30);
        bool threw = false;
        try {
            ledger.delegate("rich", "v", 1, 30);
        } catch (const Error& e) {
            threw = e.code() == Errc::delegation_cap_exceeded;
        }
        expect(threw, "delegation one past the cap must be rejected");
    }

    {
        StakeLedger ledger(p);
        ledger.add_account("bad", 5000);
        ledger.add_account("r", 0);
        ledger.stake_tokens("bad", StakeKind::validation, 5000);
        RewardStatement st;
        BurnOutcome b = burn_deposit(st, ledger, "bad", AccountId("r"), p, true);
        expect(b.burned == 5000 && b.bounty == 500 && b.destroyed == 4500,
               "burn split must follow the reporter fraction");
        expect(st.conserved(), "burn statement must conserve");
        expect(ledger.account("bad").validation_staked == 0, "burn must clear the deposit");
        expect(ledger.account("r").tokens_held == 500, "reporter bounty must be credited");
    }

    // a real run's statements must conserve line by line, recomputed from text
    ProtocolParams defaults;
    RunOutputs out = run_scenario(scenario("fig4"));
    expect(out.pass, "fig4 run must pass");
    int statements = 0;
    bool open = false;
    Cents fees_total = 0;
    Cents pool = 0, fees = 0, burned = 0, credits = 0, burn_col = 0, spv = 0, rem = 0;
    auto close = [&] {
        if (!open) return;
        expect(credits + spv + rem + burn_col == pool + fees + burned,
               "statement " + std::to_string(statements) + " does not conserve");
        expect(pool > 0 && pool % defaults.daily_block_reward_cents == 0,
               "pool must be a whole number of daily accruals");
        ++statements;
        open = false;
    };
    for (const RewardLine& l : parse_rewards_csv(out.rewards_csv)) {
        if (l.account == "POOL") {
            close();
            open = true;
            pool = l.col[0];
            fees = l.col[1];
            burned = l.col[2];
            fees_total += fees;
            credits = burn_col = spv = rem = 0;
        } else if (l.account == "SPV") {
            spv = l.col[1];
        } else if (l.account == "REMAINDER") {
            rem = l.col[0];
        } else {
            credits += l.col[0] + l.col[1] + l.col[2] + l.col[3];
            burn_col += l.col[4];
        }
    }
    close();
    expect(statements >= 1, "run settled no statements");
    expect(fees_total > 0, "run collected no fees");
}

// ---- criterion 8: ledger fuzz, ten thousand operations ----

void c8_ledger_fuzz() {
    ProtocolParams p;
    StakeLedger ledger(p);
    const std::vector<AccountId> ids = {"a0", "a1", "a2", "a3", "a4", "a5"};
    for (std::size_t i = 0; i < ids.size(); ++i)
        ledger.add_account(ids[i], 500 + 700 * static_cast<Tokens>(i));
    Rng rng(0xF0221ull);
    long typed_errors = 0;
    Day day = 0;

    auto verify = [&] {
        Tokens power_total = 0;
        std::map<AccountId, Tokens> din;
        for (const AccountId& id : ids) {
            const Account& a = ledger.account(id);
            expect(a.tokens_held >= 0 && a.txn_staked >= 0 && a.validation_staked >= 0 &&
                       a.exiting_stake >= 0,
                   id + ": negative balance field");
            expect(a.committed() <= a.tokens_held, id + ": committed past holdings");
            for (const auto& [to, amt] : a.delegations_out) {
                expect(amt > 0, id + ": empty delegation entry");
                din[to] += amt;
            }
            expect(ledger.power_of(id) >= 0, id + ": negative power");
            power_total += ledger.power_of(id);
        }
        for (const AccountId& id : ids)
            expect(ledger.delegated_in(id) == din[id], id + ": delegation mirror broken");
        expect(ledger.total_validating_power() == power_total, "power total mismatch");
        std::vector<LedgerRow> rows = parse_ledger_csv(ledger.snapshot());
        expect(rows.size() == ids.size(), "snapshot row count");
    };

    for (int step = 0; step < 10000; ++step) {
        const AccountId& a = ids[rng.below(ids.size())];
        const AccountId& b = ids[rng.below(ids.size())];
        Tokens amt = static_cast<Tokens>(rng.below(3000));
        try {
            switch (rng.below(9)) {
            case 0: ledger.stake_tokens(a, StakeKind::transaction, amt); break;
            case 1: ledger.stake_tokens(a, StakeKind::validation, amt); break;
            case 2: ledger.delegate(a, b, amt, static_cast<std::int64_t>(rng.below(100))); break;
            case 3: ledger.undelegate(a, b, amt); break;
            case 4: ledger.begin_exit(a, amt); break;
            case 5: ledger.withdraw_exited(a); break;
            case 6: ledger.credit_tokens(a, amt % 50); break;
            case 7:
                if (rng.below(50) == 0) ledger.burn_validation_stake(a);
                break;
            case 8:
                day += static_cast<Day>(rng.below(3));
                ledger.set_day(day);
                break;
            }
        } catch (const Error&) {
            ++typed_errors;
        }
        if (step % 25 == 0) verify();
    }
    verify();
    expect(typed_errors > 500, "fuzz barely exercised the guard rails");
}

// ---- criterion 9: saga points recomputed from the artifacts alone ----

void c9_saga_recount() {
    for (const std::string& name : {std::string("fig4"), std::string("cross_type")}) {
        ScenarioConfig cfg = scenario(name);
        RunOutputs out = run_scenario(cfg);
        expect(out.pass, name + " run must pass");

        Frame sealed = std::stoll(metric(out, "frames_sealed"));
        std::set<BlockId> atroposes;
        for (const RootRow& r : parse_roots_csv(out.roots_csv))
            if (r.fame == "famous" && r.frame < sealed) atroposes.insert(r.id);
        expect(!atroposes.empty(), name + ": no atroposes in the export");

        std::map<AccountId, std::int64_t> derived;
        for (const DagRow& r : parse_dag_csv(out.dag_csv)) {
            bool hit = false;
            for (const BlockId& p : r.other_parents)
                if (atroposes.contains(p)) hit = true;
            if (hit) derived[r.creator] += 1;
        }
        std::map<AccountId, std::int64_t> claimed = parse_saga_csv(out.saga_csv);
        expect(claimed == derived, name + ": saga recount disagrees with the export");
    }
}

// ---- criterion 10: random tampering of artifacts must be caught ----

struct Artifacts {
    std::string dag, roots, rewards, saga;
    std::vector<std::pair<AccountId, std::string>> logs;
};

bool audit_catches(const ScenarioConfig& cfg, const Artifacts& a) {
    try {
        ExportBundle b;
        b.dag = parse_dag_csv(a.dag);
        b.roots = parse_roots_csv(a.roots);
        b.has_roots = true;
        b.rewards = parse_rewards_csv(a.rewards);
        b.has_rewards = true;
        b.saga = parse_saga_csv(a.saga);
        b.has_saga = true;
        auto logs = a.logs;
        std::sort(logs.begin(), logs.end());
        for (const auto& [node, text] : logs)
            b.logs.emplace_back(node, parse_finality_log(text));
        return !run_audit(cfg, b).clean();
    } catch (const Error&) {
        return true; // a parser rejection is a detection too
    }
}

void c10_tamper_detection() {
    ScenarioConfig cfg = scenario("fig4");
    cfg.seed = 77;
    cfg.max_ticks = 300;
    cfg.validate();
    RunOutputs base_run = run_scenario(cfg);
    expect(base_run.pass, "tamper base run must pass");
    Artifacts base{base_run.dag_csv, base_run.roots_csv, base_run.rewards_csv,
                   base_run.saga_csv, base_run.finality_logs};
    expect(!audit_catches(cfg, base), "clean base run must audit clean");

    auto dag_lines = lines_of(base.dag);
    auto root_lines = lines_of(base.roots);
    auto reward_lines = lines_of(base.rewards);
    const auto dag_idx = data_rows(dag_lines);
    const auto root_idx = data_rows(root_lines);
    std::vector<std::size_t> account_rows;
    for (std::size_t i : data_rows(reward_lines)) {
        auto f = split_csv(reward_lines[i]);
        if (f[1] != "POOL" && f[1] != "SPV" && f[1] != "REMAINDER") account_rows.push_back(i);
    }
    expect(dag_idx.size() > 50 && root_idx.size() > 20 && account_rows.size() > 2,
           "base run too small for the tamper sweep");

    const int reps = 200;
    struct Mutator {
        std::string name;
        std::function<Artifacts(Rng&)> make;
    };
    std::vector<Mutator> classes;

    classes.push_back({"unknown-creator", [&](Rng& rng) {
        Artifacts a = base;
        auto ls = dag_lines;
        std::size_t i = dag_idx[rng.below(dag_idx.size())];
        auto f = split_csv(ls[i]);
        f[1] = "zz";
        ls[i] = join_csv(f);
        a.dag = join_lines(ls);
        return a;
    }});
    classes.push_back({"forged-fork", [&](Rng& rng) {
        Artifacts a = base;
        auto ls = dag_lines;
        auto f = split_csv(ls[dag_idx[rng.below(dag_idx.size())]]);
        f[0] = (f[0].substr(0, 8) == "deadbeef" ? "feedface" : "deadbeef") + f[0].substr(8);
        ls.push_back(join_csv(f));
        a.dag = join_lines(ls);
        return a;
    }});
    classes.push_back({"root-frame-shift", [&](Rng& rng) {
        Artifacts a = base;
        auto ls = root_lines;
        std::size_t i = root_idx[rng.below(root_idx.size())];
        auto f = split_csv(ls[i]);
        f[2] = std::to_string(std::stoll(f[2]) + 1);
        ls[i] = join_csv(f);
        a.roots = join_lines(ls);
        return a;
    }});
    classes.push_back({"score-shift", [&](Rng& rng) {
        Artifacts a = base;
        auto ls = root_lines;
        std::size_t i = root_idx[rng.below(root_idx.size())];
        auto f = split_csv(ls[i]);
        f[4] = std::to_string(std::stoll(f[4]) + 1);
        ls[i] = join_csv(f);
        a.roots = join_lines(ls);
        return a;
    }});
    classes.push_back({"log-swap", [&](Rng& rng) {
        Artifacts a = base;
        std::size_t n = rng.below(a.logs.size());
        auto ls = lines_of(a.logs[n].second);
        auto idx = data_rows(ls);
        std::size_t i = idx[rng.below(idx.size() - 1)];
        auto f1 = split_csv(ls[i]);
        auto f2 = split_csv(ls[i + 1]);
        std::swap(f1[1], f2[1]);
        ls[i] = join_csv(f1);
        ls[i + 1] = join_csv(f2);
        a.logs[n].second = join_lines(ls);
        return a;
    }});
    classes.push_back({"cent-shift", [&](Rng& rng) {
        Artifacts a = base;
        auto ls = reward_lines;
        std::size_t i = account_rows[rng.below(account_rows.size())];
        auto f = split_csv(ls[i]);
        f[2] = format_cents(*parse_cents(f[2]) + 1);
        ls[i] = join_csv(f);
        a.rewards = join_lines(ls);
        return a;
    }});

    for (std::size_t c = 0; c < classes.size(); ++c) {
        Rng rng(9000 + c);
        int caught = 0;
        for (int r = 0; r < reps; ++r)
            if (audit_catches(cfg, classes[c].make(rng))) ++caught;
        expect(caught >= reps * 99 / 100,
               classes[c].name + ": caught only " + std::to_string(caught) + "/" +
                   std::to_string(reps));
    }

    // and no false alarms on clean runs
    for (std::uint64_t seed = 101; seed <= 120; ++seed) {
        ScenarioConfig clean = scenario("fig4");
        clean.seed = seed;
        clean.max_ticks = 250;
        clean.validate();
        RunOutputs out = run_scenario(clean);
        expect(out.pass, "clean run seed " + std::to_string(seed) + " must pass");
        AuditReport audit = run_audit(clean, to_bundle(out));
        expect(audit.clean(), "false positive on seed " + std::to_string(seed) + ":\n" +
                                  audit.render());
    }
}

// ---- criterion 11: peer selection tracks stake proportionally ----

void c11_selection_distribution() {
    std::vector<PeerCandidate> candidates = {
        {"v1", Role::validator, 1000},
        {"v2", Role::validator, 2000},
    };
    Rng rng(0x5E1Ec7ull);
    const int draws = 100000;
    int v2 = 0;
    for (int i = 0; i < draws; ++i) {
        auto picked = k_peer_selection(Role::user, candidates, rng, 2, SelectionMode::proportional);
        expect(picked.size() == 1, "k=2 must pick exactly one peer");
        if (picked[0] == "v2") ++v2;
    }
    double share = static_cast<double>(v2) / draws;
    expect(share > 2.0 / 3.0 - 0.02 && share < 2.0 / 3.0 + 0.02,
           "v2 share " + std::to_string(share) + " strays from 2/3");
}

// ---- criterion 12: identical seeds reproduce identical artifacts ----

void c12_deterministic_replay() {
    for (const std::string& name : {std::string("fig4"), std::string("equivocator")}) {
        ScenarioConfig cfg = scenario(name);
        RunOutputs a = run_scenario(cfg);
        RunOutputs b = run_scenario(cfg);
        expect(a.dag_csv == b.dag_csv, name + ": dag.csv differs between replays");
        expect(a.roots_csv == b.roots_csv, name + ": roots.csv differs");
        expect(a.rewards_csv == b.rewards_csv, name + ": rewards.csv differs");
        expect(a.saga_csv == b.saga_csv, name + ": saga.csv differs");
        expect(a.ledger_csv == b.ledger_csv, name + ": ledger.csv differs");
        expect(a.finality_logs == b.finality_logs, name + ": finality logs differ");
        expect(a.report_text == b.report_text, name + ": report differs");

        ScenarioConfig other = cfg;
        other.seed = cfg.seed + 1;
        RunOutputs c = run_scenario(other);
        expect(c.dag_csv != a.dag_csv, name + ": a different seed must change the run");
    }
}

} // namespace

int main() {
    struct Criterion {
        const char* name;
        void (*run)();
    };
    const Criterion criteria[] = {
        {"power-function-and-reward-window", c1_power_and_reward_window},
        {"cross-type-parent-structure", c2_cross_type_structure},
        {"validation-score-oracle", c3_score_oracle},
        {"root-supermajority-threshold", c4_root_threshold},
        {"fault-tolerant-agreement", c5_agreement_under_faults},
        {"checkpoint-cadence", c6_checkpoint_cadence},
        {"reward-economics-exactness", c7_economics_exactness},
        {"ledger-operation-fuzz", c8_ledger_fuzz},
        {"saga-recount-from-artifacts", c9_saga_recount},
        {"tamper-detection-rate", c10_tamper_detection},
        {"stake-weighted-peer-selection", c11_selection_distribution},
        {"deterministic-replay", c12_deterministic_replay},
    };

    int failed = 0;
    int num = 0;
    for (const Criterion& c : criteria) {
        ++num;
        try {
            c.run();
            std::cout << "PASS " << num << " " << c.name << "\n";
        } catch (const std::exception& e) {
            ++failed;
            std::cout << "FAIL " << num << " " << c.name << ": " << e.what() << "\n";
        }
        std::cout.flush();
    }
    if (failed) {
        std::cout << "acceptance: " << failed << " of 12 criteria failed\n";
        return 1;
    }
    std::cout << "acceptance: 12/12 criteria passed\n";
    return 0;
}
