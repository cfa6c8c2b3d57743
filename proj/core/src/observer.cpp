// Copyright (c) 2026 the stairsim authors
// SPDX-License-Identifier: Apache-2.0
#include "stair/observer.hpp"

#include <algorithm>
#include <filesystem>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "stair/money.hpp"
#include "stair/power_schedule.hpp"

namespace stair {

std::string_view to_string(FindingKind k) {
    switch (k) {
    case FindingKind::invalid_block: return "invalid-block";
    case FindingKind::fork: return "fork";
    case FindingKind::threshold_violation: return "threshold-violation";
    case FindingKind::score_mismatch: return "score-mismatch";
    case FindingKind::order_divergence: return "order-divergence";
    case FindingKind::conservation_break: return "conservation-break";
    }
    return "unknown";
}

std::string Finding::digest() const {
    std::uint64_t h = 1469598103934665603ULL;
    auto fold = [&h](std::string_view s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ULL;
        }
        h ^= 0x1f;
        h *= 1099511628211ULL;
    };
    fold(to_string(kind));
    fold(subject);
    char buf[17];
    for (int i = 15; i >= 0; --i) {
        buf[i] = "0123456789abcdef"[h & 0xf];
        h >>= 4;
    }
    buf[16] = '\0';
    return std::string(buf);
}

ExportBundle load_export_dir(const std::string& dir) {
    ExportBundle b;
    const std::string base = dir.empty() || dir.back() == '/' ? dir : dir + "/";
    b.dag = parse_dag_csv(read_text_file(base + "dag.csv"));
    if (file_exists(base + "roots.csv")) {
        b.roots = parse_roots_csv(read_text_file(base + "roots.csv"));
        b.has_roots = true;
    }
    if (file_exists(base + "rewards.csv")) {
        b.rewards = parse_rewards_csv(read_text_file(base + "rewards.csv"));
        b.has_rewards = true;
    }
    if (file_exists(base + "saga.csv")) {
        b.saga = parse_saga_csv(read_text_file(base + "saga.csv"));
        b.has_saga = true;
    }
    // finality_<node>.log, lexicographic by node id
    std::vector<std::string> names;
    {
        namespace fs = std::filesystem;
        for (const auto& e : fs::directory_iterator(base.empty() ? "." : base)) {
            std::string n = e.path().filename().string();
            if (n.size() > 13 && n.rfind("finality_", 0) == 0 && n.ends_with(".log"))
                names.push_back(n);
        }
    }
    std::sort(names.begin(), names.end());
    for (const std::string& n : names) {
        AccountId node = n.substr(9, n.size() - 13);
        b.logs.emplace_back(node, parse_finality_log(read_text_file(base + n)));
    }
    return b;
}

namespace {

constexpr Frame k_audit_coin_delay = 10; // must track the engine's fame coin

struct Audit {
    const ScenarioConfig& cfg;
    const ExportBundle& bundle;
    ProtocolParams params;
    AuditReport rep;

    std::map<AccountId, Role> role;
    std::vector<const DagRow*> order; // usable rows, (lamport, id) ascending
    std::map<BlockId, std::size_t> index;
    std::size_t words = 0;
    std::vector<std::vector<std::uint64_t>> anc;
    std::vector<Frame> frame;
    std::vector<char> root;
    std::vector<Tokens> score;
    std::map<Frame, std::vector<std::size_t>> roots_at;
    std::map<AccountId, std::vector<std::pair<std::size_t, std::size_t>>> fork_pairs;
    std::vector<int> fame; // 0 undecided, 1 famous, 2 not famous
    StakeLedger genesis;
    PowerSchedule sched;
    std::vector<StakeMutation> pending_muts;
    std::map<Frame, std::vector<StakeMutation>> applied_cps;
    Frame sealed_upto = -1;
    struct DerivedFinal {
        std::size_t idx;
        BlockId atropos;
        Frame at_frame;
    };
    std::vector<DerivedFinal> final_order;

    explicit Audit(const ScenarioConfig& c, const ExportBundle& b)
        : cfg(c), bundle(b), params(c.to_params()), genesis(params), sched(make_genesis(), params) {
        pending_muts = cfg.stake_events;
    }

    // the schedule replica seeds exactly like the simulator does
    const StakeLedger& make_genesis() {
        for (const NodeSpec& ns : cfg.nodes) {
            genesis.add_account(ns.id, ns.stake);
            if (cfg.role_of(ns) == Role::validator)
                genesis.stake_tokens(ns.id, StakeKind::validation, ns.stake);
            role[ns.id] = cfg.role_of(ns);
        }
        return genesis;
    }

    void flag(FindingKind k, std::string subject, std::string detail) {
        rep.findings.push_back({k, std::move(subject), std::move(detail)});
    }

    bool reaches(std::size_t from, std::size_t to) const {
        return (anc[from][to >> 6] >> (to & 63)) & 1;
    }

    bool fork_visible(std::size_t from, const AccountId& creator) const {
        auto it = fork_pairs.find(creator);
        if (it == fork_pairs.end()) return false;
        for (const auto& [a, b] : it->second)
            if (reaches(from, a) && reaches(from, b)) return true;
        return false;
    }

    void structural_pass();
    void build_ancestors();
    void elect();
    void decide_fame();
    void seal_and_order();
    void check_roots();
    void check_logs();
    void check_saga();
    void check_rewards();

    AuditReport run() {
        structural_pass();
        build_ancestors();
        // Election depends on per-frame powers, which depend on checkpoints,
        // which only surface during sealing. Rerun the consensus passes with
        // each round's checkpoints pre-applied until the set stops growing;
        // eras activate past the frame front, so settled frames never flip.
        std::map<Frame, std::vector<StakeMutation>> preseed;
        while (true) {
            roots_at.clear();
            final_order.clear();
            applied_cps.clear();
            sealed_upto = -1;
            sched = PowerSchedule(genesis, params);
            pending_muts = cfg.stake_events;
            for (const auto& [f, due] : preseed) {
                std::erase_if(pending_muts, [&](const StakeMutation& m) {
                    return m.checkpoint_frame <= f;
                });
                sched.apply_checkpoint(f, due);
                applied_cps[f] = due;
            }
            elect();
            decide_fame();
            seal_and_order();
            if (applied_cps == preseed) break;
            preseed = applied_cps;
        }
        if (bundle.has_roots) check_roots();
        check_logs();
        if (bundle.has_saga) check_saga();
        if (bundle.has_rewards) check_rewards();
        rep.blocks_usable = order.size();
        rep.roots_derived = 0;
        for (const auto& [f, v] : roots_at)
            rep.roots_derived += v.size();
        rep.frames_sealed = sealed_upto + 1;
        rep.final_derived = final_order.size();
        rep.logs_checked = bundle.logs.size();
        return std::move(rep);
    }
};

void Audit::structural_pass() {
    std::map<BlockId, const DagRow*> first_of;
    for (const DagRow& r : bundle.dag) {
        auto [it, fresh] = first_of.emplace(r.id, &r);
        if (!fresh) flag(FindingKind::invalid_block, r.id.hex(), "duplicate block id");
    }

    // child rows always carry a larger lamport than their parents, so one
    // sorted sweep sees parents first
    std::vector<const DagRow*> sweep;
    sweep.reserve(first_of.size());
    for (const auto& [id, r] : first_of)
        sweep.push_back(r);
    std::sort(sweep.begin(), sweep.end(), [](const DagRow* a, const DagRow* b) {
        if (a->lamport != b->lamport) return a->lamport < b->lamport;
        return a->id < b->id;
    });

    for (const DagRow* r : sweep) {
        const std::string subject = r->id.hex();
        auto rit = role.find(r->creator);
        if (rit == role.end()) {
            flag(FindingKind::invalid_block, subject, "creator " + r->creator + " is not in the population");
            continue;
        }
        if (rit->second == Role::observer) {
            flag(FindingKind::invalid_block, subject, "observer " + r->creator + " cannot create blocks");
            continue;
        }
        if (r->role != rit->second) {
            flag(FindingKind::invalid_block, subject, "role column contradicts the creator's stake");
            continue;
        }
        if (r->fee_total < 0) {
            flag(FindingKind::invalid_block, subject, "negative fee total");
            continue;
        }
        if (r->seq == 0) {
            if (!r->self_parent.is_null() || !r->other_parents.empty() || r->lamport != 0) {
                flag(FindingKind::invalid_block, subject, "malformed leaf");
                continue;
            }
        } else {
            if (r->self_parent.is_null()) {
                flag(FindingKind::invalid_block, subject, "non-leaf without a self-parent");
                continue;
            }
            auto spi = index.find(r->self_parent);
            if (spi == index.end()) {
                flag(FindingKind::invalid_block, subject, "self-parent missing or unusable");
                continue;
            }
            const DagRow* sp = order[spi->second];
            if (sp->creator != r->creator || sp->seq + 1 != r->seq) {
                flag(FindingKind::invalid_block, subject, "self-parent chain broken");
                continue;
            }
            if (std::cmp_not_equal(r->other_parents.size(), cfg.k - 1)) {
                flag(FindingKind::invalid_block, subject, "wrong number of other-parents");
                continue;
            }
            bool ok = true;
            bool cross = false;
            std::uint64_t maxl = sp->lamport;
            std::set<AccountId> parent_creators;
            for (const BlockId& p : r->other_parents) {
                auto pi = index.find(p);
                if (pi == index.end()) {
                    flag(FindingKind::invalid_block, subject, "other-parent missing or unusable");
                    ok = false;
                    break;
                }
                const DagRow* pr = order[pi->second];
                if (pr->creator == r->creator) {
                    flag(FindingKind::invalid_block, subject, "other-parent by the block's own creator");
                    ok = false;
                    break;
                }
                if (!parent_creators.insert(pr->creator).second) {
                    flag(FindingKind::invalid_block, subject, "two other-parents by one creator");
                    ok = false;
                    break;
                }
                if (role.at(pr->creator) != rit->second) cross = true;
                maxl = std::max(maxl, pr->lamport);
            }
            if (!ok) continue;
            if (!cross) {
                flag(FindingKind::invalid_block, subject, "no opposite-type other-parent");
                continue;
            }
            if (r->lamport != maxl + 1) {
                flag(FindingKind::invalid_block, subject, "lamport timestamp out of step");
                continue;
            }
        }
        index.emplace(r->id, order.size());
        order.push_back(r);
    }

    // same creator and seq under two ids is the fork evidence
    std::map<std::pair<AccountId, std::uint64_t>, std::vector<std::size_t>> at;
    for (std::size_t i = 0; i < order.size(); ++i)
        at[{order[i]->creator, order[i]->seq}].push_back(i);
    for (const auto& [key, ids] : at) {
        if (ids.size() < 2) continue;
        std::string detail;
        for (std::size_t i : ids) {
            if (!detail.empty()) detail += ' ';
            detail += order[i]->id.hex();
        }
        flag(FindingKind::fork, key.first + ":" + std::to_string(key.second), detail);
        for (std::size_t a = 0; a < ids.size(); ++a)
            for (std::size_t b = a + 1; b < ids.size(); ++b)
                fork_pairs[key.first].emplace_back(ids[a], ids[b]);
    }
}

void Audit::build_ancestors() {
    const std::size_t n = order.size();
    words = (n + 63) / 64;
    anc.assign(n, std::vector<std::uint64_t>(words, 0));
    for (std::size_t i = 0; i < n; ++i) {
        anc[i][i >> 6] |= 1ULL << (i & 63);
        auto fold = [&](const BlockId& p) {
            if (p.is_null()) return;
            auto it = index.find(p);
            if (it == index.end()) return;
            const auto& pa = anc[it->second];
            for (std::size_t w = 0; w < words; ++w)
                anc[i][w] |= pa[w];
        };
        fold(order[i]->self_parent);
        for (const BlockId& p : order[i]->other_parents)
            fold(p);
    }
}

void Audit::elect() {
    const std::size_t n = order.size();
    frame.assign(n, 0);
    root.assign(n, 0);
    score.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const DagRow* r = order[i];
        if (r->seq == 0) {
            root[i] = 1;
            roots_at[0].push_back(i);
            continue;
        }
        Frame f = frame[index.at(r->self_parent)];
        for (const BlockId& p : r->other_parents)
            f = std::max(f, frame[index.at(p)]);
        Tokens sc = 0;
        std::set<AccountId> seen;
        auto rs = roots_at.find(f);
        if (rs != roots_at.end()) {
            for (std::size_t j : rs->second) {
                if (!reaches(i, j)) continue;
                const AccountId& c = order[j]->creator;
                if (fork_visible(i, c)) continue;
                if (!seen.insert(c).second) continue;
                sc += sched.power(c, f);
            }
        }
        score[i] = sc;
        if (3 * sc > 2 * sched.total(f)) {
            frame[i] = f + 1;
            root[i] = 1;
            roots_at[f + 1].push_back(i);
        } else {
            frame[i] = f;
            if (frame[index.at(r->self_parent)] < f) {
                // first block of its creator in a frame inherited through an
                // other-parent: a root, scored against the previous frame
                root[i] = 1;
                roots_at[f].push_back(i);
                Tokens ps = 0;
                std::set<AccountId> pseen;
                if (auto pr = roots_at.find(f - 1); pr != roots_at.end()) {
                    for (std::size_t j : pr->second) {
                        if (!reaches(i, j)) continue;
                        const AccountId& c = order[j]->creator;
                        if (fork_visible(i, c)) continue;
                        if (!pseen.insert(c).second) continue;
                        ps += sched.power(c, f - 1);
                    }
                }
                score[i] = ps;
            }
        }
    }
}

void Audit::decide_fame() {
    fame.assign(order.size(), 0);
    if (roots_at.empty()) return;
    const Frame maxf = roots_at.rbegin()->first;
    for (const auto& [f, cands] : roots_at) {
        for (std::size_t cj : cands) {
            std::map<std::size_t, bool> votes;
            for (Frame g = f + 1; g <= maxf && fame[cj] == 0; ++g) {
                if (g - f >= k_audit_coin_delay) {
                    fame[cj] = (order[cj]->id.b[15] & 1) ? 1 : 2;
                    break;
                }
                auto it = roots_at.find(g);
                if (it == roots_at.end()) break;
                if (g == f + 1) {
                    for (std::size_t v : it->second)
                        votes[v] = reaches(v, cj);
                    continue;
                }
                std::map<std::size_t, bool> next;
                for (std::size_t t : it->second) {
                    Tokens yes = 0, no = 0;
                    std::set<AccountId> seen;
                    for (std::size_t v : roots_at.at(g - 1)) {
                        if (!reaches(t, v)) continue;
                        const AccountId& c = order[v]->creator;
                        if (fork_visible(t, c)) continue;
                        if (!seen.insert(c).second) continue;
                        auto vt = votes.find(v);
                        Tokens w = sched.power(c, g - 1);
                        (vt != votes.end() && vt->second ? yes : no) += w;
                    }
                    Tokens whole = sched.total(g - 1);
                    if (3 * yes > 2 * whole) {
                        fame[cj] = 1;
                        break;
                    }
                    if (3 * no > 2 * whole) {
                        fame[cj] = 2;
                        break;
                    }
                    next[t] = yes >= no;
                }
                votes = std::move(next);
            }
        }
    }
}

void Audit::seal_and_order() {
    std::vector<char> is_final(order.size(), 0);
    for (Frame f = 0;; ++f) {
        auto fr = roots_at.find(f);
        if (fr == roots_at.end()) break;
        bool all_decided = true;
        for (std::size_t j : fr->second)
            if (fame[j] == 0) all_decided = false;
        if (!all_decided) break;
        auto nx = roots_at.find(f + 1);
        if (nx == roots_at.end()) break;
        Tokens known = 0;
        std::set<AccountId> seen;
        for (std::size_t j : nx->second)
            if (seen.insert(order[j]->creator).second) known += sched.power(order[j]->creator, f + 1);
        if (3 * known <= 2 * sched.total(f + 1)) break;

        std::vector<std::size_t> atroposes;
        for (std::size_t j : fr->second)
            if (fame[j] == 1) atroposes.push_back(j);
        std::sort(atroposes.begin(), atroposes.end(),
                  [&](std::size_t a, std::size_t b) { return order[a]->id < order[b]->id; });
        std::vector<DerivedFinal> fresh;
        for (std::size_t a : atroposes) {
            for (std::size_t b = 0; b < order.size(); ++b) {
                if (is_final[b] || !reaches(a, b)) continue;
                is_final[b] = 1;
                fresh.push_back({b, order[a]->id, f});
            }
        }
        std::sort(fresh.begin(), fresh.end(), [&](const DerivedFinal& x, const DerivedFinal& y) {
            if (order[x.idx]->lamport != order[y.idx]->lamport)
                return order[x.idx]->lamport < order[y.idx]->lamport;
            return order[x.idx]->id < order[y.idx]->id;
        });
        final_order.insert(final_order.end(), fresh.begin(), fresh.end());
        sealed_upto = f;

        if (f > 0 && params.checkpoint_frame_interval > 0 && f % params.checkpoint_frame_interval == 0 &&
            !applied_cps.contains(f)) {
            std::vector<StakeMutation> due;
            std::erase_if(pending_muts, [&](const StakeMutation& m) {
                if (m.checkpoint_frame > f) return false;
                due.push_back(m);
                return true;
            });
            sched.apply_checkpoint(f, due);
            applied_cps[f] = std::move(due);
        }
    }
}

void Audit::check_roots() {
    struct Claim {
        const RootRow* row;
        bool matched = false;
    };
    std::map<BlockId, Claim> claims;
    for (const RootRow& r : bundle.roots) {
        auto [it, fresh] = claims.emplace(r.id, Claim{&r});
        if (!fresh) flag(FindingKind::threshold_violation, r.id.hex(), "root listed twice");
    }
    for (const auto& [f, v] : roots_at) {
        for (std::size_t j : v) {
            const DagRow* r = order[j];
            auto it = claims.find(r->id);
            if (it == claims.end()) {
                flag(FindingKind::threshold_violation, r->id.hex(),
                     "derived root of frame " + std::to_string(f) + " is not claimed");
                continue;
            }
            it->second.matched = true;
            const RootRow& c = *it->second.row;
            if (c.frame != f || c.creator != r->creator) {
                flag(FindingKind::threshold_violation, r->id.hex(), "claimed frame or creator is wrong");
                continue;
            }
            Tokens w = sched.power(r->creator, f);
            Tokens sc = score[j];
            if (c.weight != w)
                flag(FindingKind::score_mismatch, r->id.hex(),
                     "weight " + std::to_string(c.weight) + " should be " + std::to_string(w));
            if (c.election_score != sc)
                flag(FindingKind::score_mismatch, r->id.hex(),
                     "election score " + std::to_string(c.election_score) + " should be " +
                         std::to_string(sc));
            const char* want = fame[j] == 1 ? "famous" : fame[j] == 2 ? "not-famous" : "undecided";
            if (c.fame != want)
                flag(FindingKind::threshold_violation, r->id.hex(),
                     "fame " + c.fame + " should be " + want);
        }
    }
    for (const auto& [id, c] : claims) {
        if (c.matched) continue;
        auto it = index.find(id);
        if (it == index.end())
            flag(FindingKind::threshold_violation, id.hex(), "claimed root is not a usable block");
        else
            flag(FindingKind::threshold_violation, id.hex(),
                 "claimed root's election score fails the supermajority test");
    }
}

void Audit::check_logs() {
    for (const auto& [node, log] : bundle.logs) {
        for (std::size_t i = 0; i < log.size(); ++i) {
            const FinalRow& e = log[i];
            const std::string subject = node + ":" + std::to_string(i);
            if (i >= final_order.size()) {
                flag(FindingKind::order_divergence, subject, "log runs past the derived final order");
                break;
            }
            const DerivedFinal& d = final_order[i];
            const DagRow* r = order[d.idx];
            if (e.position != i) {
                flag(FindingKind::order_divergence, subject, "positions are not contiguous");
                break;
            }
            if (e.block != r->id || e.atropos != d.atropos || e.frame != d.at_frame ||
                e.lamport != r->lamport) {
                flag(FindingKind::order_divergence, subject,
                     "entry " + e.block.hex() + " should be " + r->id.hex() + " under atropos " +
                         d.atropos.hex());
                break;
            }
        }
    }
}

void Audit::check_saga() {
    std::map<AccountId, std::int64_t> derived;
    std::set<std::size_t> awarded;
    // children listing an atropos among their other-parents, one point each,
    // first atropos wins; scan follows derived seal order
    std::map<BlockId, std::vector<std::size_t>> children_of;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (const BlockId& p : order[i]->other_parents)
            children_of[p].push_back(i);
    // every famous root of a sealed frame is an atropos, including one that
    // finalized nothing fresh because a same-frame sibling got there first
    std::vector<BlockId> seal_sequence;
    for (Frame f = 0; f <= sealed_upto; ++f) {
        auto it = roots_at.find(f);
        if (it == roots_at.end()) continue;
        std::vector<BlockId> famous;
        for (std::size_t j : it->second)
            if (fame[j] == 1) famous.push_back(order[j]->id);
        std::sort(famous.begin(), famous.end());
        seal_sequence.insert(seal_sequence.end(), famous.begin(), famous.end());
    }
    for (const BlockId& a : seal_sequence) {
        auto it = children_of.find(a);
        if (it == children_of.end()) continue;
        for (std::size_t c : it->second) {
            if (!awarded.insert(c).second) continue;
            derived[order[c]->creator] += 1;
        }
    }
    for (const auto& [acct, pts] : bundle.saga) {
        auto it = derived.find(acct);
        std::int64_t want = it == derived.end() ? 0 : it->second;
        if (pts != want)
            flag(FindingKind::score_mismatch, "saga:" + acct,
                 std::to_string(pts) + " points claimed, recount says " + std::to_string(want));
    }
    for (const auto& [acct, pts] : derived) {
        if (pts != 0 && !bundle.saga.contains(acct))
            flag(FindingKind::score_mismatch, "saga:" + acct,
                 "recount says " + std::to_string(pts) + " points, none claimed");
    }
}

void Audit::check_rewards() {
    // statements are delimited by their POOL line
    struct Stmt {
        Day day = 0;
        Cents pool = 0, fees = 0, burned = 0;
        Cents credits = 0, burn_col = 0, spv = 0, remainder = 0;
        bool negative = false;
        std::size_t line = 0;
    };
    std::vector<Stmt> stmts;
    for (std::size_t i = 0; i < bundle.rewards.size(); ++i) {
        const RewardLine& l = bundle.rewards[i];
        if (l.account == "POOL") {
            Stmt s;
            s.day = l.day;
            s.pool = l.col[0];
            s.fees = l.col[1];
            s.burned = l.col[2];
            s.line = i;
            stmts.push_back(s);
            continue;
        }
        if (stmts.empty()) {
            flag(FindingKind::conservation_break, "day " + std::to_string(l.day),
                 "rows before any POOL line");
            return;
        }
        Stmt& s = stmts.back();
        if (l.account == "SPV") {
            s.spv = l.col[1];
        } else if (l.account == "REMAINDER") {
            s.remainder = l.col[0];
        } else {
            for (int c = 0; c < 4; ++c) {
                s.credits += l.col[c];
                if (l.col[c] < 0) s.negative = true;
            }
            s.burn_col += l.col[4];
        }
    }
    for (const Stmt& s : stmts) {
        const std::string subject = "day " + std::to_string(s.day);
        if (s.negative) flag(FindingKind::conservation_break, subject, "negative credit cell");
        Cents lhs = s.credits + s.spv + s.remainder + s.burn_col;
        Cents rhs = s.pool + s.fees + s.burned;
        if (lhs != rhs)
            flag(FindingKind::conservation_break, subject,
                 "credits+spv+remainder+burn " + format_cents(lhs) + " != pool+fees+burned " +
                     format_cents(rhs));
    }
}

} // namespace

AuditReport run_audit(const ScenarioConfig& cfg, const ExportBundle& bundle) {
    cfg.validate();
    Audit a(cfg, bundle);
    return a.run();
}

std::string AuditReport::render() const {
    std::string out;
    out += "# kind,subject,detail\n";
    for (const Finding& f : findings) {
        out += std::string(to_string(f.kind));
        out += ',';
        out += f.subject;
        out += ',';
        out += f.detail;
        out += '\n';
    }
    return out;
}

ReportOutcome report_and_reward(RewardStatement& st, StakeLedger& ledger, SagaLedger& saga,
                                const AuditReport& report, const AccountId& reporter,
                                const ProtocolParams& params) {
    if (!ledger.has_account(reporter)) fail(Errc::unknown_account, reporter);
    ReportOutcome out;
    std::vector<const Finding*> fresh;
    for (const Finding& f : report.findings) {
        if (saga.reported.insert(f.digest()).second)
            fresh.push_back(&f);
        else
            ++out.duplicates;
    }
    if (fresh.empty() && !report.findings.empty())
        fail(Errc::duplicate_report, "every finding was already filed");
    std::set<AccountId> burned;
    for (const Finding* f : fresh) {
        saga.points[reporter] += params.points_per_finding;
        out.points_awarded += params.points_per_finding;
        if (f->kind != FindingKind::fork) continue;
        auto colon = f->subject.find(':');
        AccountId offender = f->subject.substr(0, colon);
        if (!burned.insert(offender).second) continue;
        if (!ledger.has_account(offender)) continue;
        if (ledger.account(offender).validation_staked <= 0) continue;
        out.burns.push_back(burn_deposit(st, ledger, offender, reporter, params, true));
    }
    return out;
}

void upgrade_observer(StakeLedger& ledger, const AccountId& id, Tokens amount) {
    Tokens floor = std::max(ledger.params().lower_bound_l, ledger.params().epsilon);
    if (amount < floor)
        fail(Errc::below_minimum, id + " upgrade of " + std::to_string(amount) + " is under " +
                                      std::to_string(floor));
    if (!ledger.has_account(id)) ledger.add_account(id, 0);
    ledger.credit_tokens(id, amount);
    ledger.stake_tokens(id, StakeKind::validation, amount);
}

} // namespace stair
