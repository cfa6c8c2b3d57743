// Copyright (c) 2026 the stairsim authors
// SPDX-License-Identifier: Apache-2.0
#include "stair/consensus.hpp"

#include <algorithm>
#include <bit>
#include <tuple>
#include <unordered_set>

namespace stair {

namespace {
constexpr std::uint32_t k_max_creators = 64;

// extra frames an undecided candidate is given before the coin fires: first
// possible decision is at f+2, plus eight more frames of escalation
constexpr Frame k_coin_delay = 10;
static_assert(k_era_activation_margin == k_coin_delay + 1,
              "era activation must clear the longest possible fame round");

bool supermajority(Tokens part, Tokens whole) { return 3 * part > 2 * whole; }
} // namespace

ConsensusEngine::ConsensusEngine(XDag& dag, ProtocolParams params, const StakeLedger& genesis,
                                 std::vector<StakeMutation> queued, Options opts)
    : dag_(dag), params_(params), schedule_(genesis, params), opts_(opts), queued_(std::move(queued)) {
    params_.validate();
}

std::uint32_t ConsensusEngine::creator_index(const AccountId& id) {
    auto it = creator_idx_.find(id);
    if (it != creator_idx_.end()) return it->second;
    if (creator_name_.size() >= k_max_creators)
        fail(Errc::config_invalid, "more than 64 block creators");
    std::uint32_t idx = static_cast<std::uint32_t>(creator_name_.size());
    creator_idx_.emplace(id, idx);
    creator_name_.push_back(id);
    return idx;
}

Tokens ConsensusEngine::mask_weight(std::uint64_t mask, Frame f) const {
    Tokens total = 0;
    while (mask) {
        unsigned bit = static_cast<unsigned>(std::countr_zero(mask));
        mask &= mask - 1;
        total += schedule_.power(creator_name_[bit], f);
    }
    return total;
}

bool ConsensusEngine::bfs_reaches(const BlockId& from, const BlockId& to) const {
    if (from == to) return true;
    const std::uint64_t floor = dag_.block(to).lamport_ts;
    std::unordered_set<BlockId, BlockIdHash> visited{from};
    std::vector<BlockId> stack{from};
    bool hit = false;
    while (!stack.empty() && !hit) {
        const EventBlock& b = dag_.block(stack.back());
        stack.pop_back();
        if (b.lamport_ts <= floor) continue; // ancestors only get older
        auto push = [&](const BlockId& p) {
            if (p.is_null()) return;
            if (p == to)
                hit = true;
            else if (visited.insert(p).second)
                stack.push_back(p);
        };
        push(b.self_parent);
        for (const auto& p : b.other_parents)
            push(p);
    }
    return hit;
}

// Bring per-block fork-pair reachability up to date with the dag's fork list.
// A pair's second branch is the block being inserted right now, so existing
// cones can only gain first-branch bits here; nothing recorded ever flips.
void ConsensusEngine::sync_fork_pairs() {
    const auto& forks = dag_.forks();
    while (pairs_synced_ < forks.size()) {
        const auto& pair = forks[pairs_synced_];
        std::uint32_t cheater = creator_index(pair.creator);
        for (const auto& id : dag_.insertion_order()) {
            auto it = info_.find(id);
            if (it == info_.end()) continue; // the block being inserted
            Info& info = it->second;
            info.pair_bits.resize(pairs_synced_ + 1, 0);
            std::uint8_t bits = 0;
            if (id == pair.a) bits |= 1;
            if (id == pair.b) bits |= 2;
            const EventBlock& b = dag_.block(id);
            auto fold = [&](const BlockId& p) {
                if (p.is_null()) return;
                const auto& pb = info_.at(p).pair_bits;
                if (pb.size() > pairs_synced_) bits |= pb[pairs_synced_];
            };
            fold(b.self_parent);
            for (const auto& p : b.other_parents)
                fold(p);
            info.pair_bits[pairs_synced_] = bits;
            if (bits == 3) info.cheat_mask |= 1ull << cheater;
        }
        // existing roots of the forked creator learn which branch they extend
        for (auto& [f, fd] : frames_) {
            for (auto& r : fd.roots) {
                if (r.creator != cheater) continue;
                r.branch_sig.resize(pairs_synced_ + 1, 0);
                const EventBlock* cur = &dag_.block(r.id);
                if (cur->seq < pair.seq) continue;
                while (cur->seq > pair.seq)
                    cur = &dag_.block(cur->self_parent);
                r.branch_sig[pairs_synced_] = cur->id == pair.a ? 1 : cur->id == pair.b ? 2 : 0;
            }
        }
        ++pairs_synced_;
    }
}

// Which frame-`frame` root of `creator` does `viewer` actually reach? Unique
// unless the creator forked; then branch signatures checked against the
// viewer's own fork-pair reach bits disambiguate.
const ConsensusEngine::RootRec* ConsensusEngine::resolve_root(Frame frame, std::uint32_t creator,
                                                              const Info& viewer) const {
    auto fit = frames_.find(frame);
    if (fit == frames_.end()) return nullptr;
    const RootRec* found = nullptr;
    for (const auto& r : fit->second.roots) {
        if (r.creator != creator) continue;
        bool compatible = true;
        for (std::size_t i = 0; i < r.branch_sig.size() && compatible; ++i) {
            std::uint8_t need = r.branch_sig[i];
            if (need == 0) continue;
            std::uint8_t have = i < viewer.pair_bits.size() ? viewer.pair_bits[i] : 0;
            compatible = (have & need) != 0;
        }
        if (!compatible) continue;
        if (found) { // both branches reachable should have excluded the creator
            ++inconsistencies_;
            if (r.id < found->id) found = &r;
        } else {
            found = &r;
        }
    }
    return found;
}

void ConsensusEngine::register_root(const EventBlock& b, Info& info, Frame frame) {
    FrameData& fd = frames_[frame];
    RootRec rec;
    rec.id = b.id;
    rec.creator = info.creator;
    rec.weight = schedule_.power(b.creator, frame);
    rec.election_score = info.election_score;

    const auto& forks = dag_.forks();
    if (dag_.is_flagged(b.creator)) {
        rec.branch_sig.resize(forks.size(), 0);
        for (std::size_t i = 0; i < forks.size(); ++i) {
            if (forks[i].creator != b.creator || b.seq < forks[i].seq) continue;
            const EventBlock* cur = &b;
            while (cur->seq > forks[i].seq)
                cur = &dag_.block(cur->self_parent);
            rec.branch_sig[i] = cur->id == forks[i].a ? 1 : cur->id == forks[i].b ? 2 : 0;
        }
    }

    std::uint64_t cbit = 1ull << info.creator;
    if (!(fd.creator_mask & cbit)) {
        fd.creator_mask |= cbit;
        fd.creator_weight += rec.weight;
    }
    fd.undecided += 1;
    fd.roots.push_back(std::move(rec));
    dag_.register_root(frame, b.id, b.creator, fd.roots.back().weight);
    max_frame_ = std::max(max_frame_, frame);

    // late candidate: replay the participation of every younger known root,
    // frame by frame, as if the candidate had been known all along
    RootRec& cand = fd.roots.back();
    for (Frame fr = frame + 1; fr <= max_frame_; ++fr) {
        auto fit = frames_.find(fr);
        if (fit == frames_.end()) continue;
        for (const auto& voter : fit->second.roots) {
            if (cand.fame != FameState::undecided) return;
            participate(voter.id, fr, frame, cand);
        }
    }
}

// One root's contribution to one older undecided candidate: a reachability
// vote from frame f+1; from f+2 on, a weighted tally of the previous frame's
// votes that decides past a strict 2W/3 or records the majority as own vote.
void ConsensusEngine::participate(const BlockId& voter_id, Frame voter_frame, Frame cand_frame,
                                  RootRec& cand) {
    if (cand.fame != FameState::undecided) return;
    const Info& voter = info_.at(voter_id);

    if (voter_frame == cand_frame + 1) {
        std::uint64_t cbit = 1ull << cand.creator;
        bool yes = false;
        if (voter.prev_mask & cbit) {
            if (voter.cheat_mask & cbit) {
                yes = bfs_reaches(voter_id, cand.id); // fork visible: masks are ambiguous
            } else {
                const RootRec* seen = resolve_root(cand_frame, cand.creator, voter);
                yes = seen && seen->id == cand.id;
            }
        }
        cand.votes[voter_id] = yes;
        if (yes) cand.yes_creators |= 1ull << voter.creator;
        return;
    }

    Tokens yes_w = 0, no_w = 0;
    std::uint64_t mask = voter.prev_mask & ~voter.cheat_mask;
    while (mask) {
        std::uint32_t c = static_cast<std::uint32_t>(std::countr_zero(mask));
        mask &= mask - 1;
        const RootRec* s = resolve_root(voter_frame - 1, c, voter);
        if (!s) {
            ++inconsistencies_;
            continue;
        }
        auto v = cand.votes.find(s->id);
        if (v == cand.votes.end()) {
            ++inconsistencies_;
            continue;
        }
        (v->second ? yes_w : no_w) += s->weight;
    }
    Tokens whole = schedule_.total(voter_frame - 1);
    if (supermajority(yes_w, whole)) {
        decide(cand, cand_frame, FameState::famous, DecidedBy::vote);
    } else if (supermajority(no_w, whole)) {
        decide(cand, cand_frame, FameState::not_famous, DecidedBy::vote);
    } else {
        cand.votes[voter_id] = yes_w >= no_w;
    }
}

void ConsensusEngine::decide(RootRec& cand, Frame cand_frame, FameState outcome, DecidedBy how) {
    cand.fame = outcome;
    cand.how = how;
    cand.votes.clear();
    FrameData& fd = frames_[cand_frame];
    fd.undecided -= 1;
    if (fd.sealed && outcome == FameState::famous)
        ++inconsistencies_; // a sealed frame's famous set must never grow
    if (how == DecidedBy::coin) ++coin_decisions_;
}

// Liveness guard of last resort: a candidate still open eight frames past its
// first decision opportunity takes fame from the low bit of its own id.
void ConsensusEngine::scan_coin_candidates() {
    for (auto it = frames_.upper_bound(last_sealed_); it != frames_.end(); ++it) {
        Frame f = it->first;
        if (f + k_coin_delay > max_frame_) break;
        FrameData& fd = it->second;
        if (fd.undecided == 0) continue;
        for (auto& cand : fd.roots) {
            if (cand.fame != FameState::undecided) continue;
            bool heads = cand.id.b[15] & 1;
            decide(cand, f, heads ? FameState::famous : FameState::not_famous, DecidedBy::coin);
        }
    }
}

void ConsensusEngine::collect_cone(const BlockId& atropos,
                                   std::vector<std::pair<BlockId, BlockId>>& fresh) {
    std::vector<BlockId> stack{atropos};
    std::unordered_set<BlockId, BlockIdHash> seen{atropos};
    while (!stack.empty()) {
        BlockId cur = stack.back();
        stack.pop_back();
        Info& info = info_.at(cur);
        if (info.final) continue; // a final block's whole cone is final
        info.final = true;
        fresh.emplace_back(cur, atropos);
        const EventBlock& b = dag_.block(cur);
        auto push = [&](const BlockId& p) {
            if (!p.is_null() && seen.insert(p).second) stack.push_back(p);
        };
        push(b.self_parent);
        for (const auto& p : b.other_parents)
            push(p);
    }
}

// Newly final blocks of one sealed frame are ordered by (lamport, id) across
// all of the frame's atroposes together; the log key is (frame, lamport, id).
void ConsensusEngine::append_final(std::vector<std::pair<BlockId, BlockId>>& fresh, Frame frame,
                                   SealEvent& ev) {
    std::sort(fresh.begin(), fresh.end(), [&](const auto& x, const auto& y) {
        return std::tuple(dag_.block(x.first).lamport_ts, x.first) <
               std::tuple(dag_.block(y.first).lamport_ts, y.first);
    });
    for (const auto& [id, atropos] : fresh) {
        FinalEntry e;
        e.position = final_log_.size();
        e.block = id;
        e.atropos = atropos;
        e.frame = frame;
        e.lamport = dag_.block(id).lamport_ts;
        final_log_.push_back(e);
        ev.newly_final.push_back(e);
    }
}

void ConsensusEngine::seal_ready_frames() {
    while (true) {
        Frame f = last_sealed_ + 1;
        auto it = frames_.find(f);
        if (it == frames_.end()) return;
        FrameData& fd = it->second;
        if (fd.undecided > 0) return;
        // an unseen frame-f root could still be voted famous until more than
        // 2W/3 of frame f+1's per-creator root weight is present to outvote it
        auto next = frames_.find(f + 1);
        Tokens known = next == frames_.end() ? 0 : next->second.creator_weight;
        if (!supermajority(known, schedule_.total(f + 1))) return;

        SealEvent ev;
        ev.frame = f;
        std::vector<const RootRec*> famous;
        for (const auto& r : fd.roots)
            if (r.fame == FameState::famous) famous.push_back(&r);
        std::sort(famous.begin(), famous.end(),
                  [](const RootRec* a, const RootRec* b) { return a->id < b->id; });
        std::vector<std::pair<BlockId, BlockId>> fresh;
        for (const RootRec* r : famous) {
            ev.atroposes.push_back(r->id);
            collect_cone(r->id, fresh);
        }
        append_final(fresh, f, ev);
        fd.sealed = true;
        last_sealed_ = f;

        if (f > 0 && f % params_.checkpoint_frame_interval == 0) {
            ev.checkpoint = true;
            Checkpoint cp;
            cp.frame = f;
            std::vector<StakeMutation> due;
            std::erase_if(queued_, [&](const StakeMutation& m) {
                if (m.checkpoint_frame > f) return false;
                due.push_back(m);
                return true;
            });
            schedule_.apply_checkpoint(f, due);
            cp.final_count = final_log_.size();
            cp.stake_digest = schedule_.digest_of(f + k_era_activation_margin);
            cp.applied = std::move(due);
            checkpoints_.push_back(std::move(cp));
        }
        seal_events_.push_back(std::move(ev));
    }
}

void ConsensusEngine::on_inserted(const EventBlock& b) {
    if (info_.contains(b.id)) fail(Errc::invalid_structure, "block processed twice");
    sync_fork_pairs();

    Info info;
    info.creator = creator_index(b.creator);

    const auto& forks = dag_.forks();
    if (!forks.empty()) {
        info.pair_bits.resize(forks.size(), 0);
        auto fold = [&](const BlockId& pid) {
            if (pid.is_null()) return;
            const Info& p = info_.at(pid);
            info.cheat_mask |= p.cheat_mask;
            for (std::size_t i = 0; i < p.pair_bits.size(); ++i)
                info.pair_bits[i] |= p.pair_bits[i];
        };
        fold(b.self_parent);
        for (const auto& p : b.other_parents)
            fold(p);
        for (std::size_t i = 0; i < forks.size(); ++i) {
            if (b.id == forks[i].a) info.pair_bits[i] |= 1;
            if (b.id == forks[i].b) info.pair_bits[i] |= 2;
            if (info.pair_bits[i] == 3) info.cheat_mask |= 1ull << creator_index(forks[i].creator);
        }
    }

    if (b.is_leaf()) {
        info.frame = 0;
        info.root = true;
        info.same_mask = 1ull << info.creator;
        info.election_score = 0;
        register_root(b, info, 0);
    } else {
        Frame f = info_.at(b.self_parent).frame;
        for (const auto& p : b.other_parents)
            f = std::max(f, info_.at(p).frame);

        std::uint64_t reach = 0;
        auto fold_same = [&](const BlockId& pid) {
            const Info& p = info_.at(pid);
            if (p.frame == f) reach |= p.same_mask;
        };
        fold_same(b.self_parent);
        for (const auto& p : b.other_parents)
            fold_same(p);

        Tokens score = mask_weight(reach & ~info.cheat_mask, f);
        info.election_score = score;
        if (supermajority(score, schedule_.total(f))) {
            info.frame = f + 1;
            info.root = true;
            info.same_mask = 1ull << info.creator;
            info.prev_mask = reach;
            register_root(b, info, f + 1);
        } else {
            info.frame = f;
            info.same_mask = reach;
            std::uint64_t prev = 0;
            auto fold_prev = [&](const BlockId& pid) {
                const Info& p = info_.at(pid);
                if (p.frame == f)
                    prev |= p.prev_mask;
                else if (p.frame == f - 1)
                    prev |= p.same_mask;
            };
            fold_prev(b.self_parent);
            for (const auto& p : b.other_parents)
                fold_prev(p);
            info.prev_mask = prev;
            if (info_.at(b.self_parent).frame < f) {
                // The creator's first block in a frame it reached through an
                // other-parent is still that creator's root there: its cone
                // contains a frame-f block's cone, so its score against frame
                // f-1 clears the threshold that block cleared.
                info.root = true;
                info.same_mask |= 1ull << info.creator;
                info.election_score = mask_weight(prev & ~info.cheat_mask, f - 1);
                register_root(b, info, f);
            }
        }
    }

    bool is_new_root = info.root;
    Frame g = info.frame;
    info_.emplace(b.id, std::move(info));

    if (is_new_root) {
        // vote and tally for every older open candidate
        for (auto fit = frames_.begin(); fit != frames_.end(); ++fit) {
            if (fit->first >= g) break;
            if (fit->second.undecided == 0) continue;
            for (auto& cand : fit->second.roots)
                participate(b.id, g, fit->first, cand);
        }
    }

    scan_coin_candidates();
    if (opts_.auto_seal) seal_ready_frames();
}

Frame ConsensusEngine::frame_of(const BlockId& id) const {
    auto it = info_.find(id);
    if (it == info_.end()) fail(Errc::unknown_block, id.hex());
    return it->second.frame;
}

bool ConsensusEngine::is_root(const BlockId& id) const {
    auto it = info_.find(id);
    if (it == info_.end()) fail(Errc::unknown_block, id.hex());
    return it->second.root;
}

Tokens ConsensusEngine::election_score_of(const BlockId& id) const {
    auto it = info_.find(id);
    if (it == info_.end()) fail(Errc::unknown_block, id.hex());
    return it->second.election_score;
}

FameState ConsensusEngine::fame_of(const BlockId& root_id) const {
    auto it = info_.find(root_id);
    if (it == info_.end() || !it->second.root) fail(Errc::unknown_block, root_id.hex());
    for (const auto& r : frames_.at(it->second.frame).roots)
        if (r.id == root_id) return r.fame;
    fail(Errc::unknown_block, root_id.hex());
}

DecidedBy ConsensusEngine::decided_by(const BlockId& root_id) const {
    auto it = info_.find(root_id);
    if (it == info_.end() || !it->second.root) fail(Errc::unknown_block, root_id.hex());
    for (const auto& r : frames_.at(it->second.frame).roots)
        if (r.id == root_id) return r.how;
    fail(Errc::unknown_block, root_id.hex());
}

bool ConsensusEngine::is_final(const BlockId& id) const {
    auto it = info_.find(id);
    return it != info_.end() && it->second.final;
}

std::vector<DoubleVoteEvidence> ConsensusEngine::detect_double_vote() const {
    std::vector<DoubleVoteEvidence> out;
    for (const auto& pair : dag_.forks()) {
        auto a = info_.find(pair.a), b = info_.find(pair.b);
        if (a == info_.end() || b == info_.end()) continue;
        if (std::max(a->second.frame, b->second.frame) <= last_sealed_)
            out.push_back({pair.creator, pair.a, pair.b});
    }
    return out;
}

SealEvent ConsensusEngine::finalize_atropos(const BlockId& famous_root) {
    auto it = info_.find(famous_root);
    if (it == info_.end() || !it->second.root) fail(Errc::unknown_block, famous_root.hex());
    Frame f = it->second.frame;
    for (auto fit = frames_.begin(); fit != frames_.end() && fit->first < f; ++fit)
        if (fit->second.undecided > 0)
            fail(Errc::earlier_frames_undecided,
                 "frame " + std::to_string(fit->first) + " has open fame");
    const RootRec* rec = nullptr;
    for (const auto& r : frames_.at(f).roots)
        if (r.id == famous_root) rec = &r;
    if (!rec || rec->fame != FameState::famous)
        fail(Errc::invalid_structure, famous_root.hex() + " is not a famous root");

    SealEvent ev;
    ev.frame = f;
    ev.atroposes.push_back(famous_root);
    std::vector<std::pair<BlockId, BlockId>> fresh;
    collect_cone(famous_root, fresh);
    append_final(fresh, f, ev);
    return ev;
}

std::vector<ConsensusEngine::RootView> ConsensusEngine::roots_view() const {
    std::vector<RootView> out;
    for (const auto& [f, fd] : frames_) {
        for (const auto& r : fd.roots) {
            RootView v;
            v.id = r.id;
            v.creator = creator_name_[r.creator];
            v.frame = f;
            v.weight = r.weight;
            v.election_score = r.election_score;
            v.fame = r.fame;
            out.push_back(std::move(v));
        }
    }
    return out;
}

} // namespace stair
