// Copyright (c) 2026 the stairsim authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "stair/power_schedule.hpp"
#include "stair/xdag.hpp"

namespace stair {

enum class FameState : std::uint8_t { undecided, famous, not_famous };
enum class DecidedBy : std::uint8_t { none, vote, coin };

struct FinalEntry {
    std::uint64_t position = 0;
    BlockId block;
    BlockId atropos;
    Frame frame = 0; // frame of the finalizing atropos
    std::uint64_t lamport = 0;
};

struct SealEvent {
    Frame frame = 0;
    std::vector<BlockId> atroposes;      // famous roots, ascending id
    std::vector<FinalEntry> newly_final; // in final-log order
    bool checkpoint = false;
};

struct Checkpoint {
    Frame frame = 0;
    std::uint64_t final_count = 0;
    std::string stake_digest;
    std::vector<StakeMutation> applied;
};

struct DoubleVoteEvidence {
    AccountId creator;
    BlockId a, b;
};

// Per-replica consensus: frame assignment, root election, fame voting, and
// atropos finalization over one XDag. Every decision is a function of block
// ancestry alone, so replicas that converge on the same DAG emit identical
// finality logs regardless of delivery order.
//
// Frame/root rule: a leaf sits in frame 0 as a root. Any other block takes
// f = max parent frame and joins frame f+1 iff the frame-f roots in its
// ancestry carry weight strictly greater than 2W/3; otherwise it stays in
// frame f. A block is a root when its frame exceeds its self-parent's frame,
// whether it crossed by election or inherited the frame from an other-parent;
// either way its ancestry carries a supermajority over the previous frame.
// Weight counting skips creators whose equivocation (two blocks, same creator
// and seq) is itself visible inside the counting block's ancestry.
//
// Fame: frame f+1 roots vote YES on a frame-f candidate iff they reach it;
// frame f+2 and later roots tally the previous frame's votes, decide at a
// strict 2W/3 supermajority, and vote the majority otherwise (ties YES). A
// candidate still open after eight extra frames falls back to a deterministic
// coin (low bit of its id), a liveness guard that stays dormant as long as
// honest weight keeps a supermajority.
class ConsensusEngine {
public:
    struct Options {
        // set false to drive finalize_atropos by hand (testing only: deferred
        // seals can outrun the era activation margin the schedule relies on)
        bool auto_seal;
        Options() : auto_seal(true) {}
    };

    ConsensusEngine(XDag& dag, ProtocolParams params, const StakeLedger& genesis,
                    std::vector<StakeMutation> queued = {}, Options opts = {});

    // feed every block exactly once, right after XDag::insert accepts it
    void on_inserted(const EventBlock& b);

    Frame frame_of(const BlockId& id) const;
    bool is_root(const BlockId& id) const;
    Tokens election_score_of(const BlockId& id) const;
    FameState fame_of(const BlockId& root_id) const;
    DecidedBy decided_by(const BlockId& root_id) const;

    Frame last_sealed() const { return last_sealed_; }
    Frame max_frame() const { return max_frame_; }
    bool is_final(const BlockId& id) const;
    const std::vector<FinalEntry>& final_log() const { return final_log_; }
    const std::vector<SealEvent>& seal_events() const { return seal_events_; }
    const std::vector<Checkpoint>& checkpoints() const { return checkpoints_; }

    const PowerSchedule& schedule() const { return schedule_; }
    std::uint64_t coin_decisions() const { return coin_decisions_; }
    std::uint64_t internal_inconsistencies() const { return inconsistencies_; }

    // equivocators whose fork pairs sit entirely in sealed frames
    std::vector<DoubleVoteEvidence> detect_double_vote() const;

    // Finalize one famous root's ancestry. Requires fame of every earlier
    // frame to be fully decided; normally driven by auto-seal.
    SealEvent finalize_atropos(const BlockId& famous_root);

    struct RootView {
        BlockId id;
        AccountId creator;
        Frame frame = 0;
        Tokens weight = 0;
        Tokens election_score = 0;
        FameState fame = FameState::undecided;
    };
    std::vector<RootView> roots_view() const; // frame order, registration order within

private:
    struct Info {
        Frame frame = 0;
        std::uint32_t creator = 0;
        bool root = false;
        bool final = false;
        Tokens election_score = 0;
        std::uint64_t same_mask = 0;  // creators of same-frame roots in the cone
        std::uint64_t prev_mask = 0;  // creators of previous-frame roots in the cone
        std::uint64_t cheat_mask = 0; // creators equivocating inside the cone
        std::vector<std::uint8_t> pair_bits; // per fork pair: bit0 reaches a, bit1 reaches b
    };

    struct RootRec {
        BlockId id;
        std::uint32_t creator = 0;
        Tokens weight = 0;
        Tokens election_score = 0;
        FameState fame = FameState::undecided;
        DecidedBy how = DecidedBy::none;
        std::uint64_t yes_creators = 0; // first-round YES voters, by creator
        std::vector<std::uint8_t> branch_sig; // per fork pair: 0 off-branch, 1 a-side, 2 b-side
        std::unordered_map<BlockId, bool, BlockIdHash> votes; // voter root -> vote
    };

    struct FrameData {
        std::vector<RootRec> roots; // registration order
        std::uint64_t creator_mask = 0;
        Tokens creator_weight = 0; // per-creator, counted once
        int undecided = 0;
        bool sealed = false;
    };

    std::uint32_t creator_index(const AccountId& id);
    Tokens mask_weight(std::uint64_t mask, Frame f) const;
    void sync_fork_pairs();
    void register_root(const EventBlock& b, Info& info, Frame frame);
    const RootRec* resolve_root(Frame frame, std::uint32_t creator, const Info& viewer) const;
    bool bfs_reaches(const BlockId& from, const BlockId& to) const;
    void participate(const BlockId& voter_id, Frame voter_frame, Frame cand_frame, RootRec& cand);
    void decide(RootRec& cand, Frame cand_frame, FameState outcome, DecidedBy how);
    void scan_coin_candidates();
    void seal_ready_frames();
    void collect_cone(const BlockId& atropos, std::vector<std::pair<BlockId, BlockId>>& fresh);
    void append_final(std::vector<std::pair<BlockId, BlockId>>& fresh, Frame frame, SealEvent& ev);

    XDag& dag_;
    ProtocolParams params_;
    PowerSchedule schedule_;
    Options opts_;
    std::vector<StakeMutation> queued_;

    std::unordered_map<BlockId, Info, BlockIdHash> info_;
    std::map<Frame, FrameData> frames_;
    std::map<AccountId, std::uint32_t> creator_idx_;
    std::vector<AccountId> creator_name_;
    std::size_t pairs_synced_ = 0;

    Frame last_sealed_ = -1;
    Frame max_frame_ = -1;
    std::vector<FinalEntry> final_log_;
    std::vector<SealEvent> seal_events_;
    std::vector<Checkpoint> checkpoints_;
    std::uint64_t coin_decisions_ = 0;
    mutable std::uint64_t inconsistencies_ = 0;
};

} // namespace stair
