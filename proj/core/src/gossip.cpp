// Copyright (c) 2026 the stairsim authors
// SPDX-License-Identifier: Apache-2.0
#include "stair/gossip.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "stair/consensus.hpp"
#include "stair/exports.hpp"
#include "stair/money.hpp"
#include "stair/rewards.hpp"
#include "stair/xdag.hpp"

namespace stair {

namespace {

Tokens selection_weight(Tokens stake, SelectionMode mode) {
    if (mode == SelectionMode::proportional) return std::max<Tokens>(stake, 1);
    // inverse mode favours small holders without ever zeroing a weight
    return std::max<Tokens>(1, 1'000'000'000 / std::max<Tokens>(stake, 1));
}

} // namespace

std::vector<AccountId> k_peer_selection(Role self_role, const std::vector<PeerCandidate>& candidates,
                                        Rng& rng, std::int64_t k, SelectionMode mode) {
    if (k < 2) fail(Errc::config_invalid, "k must be at least 2");
    const Role want = self_role == Role::user ? Role::validator : Role::user;
    std::vector<std::size_t> opposite;
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (candidates[i].role == want) opposite.push_back(i);
    if (opposite.empty()) fail(Errc::no_opposite_type_peer, std::string(to_string(want)) + " peer required");
    if (std::cmp_less(candidates.size(), k - 1)) fail(Errc::invalid_structure, "fewer than k-1 peers known");

    std::vector<Tokens> w;
    w.reserve(opposite.size());
    for (std::size_t i : opposite)
        w.push_back(selection_weight(candidates[i].stake, mode));
    std::vector<std::size_t> picked{opposite[rng.pick_weighted(w)]};

    // the remaining k-2 picks draw from everyone else, any role
    std::vector<std::size_t> pool;
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (i != picked[0]) pool.push_back(i);
    while (std::cmp_less(picked.size(), k - 1)) {
        w.clear();
        for (std::size_t i : pool)
            w.push_back(selection_weight(candidates[i].stake, mode));
        std::size_t at = rng.pick_weighted(w);
        picked.push_back(pool[at]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(at));
    }
    std::vector<AccountId> out;
    out.reserve(picked.size());
    for (std::size_t i : picked)
        out.push_back(candidates[i].id);
    return out;
}

namespace {

constexpr Tick k_prefix_sample_every = 50;

struct Node {
    std::size_t idx = 0;
    AccountId id;
    Role role = Role::user;
    Tokens stake = 0;
    FaultSpec fault;
    XDag dag;
    std::unique_ptr<ConsensusEngine> engine;
    std::vector<BlockPtr> pending;
    std::unordered_set<BlockId, BlockIdHash> pending_ids;
    std::vector<std::uint64_t> log_hash; // cumulative digest per final-log entry
    std::uint64_t created = 0;

    bool alive(Tick t) const { return fault.kind != FaultKind::silent_after || t < fault.param; }
    bool honest() const { return fault.kind == FaultKind::honest; }
};

struct Message {
    Tick at = 0;
    std::uint64_t seqno = 0;
    enum class Kind { request, response, broadcast } kind = Kind::broadcast;
    std::size_t from = 0;
    std::size_t to = 0;
    std::map<AccountId, std::int64_t> heights; // request payload
    std::vector<BlockPtr> blocks;              // response / broadcast payload
};

struct LaterMessage {
    bool operator()(const Message& a, const Message& b) const {
        if (a.at != b.at) return a.at > b.at;
        return a.seqno > b.seqno;
    }
};

std::uint64_t mix_entry(std::uint64_t h, const FinalEntry& e) {
    auto fold = [&h](std::uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            h ^= (v >> (i * 8)) & 0xff;
            h *= 1099511628211ULL;
        }
    };
    for (std::uint8_t c : e.block.b) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    for (std::uint8_t c : e.atropos.b) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    fold(static_cast<std::uint64_t>(e.frame));
    fold(e.lamport);
    return h;
}

class Sim {
public:
    explicit Sim(const ScenarioConfig& cfg)
        : cfg_(cfg), params_(cfg.to_params()), rng_(cfg.seed), ledger_(params_) {}

    RunOutputs run();

private:
    void seed_nodes();
    void deliver_due();
    void handle(const Message& m);
    void send(Message m);
    void send_request(Node& n, const AccountId& peer);
    void broadcast(Node& from, const BlockPtr& b, std::size_t part, std::size_t parts);
    void accept(Node& n, const std::vector<BlockPtr>& blocks);
    void try_insert(Node& n, const BlockPtr& b);
    void drain_pending(Node& n);
    void admit_own(Node& n, const BlockPtr& b);
    BlockPtr build_block(Node& n, const EventBlock* self_top, const std::string& marker, bool with_requests);
    void create_round(Node& n);
    void housekeeping();
    void on_checkpoint(Frame f);
    void cut_statement();
    void prefix_check();
    void drain();
    void anti_entropy();
    void final_checks();
    RunOutputs render();

    ScenarioConfig cfg_;
    ProtocolParams params_;
    Rng rng_;
    StakeLedger ledger_; // reward and burn bookkeeping alongside the reference engine
    SagaLedger saga_;
    std::vector<RewardStatement> statements_;
    std::vector<Node> nodes_;
    std::map<AccountId, std::size_t> idx_of_;
    std::map<AccountId, Role> role_of_;
    std::map<AccountId, Tokens> stake_of_;
    std::priority_queue<Message, std::vector<Message>, LaterMessage> msgs_;
    Tick now_ = 0;
    std::uint64_t msg_seq_ = 0;
    std::uint64_t sent_ = 0;
    std::uint64_t delivered_ = 0;
    std::uint64_t dropped_ = 0;
    std::uint64_t blocks_created_ = 0;
    std::map<BlockId, Tick> created_at_;
    std::vector<Tick> lags_;
    std::size_t ref_ = 0; // reference node: first honest entry
    std::vector<BlockId> sealed_atroposes_;
    std::size_t seal_seen_ = 0;
    std::size_t fees_taken_ = 0;
    std::size_t checkpoints_seen_ = 0;
    Day next_pool_day_ = 0;
    std::set<AccountId> burned_;
    std::vector<std::string> violations_;
    std::vector<std::pair<std::string, std::string>> metrics_;
};

void Sim::seed_nodes() {
    for (const NodeSpec& ns : cfg_.nodes) {
        ledger_.add_account(ns.id, ns.stake);
        Role r = cfg_.role_of(ns);
        if (r == Role::validator) ledger_.stake_tokens(ns.id, StakeKind::validation, ns.stake);
        role_of_[ns.id] = r;
        stake_of_[ns.id] = ns.stake;
    }
    nodes_.resize(cfg_.nodes.size());
    for (std::size_t i = 0; i < cfg_.nodes.size(); ++i) {
        Node& n = nodes_[i];
        n.idx = i;
        n.id = cfg_.nodes[i].id;
        n.role = role_of_[n.id];
        n.stake = cfg_.nodes[i].stake;
        auto f = cfg_.faults.find(n.id);
        if (f != cfg_.faults.end()) n.fault = f->second;
        n.engine = std::make_unique<ConsensusEngine>(n.dag, params_, ledger_, cfg_.stake_events);
        idx_of_[n.id] = i;
    }
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (nodes_[i].honest()) {
            ref_ = i;
            break;
        }
    }
}

void Sim::send(Message m) {
    auto spread = static_cast<std::uint64_t>(cfg_.latency_max - cfg_.latency_min + 1);
    m.at = now_ + cfg_.latency_min + static_cast<Tick>(rng_.below(spread));
    m.seqno = msg_seq_++;
    ++sent_;
    msgs_.push(std::move(m));
}

void Sim::send_request(Node& n, const AccountId& peer) {
    Message m;
    m.kind = Message::Kind::request;
    m.from = n.idx;
    m.to = idx_of_.at(peer);
    for (const auto& [creator, top] : n.dag.tops())
        m.heights.emplace(creator, static_cast<std::int64_t>(n.dag.block(top).seq));
    send(std::move(m));
}

void Sim::broadcast(Node& from, const BlockPtr& b, std::size_t part, std::size_t parts) {
    std::vector<std::size_t> others;
    for (std::size_t i = 0; i < nodes_.size(); ++i)
        if (i != from.idx) others.push_back(i);
    std::size_t lo = others.size() * part / parts;
    std::size_t hi = others.size() * (part + 1) / parts;
    for (std::size_t j = lo; j < hi; ++j) {
        Message m;
        m.kind = Message::Kind::broadcast;
        m.from = from.idx;
        m.to = others[j];
        m.blocks = {b};
        send(std::move(m));
    }
}

void Sim::deliver_due() {
    while (!msgs_.empty() && msgs_.top().at <= now_) {
        Message m = msgs_.top();
        msgs_.pop();
        handle(m);
    }
}

void Sim::handle(const Message& m) {
    Node& dst = nodes_[m.to];
    if (!dst.alive(now_)) {
        ++dropped_;
        return;
    }
    ++delivered_;
    if (m.kind == Message::Kind::request) {
        // answer with everything the requester is missing, parents first
        std::vector<BlockPtr> out;
        for (const auto& [creator, top] : dst.dag.tops()) {
            (void)top;
            auto it = m.heights.find(creator);
            std::int64_t have = it == m.heights.end() ? -1 : it->second;
            auto missing = dst.dag.blocks_of_creator_above(creator, have);
            out.insert(out.end(), missing.begin(), missing.end());
        }
        std::sort(out.begin(), out.end(), [](const BlockPtr& a, const BlockPtr& b) {
            if (a->lamport_ts != b->lamport_ts) return a->lamport_ts < b->lamport_ts;
            return a->id < b->id;
        });
        Message r;
        r.kind = Message::Kind::response;
        r.from = m.to;
        r.to = m.from;
        r.blocks = std::move(out);
        send(std::move(r));
        return;
    }
    accept(dst, m.blocks);
}

void Sim::accept(Node& n, const std::vector<BlockPtr>& blocks) {
    for (const BlockPtr& b : blocks)
        try_insert(n, b);
    drain_pending(n);
}

void Sim::try_insert(Node& n, const BlockPtr& b) {
    if (n.dag.contains(b->id) || n.pending_ids.contains(b->id)) return;
    auto res = n.dag.insert(b);
    switch (res.status) {
    case XDag::InsertStatus::inserted:
    case XDag::InsertStatus::fork_detected:
        n.engine->on_inserted(*b);
        break;
    case XDag::InsertStatus::missing_parents:
        n.pending_ids.insert(b->id);
        n.pending.push_back(b);
        break;
    default:
        break; // duplicate or structurally invalid: drop
    }
}

void Sim::drain_pending(Node& n) {
    bool moved = true;
    while (moved && !n.pending.empty()) {
        moved = false;
        std::vector<BlockPtr> keep;
        for (const BlockPtr& b : n.pending) {
            if (n.dag.contains(b->id)) {
                n.pending_ids.erase(b->id);
                moved = true;
                continue;
            }
            auto res = n.dag.insert(b);
            if (res.status == XDag::InsertStatus::inserted ||
                res.status == XDag::InsertStatus::fork_detected) {
                n.engine->on_inserted(*b);
                n.pending_ids.erase(b->id);
                moved = true;
            } else if (res.status == XDag::InsertStatus::missing_parents) {
                keep.push_back(b);
            } else {
                n.pending_ids.erase(b->id);
                moved = true;
            }
        }
        n.pending.swap(keep);
    }
}

void Sim::admit_own(Node& n, const BlockPtr& b) {
    auto res = n.dag.insert(b);
    if (res.status != XDag::InsertStatus::inserted && res.status != XDag::InsertStatus::fork_detected) {
        violations_.push_back("internal: node " + n.id + " rejected its own block: " + res.detail);
        return;
    }
    n.engine->on_inserted(*b);
    drain_pending(n);
    created_at_.emplace(b->id, now_);
    ++n.created;
    ++blocks_created_;
}

BlockPtr Sim::build_block(Node& n, const EventBlock* self_top, const std::string& marker,
                          bool with_requests) {
    std::vector<PeerCandidate> cands;
    for (const auto& [creator, top] : n.dag.tops()) {
        (void)top;
        if (creator == n.id) continue;
        cands.push_back({creator, role_of_.at(creator), stake_of_.at(creator)});
    }
    std::vector<AccountId> peers;
    try {
        peers = k_peer_selection(n.role, cands, rng_, params_.k, cfg_.selection_mode);
    } catch (const Error&) {
        return nullptr; // not enough of the mesh visible yet, sit this round out
    }
    if (with_requests)
        for (const AccountId& p : peers)
            send_request(n, p);
    std::vector<const EventBlock*> others;
    others.reserve(peers.size());
    for (const AccountId& p : peers)
        others.push_back(&n.dag.block(n.dag.tops().at(p)));
    std::vector<Transaction> txns;
    if (cfg_.txn_fee > 0)
        txns.push_back({marker, cfg_.txn_fee});
    else if (marker != "tx")
        txns.push_back({marker, 0});
    try {
        return create_event(n.id, n.role, self_top, others, std::move(txns), params_.k);
    } catch (const Error&) {
        return nullptr;
    }
}

void Sim::create_round(Node& n) {
    bool fork_now = n.fault.kind == FaultKind::equivocate &&
                    rng_.chance(static_cast<std::uint64_t>(n.fault.param), 100);
    const EventBlock* top = nullptr;
    auto st = n.dag.tops().find(n.id);
    if (st != n.dag.tops().end()) top = &n.dag.block(st->second);

    BlockPtr a = build_block(n, top, fork_now ? "eq-a" : "tx", true);
    if (!a) return;
    admit_own(n, a);

    if (fork_now && top != nullptr) {
        // second branch: same self-parent, fresh peer draws, split audience
        BlockPtr b = build_block(n, top, "eq-b", false);
        if (b) {
            admit_own(n, b);
            broadcast(n, a, 0, 2);
            broadcast(n, b, 1, 2);
            return;
        }
    }
    broadcast(n, a, 0, 1);

    if (n.fault.kind == FaultKind::spam) {
        for (int extra = 0; extra < 2; ++extra) {
            const EventBlock* t2 = &n.dag.block(n.dag.tops().at(n.id));
            BlockPtr s = build_block(n, t2, "tx", false);
            if (!s) break;
            admit_own(n, s);
            broadcast(n, s, 0, 1);
        }
    }
}

void Sim::housekeeping() {
    Node& ref = nodes_[ref_];
    const auto& evs = ref.engine->seal_events();
    while (seal_seen_ < evs.size()) {
        const SealEvent& ev = evs[seal_seen_++];
        sealed_atroposes_.insert(sealed_atroposes_.end(), ev.atroposes.begin(), ev.atroposes.end());
        for (const FinalEntry& e : ev.newly_final) {
            auto it = created_at_.find(e.block);
            if (it != created_at_.end()) lags_.push_back(now_ - it->second);
        }
        if (ev.checkpoint) on_checkpoint(ev.frame);
    }
    // cumulative pass so children that reference an Atropos late still score
    award_saga_points(saga_, sealed_atroposes_, ref.dag);
    for (Node& n : nodes_) {
        const auto& log = n.engine->final_log();
        while (n.log_hash.size() < log.size()) {
            std::uint64_t prev = n.log_hash.empty() ? 1469598103934665603ULL : n.log_hash.back();
            n.log_hash.push_back(mix_entry(prev, log[n.log_hash.size()]));
        }
    }
}

void Sim::on_checkpoint(Frame f) {
    const Checkpoint* cp = nullptr;
    for (const Checkpoint& c : nodes_[ref_].engine->checkpoints())
        if (c.frame == f) cp = &c;
    if (cp == nullptr) return;
    for (const StakeMutation& m : cp->applied) {
        if (m.kind == StakeMutation::Kind::deposit) {
            if (!ledger_.has_account(m.account)) ledger_.add_account(m.account, 0);
            ledger_.credit_tokens(m.account, m.amount);
            ledger_.stake_tokens(m.account, StakeKind::validation, m.amount);
        } else {
            if (!ledger_.has_account(m.account)) continue;
            Tokens amt = std::min(m.amount, ledger_.account(m.account).validation_staked);
            if (amt > 0) ledger_.begin_exit(m.account, amt);
        }
    }
    ++checkpoints_seen_;
    cut_statement();
}

void Sim::cut_statement() {
    RewardStatement st;
    st.day = ledger_.current_day();
    Cents pool = 0;
    for (Day d = next_pool_day_; d <= st.day; ++d)
        pool += daily_block_reward(d, params_);
    next_pool_day_ = st.day + 1;

    const auto& log = nodes_[ref_].engine->final_log();
    std::vector<BlockPtr> fee_blocks;
    for (; fees_taken_ < log.size(); ++fees_taken_) {
        BlockPtr b = nodes_[ref_].dag.block_ptr(log[fees_taken_].block);
        if (b->fee_total() > 0) fee_blocks.push_back(b);
    }
    route_transaction_fees(st, fee_blocks, ledger_, cfg_.fee_mode, params_);

    for (const DoubleVoteEvidence& ev : nodes_[ref_].engine->detect_double_vote()) {
        if (!burned_.insert(ev.creator).second) continue;
        if (!ledger_.has_account(ev.creator)) continue;
        if (ledger_.account(ev.creator).validation_staked <= 0) continue;
        burn_deposit(st, ledger_, ev.creator, std::nullopt, params_, true);
    }

    distribute_validation_rewards(st, pool, saga_, ledger_);
    if (!st.conserved())
        violations_.push_back("rewards: statement for day " + std::to_string(st.day) +
                              " breaks conservation");
    statements_.push_back(std::move(st));
}

void Sim::prefix_check() {
    const Node* longest = nullptr;
    for (const Node& n : nodes_) {
        if (!n.honest() && n.fault.kind != FaultKind::silent_after) continue;
        if (longest == nullptr || n.log_hash.size() > longest->log_hash.size()) longest = &n;
    }
    if (longest == nullptr) return;
    for (const Node& n : nodes_) {
        if (&n == longest) continue;
        if (!n.honest() && n.fault.kind != FaultKind::silent_after) continue;
        std::size_t m = n.log_hash.size();
        if (m == 0) continue;
        if (m > longest->log_hash.size() || n.log_hash[m - 1] != longest->log_hash[m - 1])
            violations_.push_back("agreement: tick " + std::to_string(now_) + ", node " + n.id +
                                  " final log stopped being a prefix");
    }
}

void Sim::drain() {
    while (!msgs_.empty()) {
        now_ = std::max(now_, msgs_.top().at);
        ledger_.set_day(now_ / cfg_.ticks_per_day);
        deliver_due();
        housekeeping();
    }
}

void Sim::anti_entropy() {
    bool moved = true;
    while (moved) {
        moved = false;
        for (Node& dst : nodes_) {
            if (!dst.honest()) continue;
            for (Node& src : nodes_) {
                if (src.idx == dst.idx || !src.honest()) continue;
                for (const BlockId& id : src.dag.insertion_order()) {
                    if (dst.dag.contains(id)) continue;
                    try_insert(dst, src.dag.block_ptr(id));
                    drain_pending(dst);
                    moved = true;
                }
            }
        }
    }
}

void Sim::final_checks() {
    // quiescent agreement: honest nodes byte-identical, silent nodes a prefix
    std::optional<std::string> common;
    for (Node& n : nodes_) {
        if (!n.honest()) continue;
        std::string log = render_finality_log(n.engine->final_log());
        if (!common)
            common = std::move(log);
        else if (*common != log)
            violations_.push_back("agreement: node " + n.id + " finality log diverges");
    }
    if (common) {
        for (Node& n : nodes_) {
            if (n.fault.kind != FaultKind::silent_after) continue;
            std::string log = render_finality_log(n.engine->final_log());
            if (log.size() > common->size() || common->compare(0, log.size(), log) != 0)
                violations_.push_back("agreement: silent node " + n.id + " log is not a prefix");
        }
    }

    // every block's frame and root flag must match the assignment rule: cross
    // on a strict supermajority over the parents' max frame, else inherit it
    // and root only as the creator's first block there
    Node& ref = nodes_[ref_];
    bool forks_seen = !ref.dag.flagged_creators().empty();
    for (const BlockId& id : ref.dag.insertion_order()) {
        const EventBlock& b = ref.dag.block(id);
        if (b.is_leaf()) {
            if (ref.engine->frame_of(id) != 0 || !ref.engine->is_root(id))
                violations_.push_back("election: leaf " + id.hex() + " is not a frame-0 root");
            continue;
        }
        Frame f = ref.engine->frame_of(id);
        Tokens score = ref.engine->election_score_of(id);
        bool root = ref.engine->is_root(id);
        Frame fp = ref.engine->frame_of(b.self_parent);
        Frame sp = fp;
        for (const BlockId& p : b.other_parents)
            fp = std::max(fp, ref.engine->frame_of(p));
        if (f == fp + 1) {
            if (!root || !(3 * score > 2 * ref.engine->schedule().total(fp)))
                violations_.push_back("election: block " + id.hex() +
                                      " crossed a frame without a supermajority score");
        } else if (f != fp) {
            violations_.push_back("election: block " + id.hex() + " has a malformed frame");
        } else if (root != (sp < f)) {
            violations_.push_back("election: block " + id.hex() + " root flag contradicts its chain");
        } else if (!root && 3 * score > 2 * ref.engine->schedule().total(f)) {
            violations_.push_back("election: block " + id.hex() + " scored a supermajority but stayed");
        } else if (root && !forks_seen && !(3 * score > 2 * ref.engine->schedule().total(f - 1))) {
            // absent forks an inherited frame implies an inherited supermajority
            violations_.push_back("election: root " + id.hex() + " lacks a supermajority score");
        }
    }

    std::uint64_t inconsistencies = 0;
    for (Node& n : nodes_)
        if (n.honest()) inconsistencies += n.engine->internal_inconsistencies();
    if (inconsistencies > 0)
        violations_.push_back("internal: honest engines reported " + std::to_string(inconsistencies) +
                              " inconsistencies");

    Tokens byz = 0;
    for (Node& n : nodes_)
        if (n.fault.kind != FaultKind::honest) byz += ref.engine->schedule().power(n.id, 0);
    Tokens total = ref.engine->schedule().total(0);
    // agreement is only promised while faulty power stays within floor((W-1)/3)
    if (3 * byz >= total && byz > 0)
        violations_.push_back("fault budget: byzantine power " + std::to_string(byz) +
                              " exceeds floor((W-1)/3) of W=" + std::to_string(total) +
                              ", agreement is not guaranteed");

    std::uint64_t final_count = ref.engine->final_log().size();
    std::sort(lags_.begin(), lags_.end());
    auto lag_at = [&](std::size_t num, std::size_t den) -> Tick {
        if (lags_.empty()) return 0;
        std::size_t i = std::min(lags_.size() - 1, lags_.size() * num / den);
        return lags_[i];
    };

    std::string cp_frames;
    for (const Checkpoint& c : ref.engine->checkpoints()) {
        if (!cp_frames.empty()) cp_frames += ';';
        cp_frames += std::to_string(c.frame);
    }
    std::string flagged;
    for (const AccountId& a : ref.dag.flagged_creators()) {
        if (!flagged.empty()) flagged += ';';
        flagged += a;
    }
    std::int64_t saga_total = 0;
    for (const auto& [id, pts] : saga_.points)
        saga_total += pts;

    auto put = [&](std::string k, std::string v) { metrics_.emplace_back(std::move(k), std::move(v)); };
    put("scenario", cfg_.name);
    put("seed", std::to_string(cfg_.seed));
    put("nodes", std::to_string(nodes_.size()));
    put("ticks", std::to_string(cfg_.max_ticks));
    put("days", std::to_string(ledger_.current_day() + 1));
    put("blocks_created", std::to_string(blocks_created_));
    put("messages_sent", std::to_string(sent_));
    put("messages_delivered", std::to_string(delivered_));
    put("messages_dropped", std::to_string(dropped_));
    put("blocks_final", std::to_string(final_count));
    put("frames_sealed", std::to_string(ref.engine->last_sealed() + 1));
    put("max_frame", std::to_string(ref.engine->max_frame()));
    put("checkpoints", std::to_string(ref.engine->checkpoints().size()));
    put("checkpoint_frames", cp_frames.empty() ? "-" : cp_frames);
    put("forks_detected", std::to_string(ref.dag.forks().size()));
    put("flagged", flagged.empty() ? "-" : flagged);
    put("coin_decisions", std::to_string(ref.engine->coin_decisions()));
    put("inconsistencies", std::to_string(inconsistencies));
    put("byzantine_power", std::to_string(byz));
    put("total_power", std::to_string(total));
    put("finality_lag_p50", std::to_string(lag_at(1, 2)));
    put("finality_lag_p90", std::to_string(lag_at(9, 10)));
    put("finality_lag_max", lags_.empty() ? "0" : std::to_string(lags_.back()));
    put("saga_points", std::to_string(saga_total));
    put("statements", std::to_string(statements_.size()));
    put("violations", std::to_string(violations_.size()));
    put("pass", violations_.empty() ? "true" : "false");
}

RunOutputs Sim::render() {
    RunOutputs out;
    out.config = cfg_;
    out.violations = violations_;
    out.pass = violations_.empty();
    out.metrics = metrics_;
    for (Node& n : nodes_)
        out.finality_logs.emplace_back(n.id, render_finality_log(n.engine->final_log()));
    Node& ref = nodes_[ref_];
    out.dag_csv = ref.dag.export_csv();
    out.roots_csv = render_roots_csv(ref.engine->roots_view());
    out.rewards_csv = render_rewards_csv(statements_);
    out.ledger_csv = ledger_.snapshot();
    out.saga_csv = render_saga_csv(saga_);
    out.config_echo = cfg_.echo();
    std::string rep;
    for (const auto& [k, v] : metrics_) {
        rep += k;
        rep += '=';
        rep += v;
        rep += '\n';
    }
    for (const std::string& v : violations_) {
        rep += "violation=";
        rep += v;
        rep += '\n';
    }
    out.report_text = rep;
    return out;
}

RunOutputs Sim::run() {
    seed_nodes();
    for (Node& n : nodes_) {
        if (n.role == Role::observer || !n.alive(0)) continue;
        BlockPtr leaf = create_leaf(n.id, n.role, {});
        admit_own(n, leaf);
        broadcast(n, leaf, 0, 1);
    }
    housekeeping();
    for (now_ = 1; now_ <= cfg_.max_ticks; ++now_) {
        ledger_.set_day(now_ / cfg_.ticks_per_day);
        deliver_due();
        for (Node& n : nodes_) {
            if (n.role == Role::observer || !n.alive(now_)) continue;
            if (!rng_.chance(cfg_.create_prob_pct, 100)) continue;
            create_round(n);
        }
        housekeeping();
        if (now_ % k_prefix_sample_every == 0) prefix_check();
    }
    drain();
    anti_entropy();
    housekeeping();
    cut_statement();
    final_checks();
    return render();
}

} // namespace

RunOutputs run_scenario(const ScenarioConfig& cfg) {
    cfg.validate();
    Sim sim(cfg);
    return sim.run();
}

} // namespace stair
