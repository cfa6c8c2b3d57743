// Copyright (c) 2026 the stairsim authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "stair/exports.hpp"
#include "stair/rewards.hpp"
#include "stair/scenario.hpp"

namespace stair {

enum class FindingKind : std::uint8_t {
    invalid_block,
    fork,
    threshold_violation,
    score_mismatch,
    order_divergence,
    conservation_break,
};
std::string_view to_string(FindingKind k);

struct Finding {
    FindingKind kind = FindingKind::invalid_block;
    std::string subject; // block id, creator:seq, node:position, or statement day
    std::string detail;

    std::string digest() const; // dedup key over (kind, subject)
};

// Parsed run artifacts. dag.csv is mandatory; the rest are audited only when
// the matching flag says the file was there.
struct ExportBundle {
    std::vector<DagRow> dag;
    std::vector<std::pair<AccountId, std::vector<FinalRow>>> logs;
    std::vector<RootRow> roots;
    std::vector<RewardLine> rewards;
    std::map<AccountId, std::int64_t> saga;
    bool has_roots = false;
    bool has_rewards = false;
    bool has_saga = false;
};

// dag.csv, finality_<node>.log, roots.csv, rewards.csv, saga.csv
ExportBundle load_export_dir(const std::string& dir);

struct AuditReport {
    std::vector<Finding> findings;
    std::size_t blocks_usable = 0;
    std::size_t roots_derived = 0;
    Frame frames_sealed = 0; // count of sealed frames the re-derivation reached
    std::size_t final_derived = 0;
    std::size_t logs_checked = 0;

    bool clean() const { return findings.empty(); }
    std::string render() const; // one finding per line plus a summary header
};

// Re-derives frames, roots, fame, sealing, and the final order from the raw
// block rows alone (brute-force ancestor sets, not the engine's incremental
// masks), then checks every claimed artifact against the result. Assumes a
// quiescent export: undecided fame in roots.csv is compared verbatim.
AuditReport run_audit(const ScenarioConfig& cfg, const ExportBundle& bundle);

struct ReportOutcome {
    std::int64_t points_awarded = 0;
    std::vector<BurnOutcome> burns; // one per fork offender actually burned
    std::size_t duplicates = 0;
};

// Files a report: every first-seen finding pays points_per_finding to the
// reporter, fork findings additionally burn the offender's validation stake
// with the reporter taking the configured cut. A report consisting solely of
// already-filed findings throws duplicate_report.
ReportOutcome report_and_reward(RewardStatement& st, StakeLedger& ledger, SagaLedger& saga,
                                const AuditReport& report, const AccountId& reporter,
                                const ProtocolParams& params);

// An observer joins the validator set: the deposit is credited and staked for
// validation. Saga points ride on the account id, so they carry over as-is.
void upgrade_observer(StakeLedger& ledger, const AccountId& id, Tokens amount);

} // namespace stair
