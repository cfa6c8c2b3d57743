// Copyright (c) 2026 the stairsim authors
// SPDX-License-Identifier: Apache-2.0
//
// stair-sim: scenario runner, seed sweeps, export audit, reward reports.
// Exit codes: 0 ok, 2 bad config or malformed input, 3 invariant violations
// (artifacts are still written), 4 audit findings.
#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "stair/exports.hpp"
#include "stair/gossip.hpp"
#include "stair/observer.hpp"
#include "stair/scenario.hpp"

namespace {

constexpr int k_exit_ok = 0;
constexpr int k_exit_config = 2;
constexpr int k_exit_violation = 3;
constexpr int k_exit_findings = 4;

struct CommonOpts {
    std::string config;
    std::vector<std::string> overrides;
    std::string out;
    std::string format = "kv";
    std::optional<std::uint64_t> seed;
};

stair::ScenarioConfig load_cfg(const CommonOpts& o) {
    stair::ScenarioConfig cfg = stair::load_scenario(o.config);
    for (const std::string& ov : o.overrides)
        stair::apply_override(cfg, ov);
    if (o.seed) cfg.seed = *o.seed;
    cfg.validate();
    return cfg;
}

std::string metric(const stair::RunOutputs& out, const std::string& key) {
    for (const auto& [k, v] : out.metrics)
        if (k == key) return v;
    return "-";
}

void write_artifacts(const stair::RunOutputs& out, const std::string& dir) {
    auto p = [&](const std::string& name) { return dir + "/" + name; };
    stair::write_text_file(p("run_report.txt"), out.report_text);
    stair::write_text_file(p("dag.csv"), out.dag_csv);
    stair::write_text_file(p("roots.csv"), out.roots_csv);
    stair::write_text_file(p("rewards.csv"), out.rewards_csv);
    stair::write_text_file(p("ledger.csv"), out.ledger_csv);
    stair::write_text_file(p("saga.csv"), out.saga_csv);
    stair::write_text_file(p("config_used.cfg"), out.config_echo);
    for (const auto& [node, log] : out.finality_logs)
        stair::write_text_file(p("finality_" + node + ".log"), log);
}

void print_run(const stair::RunOutputs& out, const std::string& format) {
    if (format == "kv") {
        std::fputs(out.report_text.c_str(), stdout);
        return;
    }
    std::size_t width = 0;
    for (const auto& [k, v] : out.metrics)
        width = std::max(width, k.size());
    for (const auto& [k, v] : out.metrics)
        std::printf("%-*s  %s\n", static_cast<int>(width), k.c_str(), v.c_str());
    for (const std::string& v : out.violations)
        std::printf("violation: %s\n", v.c_str());
}

int cmd_run(const CommonOpts& o) {
    stair::ScenarioConfig cfg = load_cfg(o);
    stair::RunOutputs out = stair::run_scenario(cfg);
    if (!o.out.empty()) write_artifacts(out, o.out);
    print_run(out, o.format);
    return out.pass ? k_exit_ok : k_exit_violation;
}

int cmd_sweep(const CommonOpts& o, const std::string& seeds) {
    auto dots = seeds.find("..");
    std::uint64_t lo = 0, hi = 0;
    try {
        if (dots == std::string::npos) {
            lo = hi = std::stoull(seeds);
        } else {
            lo = std::stoull(seeds.substr(0, dots));
            hi = std::stoull(seeds.substr(dots + 2));
        }
    } catch (const std::exception&) {
        std::fprintf(stderr, "error: cannot parse seed range '%s'\n", seeds.c_str());
        return k_exit_config;
    }
    if (hi < lo) {
        std::fprintf(stderr, "error: empty seed range '%s'\n", seeds.c_str());
        return k_exit_config;
    }
    stair::ScenarioConfig base = load_cfg(o);

    std::string table = "seed  pass  violations  blocks_final  frames_sealed  messages_sent  "
                        "lag_p50  lag_p90  lag_max\n";
    std::uint64_t passed = 0;
    for (std::uint64_t s = lo; s <= hi; ++s) {
        stair::ScenarioConfig cfg = base;
        cfg.seed = s;
        stair::RunOutputs out = stair::run_scenario(cfg);
        if (!o.out.empty()) write_artifacts(out, o.out + "/seed_" + std::to_string(s));
        if (out.pass) ++passed;
        std::printf("seed=%llu pass=%s violations=%zu blocks_final=%s frames_sealed=%s "
                    "messages_sent=%s finality_lag_p50=%s finality_lag_p90=%s finality_lag_max=%s\n",
                    static_cast<unsigned long long>(s), out.pass ? "true" : "false",
                    out.violations.size(), metric(out, "blocks_final").c_str(),
                    metric(out, "frames_sealed").c_str(), metric(out, "messages_sent").c_str(),
                    metric(out, "finality_lag_p50").c_str(), metric(out, "finality_lag_p90").c_str(),
                    metric(out, "finality_lag_max").c_str());
        table += std::to_string(s) + "  " + (out.pass ? "yes" : "NO") + "  " +
                 std::to_string(out.violations.size()) + "  " + metric(out, "blocks_final") + "  " +
                 metric(out, "frames_sealed") + "  " + metric(out, "messages_sent") + "  " +
                 metric(out, "finality_lag_p50") + "  " + metric(out, "finality_lag_p90") + "  " +
                 metric(out, "finality_lag_max") + "\n";
    }
    std::uint64_t count = hi - lo + 1;
    std::printf("seeds=%llu passed=%llu sweep_pass=%s\n", static_cast<unsigned long long>(count),
                static_cast<unsigned long long>(passed), passed == count ? "true" : "false");
    if (!o.out.empty()) stair::write_text_file(o.out + "/summary.txt", table);
    return passed == count ? k_exit_ok : k_exit_violation;
}

int cmd_audit(const CommonOpts& o, const std::string& dir) {
    stair::ScenarioConfig cfg = load_cfg(o);
    stair::ExportBundle bundle = stair::load_export_dir(dir);
    stair::AuditReport rep = stair::run_audit(cfg, bundle);
    if (o.format == "kv") {
        std::printf("blocks_usable=%zu\nroots_derived=%zu\nframes_sealed=%lld\nfinal_derived=%zu\n"
                    "logs_checked=%zu\nfindings=%zu\n",
                    rep.blocks_usable, rep.roots_derived, static_cast<long long>(rep.frames_sealed),
                    rep.final_derived, rep.logs_checked, rep.findings.size());
        for (const stair::Finding& f : rep.findings)
            std::printf("finding=%s,%s,%s\n", std::string(to_string(f.kind)).c_str(),
                        f.subject.c_str(), f.detail.c_str());
    } else {
        std::fputs(rep.render().c_str(), stdout);
    }
    if (!o.out.empty()) stair::write_text_file(o.out + "/audit_report.txt", rep.render());
    return rep.clean() ? k_exit_ok : k_exit_findings;
}

int cmd_rewards(const CommonOpts& o) {
    stair::ScenarioConfig cfg = load_cfg(o);
    stair::RunOutputs out = stair::run_scenario(cfg);
    std::fputs(out.rewards_csv.c_str(), stdout);
    std::fputs(out.saga_csv.c_str(), stdout);
    if (!o.out.empty()) {
        stair::write_text_file(o.out + "/rewards.csv", out.rewards_csv);
        stair::write_text_file(o.out + "/saga.csv", out.saga_csv);
    }
    return out.pass ? k_exit_ok : k_exit_violation;
}

int cmd_validate(const CommonOpts& o) {
    stair::ScenarioConfig cfg = load_cfg(o);
    std::fputs(cfg.echo().c_str(), stdout);
    return k_exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"stair-sim: deterministic consensus simulator"};
    app.require_subcommand(1);

    CommonOpts o;
    std::string seeds;
    std::string audit_dir;
    std::uint64_t seed_flag = 0;

    auto add_common = [&](CLI::App* c, bool need_config) {
        auto* cfg = c->add_option("--config", o.config, "scenario config file");
        if (need_config) cfg->required();
        c->add_option("--set", o.overrides, "override, key=value (repeatable)");
        c->add_option("--out", o.out, "output directory");
        c->add_option("--format", o.format, "text or kv (default kv)")
            ->check(CLI::IsMember({"text", "kv"}));
        c->add_option("--seed", seed_flag, "seed override")->each([&](const std::string&) {
            o.seed = seed_flag;
        });
    };

    CLI::App* run = app.add_subcommand("run", "run one scenario");
    add_common(run, true);
    CLI::App* sweep = app.add_subcommand("sweep", "run a seed range");
    add_common(sweep, true);
    sweep->add_option("--seeds", seeds, "seed range A..B")->required();
    CLI::App* audit = app.add_subcommand("audit", "re-derive consensus from an export dir");
    add_common(audit, true);
    audit->add_option("dir", audit_dir, "export directory to audit")->required();
    CLI::App* rewards = app.add_subcommand("rewards-report", "run and print reward statements");
    add_common(rewards, true);
    CLI::App* validate = app.add_subcommand("validate-config", "parse, validate, and echo a config");
    add_common(validate, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? k_exit_ok : k_exit_config;
    }

    try {
        if (run->parsed()) return cmd_run(o);
        if (sweep->parsed()) return cmd_sweep(o, seeds);
        if (audit->parsed()) return cmd_audit(o, audit_dir);
        if (rewards->parsed()) return cmd_rewards(o);
        if (validate->parsed()) return cmd_validate(o);
    } catch (const stair::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return k_exit_config;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return k_exit_config;
    }
    return k_exit_config;
}
