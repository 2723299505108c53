// Copyright 2026 vtp developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0

// Command-line entry points: scenario runs, threat scenarios, tier
// lookups, audit verification, explorer queries, and the HTTP service.

#include "vtp/core/sha256.hpp"
#include "vtp/gateway/attacks.hpp"
#include "vtp/gateway/runner.hpp"
#include "vtp/gateway/server.hpp"
#include "vtp/verify/audit.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace vtp;

namespace
{

int
cmdRunFlow(std::string const& configPath, std::int64_t seedOverride,
           std::string const& transcriptPath, std::string const& auditPath)
{
    auto cfg = gateway::RunConfig::fromFile(configPath);
    if (seedOverride >= 0)
        cfg.seed = static_cast<std::uint64_t>(seedOverride);

    gateway::Runner runner(cfg);
    auto result = runner.runFlow();

    std::cout << core::canonicalSerialize(core::Json{
                     {"workflow_id", result.workflowId},
                     {"escrow_id", result.escrowId},
                     {"outcome", result.outcome},
                     {"final_escrow_status", result.finalEscrowStatus},
                     {"transcript_digest", result.transcriptDigest.hex()},
                     {"audit_head",
                      runner.world().audit.headHash().hex()},
                     {"sha256_backend",
                      std::string(core::sha256BackendName())}})
              << "\n";

    if (!transcriptPath.empty())
    {
        std::ofstream out(transcriptPath);
        if (!out)
        {
            std::cerr << "cannot write " << transcriptPath << "\n";
            return 2;
        }
        out << core::canonicalSerialize(result.transcript) << "\n";
    }
    if (!auditPath.empty())
    {
        std::ofstream out(auditPath);
        if (!out)
        {
            std::cerr << "cannot write " << auditPath << "\n";
            return 2;
        }
        runner.world().audit.exportJsonl(out);
    }
    return result.success ? 0 : 1;
}

int
cmdAttack(std::string const& scenario, std::uint64_t seed)
{
    auto report =
        gateway::runAttack(scenario, gateway::defaultAttackConfig(seed));
    std::cout << core::canonicalSerialize(report.toJson()) << "\n";
    return report.blocked ? 0 : 1;
}

int
cmdTier(std::uint64_t amount)
{
    auto tier = settle::classifyTier(core::Amount{amount, "USD"});
    std::cout << core::canonicalSerialize(
                     core::Json{{"amount_minor_units", amount},
                                {"tier", std::string(settle::tierName(tier))}})
              << "\n";
    return 0;
}

int
cmdAuditVerify(std::string const& path)
{
    std::ifstream in(path);
    if (!in)
    {
        std::cerr << "cannot open " << path << "\n";
        return 2;
    }
    bool ok = verify::AuditLedger::verifyJsonl(in);
    std::cout << core::canonicalSerialize(core::Json{{"ok", ok}}) << "\n";
    return ok ? 0 : 1;
}

int
cmdExplorerTx(std::string const& configPath, std::uint64_t seed,
              std::string const& railId, std::string const& txId)
{
    auto cfg = configPath.empty() ? gateway::defaultAttackConfig(seed)
                                  : gateway::RunConfig::fromFile(configPath);
    cfg.seed = seed;
    gateway::Runner runner(cfg);
    runner.runFlow();

    settle::ExplorerFilter filter;
    if (!railId.empty())
        filter.railId = railId;
    if (!txId.empty())
        filter.txId = txId;
    auto arr = core::Json::array();
    for (auto const& r : runner.world().explorer.query(filter))
        arr.push_back(r.toJson());
    std::cout << core::canonicalSerialize(arr) << "\n";
    return 0;
}

}

int
main(int argc, char** argv)
{
    CLI::App app{"verify-then-pay settlement simulator"};
    app.require_subcommand(1);

    std::string configPath;
    std::int64_t seedOverride = -1;
    std::string transcriptPath;
    std::string auditPath;
    auto* runFlow = app.add_subcommand(
        "run-flow", "execute one full task-to-settlement lifecycle");
    runFlow->add_option("--config", configPath, "run config JSON")
        ->required();
    runFlow->add_option("--seed", seedOverride, "override the config seed");
    runFlow->add_option("--transcript", transcriptPath,
                        "write the run transcript to this file");
    runFlow->add_option("--export-audit", auditPath,
                        "write the audit ledger (JSON Lines) to this file");

    std::string scenario;
    std::uint64_t attackSeed = 1;
    auto* attack =
        app.add_subcommand("attack", "drive one threat scenario");
    attack
        ->add_option("scenario", scenario,
                     "phantom_deposit | unverified_payout | "
                     "key_exfiltration | cross_rail_replay")
        ->required();
    attack->add_option("--seed", attackSeed, "scenario seed");

    std::uint64_t amount = 0;
    auto* tier = app.add_subcommand("tier",
                                    "classify an amount in minor units");
    tier->add_option("--amount", amount, "amount in minor units")->required();

    auto* audit = app.add_subcommand("audit", "audit ledger utilities");
    std::string auditFile;
    auto* auditVerify =
        audit->add_subcommand("verify", "verify an exported ledger file");
    auditVerify->add_option("--file", auditFile, "JSON Lines export")
        ->required();

    auto* explorer = app.add_subcommand("explorer", "explorer queries");
    std::string exRail, exTx, exConfig;
    std::uint64_t exSeed = 1;
    auto* explorerTx = explorer->add_subcommand(
        "tx", "run a flow, then look up settlement records");
    explorerTx->add_option("--rail", exRail, "rail id filter");
    explorerTx->add_option("--tx", exTx, "transaction id filter");
    explorerTx->add_option("--config", exConfig,
                           "run config (defaults to the built-in scenario)");
    explorerTx->add_option("--seed", exSeed, "run seed");

    int port = 8080;
    std::string host = "127.0.0.1";
    auto* serve = app.add_subcommand("serve", "start the HTTP JSON API");
    serve->add_option("--port", port, "listen port");
    serve->add_option("--host", host, "bind address");

    CLI11_PARSE(app, argc, argv);

    try
    {
        if (*runFlow)
            return cmdRunFlow(configPath, seedOverride, transcriptPath,
                              auditPath);
        if (*attack)
            return cmdAttack(scenario, attackSeed);
        if (*tier)
            return cmdTier(amount);
        if (*auditVerify)
            return cmdAuditVerify(auditFile);
        if (*explorerTx)
            return cmdExplorerTx(exConfig, exSeed, exRail, exTx);
        if (*serve)
        {
            gateway::ApiServer server;
            std::cerr << "listening on " << host << ":" << port << "\n";
            return server.listen(host, port) ? 0 : 2;
        }
    }
    catch (Error const& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
