// Copyright 2026 vtp developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#include "vtp/gateway/attacks.hpp"
#include "vtp/core/errors.hpp"
#include "vtp/core/sha256.hpp"
#include "vtp/gateway/runner.hpp"

#include <algorithm>

namespace vtp::gateway
{

core::Json
AttackReport::toJson() const
{
    return core::Json{{"scenario", scenario},
                      {"blocked", blocked},
                      {"mechanism", mechanism},
                      {"evidence", evidence}};
}

RunConfig
defaultAttackConfig(std::uint64_t seed)
{
    RunConfig cfg;
    cfg.seed = seed;

    settle::RailConfig alpha;
    alpha.railId = "sim:alpha";
    alpha.chainId = 101;
    alpha.flatFee = core::Amount{10, "USD"};
    settle::RailConfig beta;
    beta.railId = "sim:beta";
    beta.chainId = 102;
    beta.flatFee = core::Amount{10, "USD"};
    cfg.rails = {alpha, beta};

    AgentConfig worker;
    worker.manifest.agentId = "agent-worker";
    worker.manifest.domainName = "worker.agents.test";
    worker.manifest.capabilities = {"shopping"};
    worker.manifest.endpointRef = "local://agent-worker";
    worker.manifest.declaredCost = core::Amount{300, "USD"};
    worker.manifest.declaredSuccessRateBp = 9500;
    worker.manifest.systemPrompt = "Buy exactly what the cart lists.";
    worker.manifest.toolConfig = {"catalog-search", "checkout"};
    worker.manifest.version = "1.0.0";
    worker.behavior = orch::AgentBehavior::Honest;
    worker.contract.agentId = "agent-worker";
    worker.contract.requiredProofKinds = {
        verify::ProofKind::NotaryReceiptExecutor,
        verify::ProofKind::AJwtIntegrity};
    worker.contract.minNotaryWitnesses = 1;
    worker.contract.extraPredicates = {"reconcile-amounts",
                                       "budget-adherence",
                                       "output-matches-cart"};
    cfg.agents = {worker};

    cfg.merchantQuote.merchantAgentId = "agent-worker";
    cfg.merchantQuote.items = {
        orch::CartItem{"sku-headphones", "noise-canceling headphones",
                       core::Amount{5'000, "USD"}}};

    cfg.task.userId = "user-1";
    cfg.task.intentText = "buy durable noise-canceling headphones";
    cfg.task.requiredCapability = "shopping";
    cfg.task.budgetCap = core::Amount{5'000, "USD"};
    cfg.task.railPreference = "sim:alpha";
    cfg.task.validityWindow = orch::TickRange{0, 300};

    cfg.validators = ValidatorConfig{4, 1, {}};
    return cfg;
}

namespace
{

AttackReport
phantomDeposit(RunConfig base)
{
    AttackReport report;
    report.scenario = "phantom_deposit";
    report.mechanism = "deposit_observation";

    World w(std::move(base));
    auto const railId = *w.config.task.railPreference;
    auto const payerRef = "user:" + w.config.task.userId + "@" + railId;

    auto& wf = w.facilitator.submitTask(w.config.task);
    auto const& set = w.facilitator.generateMandates(
        wf.workflowId, w.config.merchantQuote, railId, payerRef, true);

    auto& adapter = w.adapter(railId);
    settle::EscrowParams params;
    params.amount = set.payment.amount;
    params.payerRef = payerRef;
    params.payeeAgentId = set.payment.payeeAgentId;
    params.timeoutTick = 40;
    params.tier = settle::Tier::Tier2;
    params.workflowId = wf.workflowId;
    auto escrowAddress = adapter.provisionEscrow(wf.escrowId, params);

    // the attack: a transaction that immediately reverts, plus a wholly
    // fabricated tx id claimed as the deposit
    auto revertTx = w.wallets.signTransfer(payerRef, escrowAddress,
                                           set.payment.amount.minorUnits,
                                           true);
    auto revertedTxId = w.rails.rail(railId).submit(std::move(revertTx));
    std::string const forgedTxId =
        core::sha256(std::string_view("forged deposit claim")).hex();

    bool everOpen = false;
    while (w.clock.tick < params.timeoutTick)
    {
        w.rails.rail(railId).tick(1);
        w.clock.advance(1);
        adapter.observeDeposit(wf.escrowId);
        auto status = w.escrows.get(wf.escrowId).status;
        everOpen = everOpen || status == settle::EscrowStatus::Open ||
                   status == settle::EscrowStatus::SettlementPending ||
                   status == settle::EscrowStatus::Settled;
    }
    bool const revertedClaimAccepted =
        adapter.checkClaimedDeposit(wf.escrowId, revertedTxId);
    bool const forgedClaimAccepted =
        adapter.checkClaimedDeposit(wf.escrowId, forgedTxId);

    w.escrows.transition(wf.escrowId,
                         settle::EscrowEvent{settle::EscrowEventType::Timeout,
                                             {}});
    auto finalStatus = w.escrows.get(wf.escrowId).status;

    report.blocked = !everOpen && !revertedClaimAccepted &&
                     !forgedClaimAccepted &&
                     finalStatus == settle::EscrowStatus::Expired;
    report.evidence = core::Json{
        {"final_status", std::string(settle::escrowStatusName(finalStatus))},
        {"reverted_tx_id", revertedTxId},
        {"reverted_claim_accepted", revertedClaimAccepted},
        {"forged_claim_accepted", forgedClaimAccepted},
        {"ever_open", everOpen}};
    return report;
}

AttackReport
unverifiedPayout(RunConfig base)
{
    AttackReport report;
    report.scenario = "unverified_payout";
    report.mechanism = "pote_gate";

    World w(std::move(base));
    auto const railId = *w.config.task.railPreference;
    auto const payerRef = "user:" + w.config.task.userId + "@" + railId;

    auto& wf = w.facilitator.submitTask(w.config.task);
    auto const& set = w.facilitator.generateMandates(
        wf.workflowId, w.config.merchantQuote, railId, payerRef, true);

    auto& adapter = w.adapter(railId);
    settle::EscrowParams params;
    params.amount = set.payment.amount;
    params.payerRef = payerRef;
    params.payeeAgentId = set.payment.payeeAgentId;
    params.timeoutTick = 300;
    params.tier = settle::Tier::Tier2;
    params.workflowId = wf.workflowId;
    auto escrowAddress = adapter.provisionEscrow(wf.escrowId, params);

    // fund honestly so the escrow is OPEN and tempting
    w.rails.rail(railId).submit(w.wallets.signTransfer(
        payerRef, escrowAddress, set.payment.amount.minorUnits, false));
    w.rails.rail(railId).tick(3);
    adapter.observeDeposit(wf.escrowId);

    // the attack: a direct settle() instruction with no anchored PoTE
    std::string caught = "none";
    try
    {
        adapter.settle(wf.escrowId);
    }
    catch (Error const& e)
    {
        caught = std::string(errcName(e.code()));
    }
    w.rails.rail(railId).tick(3);

    auto payeeAddress =
        w.wallets.addressOf(adapter.payeeWalletRef(set.payment.payeeAgentId));
    bool fundsMoved = false;
    for (auto const& view : w.rails.rail(railId).allTxViews())
        fundsMoved = fundsMoved || (view.from == escrowAddress &&
                                    view.to == payeeAddress &&
                                    view.status == "success");

    report.blocked = caught == "PoTEMissing" && !fundsMoved &&
                     w.escrows.get(wf.escrowId).status ==
                         settle::EscrowStatus::Open;
    report.evidence =
        core::Json{{"error", caught},
                   {"funds_moved", fundsMoved},
                   {"escrow_status",
                    std::string(settle::escrowStatusName(
                        w.escrows.get(wf.escrowId).status))}};
    return report;
}

AttackReport
keyExfiltration(RunConfig base)
{
    AttackReport report;
    report.scenario = "key_exfiltration";
    report.mechanism = "key_isolation";

    // a completed run maximizes the state an attacker could dump
    Runner runner(std::move(base));
    auto result = runner.runFlow();
    auto& w = runner.world();

    std::string dump = core::canonicalSerialize(w.controlPlaneJson());
    dump += core::canonicalSerialize(w.explorer.toJson());
    dump += core::canonicalSerialize(result.transcript);

    std::size_t leaks = 0;
    auto secrets = w.allSecretMaterial();
    for (auto const& sk : secrets)
    {
        auto hex = core::hexEncode(sk);
        if (dump.find(hex) != std::string::npos)
            ++leaks;
        // the 32-byte seed half leaking would be just as fatal
        if (dump.find(hex.substr(0, 64)) != std::string::npos)
            ++leaks;
        std::string raw(sk.begin(), sk.end());
        if (dump.find(raw) != std::string::npos)
            ++leaks;
    }

    report.blocked = leaks == 0 && !secrets.empty();
    report.evidence = core::Json{{"secrets_checked", secrets.size()},
                                 {"leaks_found", leaks},
                                 {"bytes_scanned", dump.size()},
                                 {"run_outcome", result.outcome}};
    return report;
}

AttackReport
crossRailReplay(RunConfig base)
{
    AttackReport report;
    report.scenario = "cross_rail_replay";
    report.mechanism = "chain_id_scoping";

    Runner runner(std::move(base));
    auto result = runner.runFlow();
    auto& w = runner.world();

    auto const& rec = w.escrows.get(result.escrowId);
    report.evidence = core::Json{{"run_outcome", result.outcome}};
    if (rec.settlementTxIds.empty())
        return report; // nothing settled, nothing to replay

    auto const& txId = rec.settlementTxIds.back();
    auto stx = w.rails.rail(rec.railId).includedTransaction(txId);
    if (!stx)
        return report;

    // replay the alpha-signed payout on the other rail
    std::string other;
    for (auto const& id : w.rails.railIds())
        if (id != rec.railId)
            other = id;
    auto& victim = w.rails.rail(other);
    victim.fund(stx->tx.from, stx->tx.totalOut() + stx->tx.fee + 1);
    auto replayId = victim.submit(*stx);
    victim.tick(1);

    bool rejectedForChainId = false;
    for (auto const& r : victim.rejected())
        rejectedForChainId = rejectedForChainId ||
                             (r.txId == replayId &&
                              r.reason == "chain_id_mismatch");
    bool includedOnVictim = !victim.lookupTx(replayId).empty();

    // the escrow record scopes its settlement txs to the origin rail
    bool scoped = rec.railId != other;

    report.blocked = rejectedForChainId && !includedOnVictim && scoped;
    report.evidence =
        core::Json{{"run_outcome", result.outcome},
                   {"origin_rail", rec.railId},
                   {"victim_rail", other},
                   {"replayed_tx_id", replayId},
                   {"rejected_for_chain_id", rejectedForChainId},
                   {"included_on_victim", includedOnVictim}};
    return report;
}

}

AttackReport
runAttack(std::string const& scenario, RunConfig base)
{
    if (scenario == "phantom_deposit")
        return phantomDeposit(std::move(base));
    if (scenario == "unverified_payout")
        return unverifiedPayout(std::move(base));
    if (scenario == "key_exfiltration")
        return keyExfiltration(std::move(base));
    if (scenario == "cross_rail_replay")
        return crossRailReplay(std::move(base));
    fail(Errc::ConfigInvalid, "unknown attack scenario: " + scenario);
}

}
