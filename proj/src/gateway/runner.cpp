// Copyright 2026 vtp developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#include "vtp/gateway/runner.hpp"
#include "vtp/core/errors.hpp"
#include "vtp/core/merkle.hpp"
#include "vtp/core/sha256.hpp"

namespace vtp::gateway
{

World::World(RunConfig cfg)
    : config(std::move(cfg))
    , rng(config.seed)
    , audit(clock)
    , registry(audit, clock)
    , facilitator(registry, mandates, telemetry, audit, clock, ids)
    , authz(registry, audit, clock, rng)
    , notaries(rng, config.notaryCount)
    , validators(rng, config.validators.f)
    , teeAuthority(rng, registry)
    , hub(audit, clock)
    , wallets(rails, rng)
    , escrows(audit)
{
    userKeys = core::keygen(rng);
    popKeys = core::keygen(rng);

    for (auto const& railCfg : config.rails)
        rails.addRail(railCfg);

    anchors.notaryKeys = notaries.publicKeys();
    anchors.validatorKeys = validators.publicKeys();
    anchors.attestationAuthorityKey = teeAuthority.publicKey();

    for (auto const& agentCfg : config.agents)
    {
        auto ownerKeys = core::keygen(rng);
        auto manifest = agentCfg.manifest;
        if (manifest.ownerPk.empty())
            manifest.ownerPk = ownerKeys.publicKey;
        registry.registerAgent(manifest);

        core::Bytes code = core::to_bytes(
            "scripted-agent " + manifest.agentId + " v" + manifest.version);
        anchors.expectedMeasurements[manifest.agentId] =
            core::sha256(core::BytesView(code));
        agents.emplace(manifest.agentId,
                       orch::ScriptedAgent(manifest, agentCfg.behavior,
                                           std::move(code)));
        contracts.emplace(manifest.agentId, agentCfg.contract);

        for (auto const& railCfg : config.rails)
            wallets.createWallet("agent:" + manifest.agentId + "@" +
                                     railCfg.railId,
                                 railCfg.railId);
    }

    // payer wallets with generous genesis funding on every rail
    for (auto const& railCfg : config.rails)
    {
        auto ref = "user:" + config.task.userId + "@" + railCfg.railId;
        auto address = wallets.createWallet(ref, railCfg.railId);
        rails.rail(railCfg.railId).fund(address, 10'000'000);
    }

    for (auto const& railCfg : config.rails)
        adapters.emplace(railCfg.railId,
                         settle::RailAdapter(railCfg.railId, rails, wallets,
                                             escrows, hub.anchors(), audit,
                                             explorer));
}

settle::RailAdapter&
World::adapter(std::string const& railId)
{
    auto it = adapters.find(railId);
    if (it == adapters.end())
        fail(Errc::UnknownRail, railId);
    return it->second;
}

core::Json
World::controlPlaneJson() const
{
    auto auditJson = core::Json::array();
    for (auto const& e : audit.events())
        auditJson.push_back(e.toJson());
    return core::Json{{"registry", registry.toJson()},
                      {"mandates", mandates.toJson()},
                      {"workflows", facilitator.toJson()},
                      {"escrows", escrows.toJson()},
                      {"audit", std::move(auditJson)},
                      {"pote_anchors", hub.anchors().toJson()},
                      {"explorer", explorer.toJson()},
                      {"telemetry", telemetry.toJson()},
                      {"wallet_directory", wallets.toJson()}};
}

std::vector<core::Bytes>
World::allSecretMaterial() const
{
    std::vector<core::Bytes> secrets;
    wallets.collectSecretMaterial(secrets);
    authz.collectSecretMaterial(secrets);
    notaries.collectSecretMaterial(secrets);
    validators.collectSecretMaterial(secrets);
    teeAuthority.collectSecretMaterial(secrets);
    secrets.push_back(userKeys.secretKey);
    secrets.push_back(popKeys.secretKey);
    return secrets;
}

Runner::Runner(RunConfig config) : mWorld(std::make_unique<World>(config))
{
}

void
Runner::note(std::string const& module, std::string const& eventType,
             core::Json refs)
{
    mEntries.push_back(core::Json{{"tick", mWorld->clock.tick},
                                  {"module", module},
                                  {"event_type", eventType},
                                  {"refs", refs},
                                  {"digest", core::hashOfJson(refs).hex()}});
}

void
Runner::advanceRail(std::string const& railId, core::Tick n)
{
    mWorld->rails.rail(railId).tick(n);
    mWorld->clock.advance(n);
}

namespace
{
// Wait loops tick until a condition holds; a rejected transaction would
// otherwise spin forever.
template <typename Pred, typename Step>
void
tickUntil(Pred done, Step step, char const* what)
{
    for (int guard = 0; guard < 100'000; ++guard)
    {
        if (done())
            return;
        step();
    }
    fail(Errc::IoError, std::string("no progress while waiting for ") + what);
}
}

identity::PopProof
Runner::popOver(identity::AJwt const& token,
                core::Digest const& requestDigest) const
{
    std::string jti = token.claims.at("jti");
    return identity::PopProof{
        jti, requestDigest,
        core::sign(mWorld->popKeys.secretKey,
                   identity::popMessage(jti, requestDigest))};
}

RunResult
Runner::finish(orch::WorkflowRecord& wf, std::string outcome)
{
    auto& w = *mWorld;
    wf.phase = orch::WorkflowPhase::Completed;
    wf.outcome = outcome;

    std::string finalStatus = "NONE";
    if (w.escrows.has(wf.escrowId))
        finalStatus = std::string(
            settle::escrowStatusName(w.escrows.get(wf.escrowId).status));

    auto balances = core::Json::object();
    for (auto const& railId : w.rails.railIds())
    {
        auto const& chainJson = w.rails.rail(railId).toJson();
        balances[railId] = chainJson.at("balances");
    }

    note("gateway", "run_completed",
         core::Json{{"workflow_id", wf.workflowId},
                    {"outcome", outcome},
                    {"final_escrow_status", finalStatus}});

    RunResult result;
    result.workflowId = wf.workflowId;
    result.escrowId = wf.escrowId;
    result.sessionId = wf.sessionId;
    result.finalEscrowStatus = finalStatus;
    result.outcome = std::move(outcome);
    result.success = finalStatus == "SETTLED";
    result.transcript =
        core::Json{{"entries", mEntries},
                   {"required_proofs", mRequiredProofs},
                   {"final_escrow_statuses",
                    core::Json{{wf.escrowId, finalStatus}}},
                   {"final_balances", std::move(balances)},
                   {"audit_head", w.audit.headHash().hex()},
                   {"outcome", result.outcome}};
    result.transcriptDigest = core::hashOfJson(result.transcript);
    return result;
}

RunResult
Runner::runFlow()
{
    auto& w = *mWorld;
    auto const& cfg = w.config;

    // 1. task intake
    auto& wf = w.facilitator.submitTask(cfg.task);
    note("orchestration", "task_created",
         core::Json{{"session_id", wf.sessionId},
                    {"workflow_id", wf.workflowId},
                    {"escrow_id", wf.escrowId},
                    {"task_id", wf.taskId}});
    w.clock.advance();

    std::string const railId =
        cfg.task.railPreference.value_or(cfg.rails.front().railId);
    std::string const payerRef =
        "user:" + cfg.task.userId + "@" + railId;

    // 2. mandates (intent -> cart -> user approval -> payment)
    orch::MandateSet const* set = nullptr;
    try
    {
        set = &w.facilitator.generateMandates(wf.workflowId,
                                              cfg.merchantQuote, railId,
                                              payerRef, cfg.userApproves);
    }
    catch (Error const& e)
    {
        note("orchestration", "mandates_rejected",
             core::Json{{"error", std::string(errcName(e.code()))}});
        return finish(wf, "aborted");
    }
    note("orchestration", "mandates_recorded",
         core::Json{{"intent_hash", set->intent.hash.hex()},
                    {"cart_hash", set->cart.hash.hex()},
                    {"payment_hash", set->payment.hash.hex()}});
    w.clock.advance();

    auto const tier = cfg.tierOverride
                          ? *cfg.tierOverride
                          : settle::classifyTier(set->payment.amount);

    // 3. discovery: retrieve -> rank -> route
    auto candidates =
        w.facilitator.retrieveAgents(cfg.task.requiredCapability);
    auto ranked = orch::rankAgents(std::move(candidates), cfg.task);
    std::string executingAgentId;
    try
    {
        executingAgentId = orch::route(ranked);
    }
    catch (Error const& e)
    {
        note("orchestration", "routing_failed",
             core::Json{{"error", std::string(errcName(e.code()))}});
        return finish(wf, "aborted");
    }
    {
        auto rankedJson = core::Json::array();
        for (auto const& r : ranked)
            rankedJson.push_back(core::Json{{"agent_id", r.manifest.agentId}});
        note("orchestration", "agent_routed",
             core::Json{{"chosen", executingAgentId},
                        {"ranked", std::move(rankedJson)}});
    }
    w.clock.advance();

    auto const& contract = w.contracts.at(executingAgentId);
    {
        auto effective = contract.requiredProofKinds;
        for (auto k : identity::tierRequiredProofs(tier))
            effective.insert(k);
        for (auto k : effective)
            mRequiredProofs.push_back(std::string(verify::proofKindName(k)));
        note("verification", "verification_requirements",
             core::Json{{"tier", std::string(settle::tierName(tier))},
                        {"required_proofs", mRequiredProofs},
                        {"min_witnesses",
                         std::max(contract.minNotaryWitnesses,
                                  identity::tierMinWitnesses(tier))}});
    }

    // 4. scoped authorization
    identity::AJwt token;
    try
    {
        identity::UserApproval approval;
        approval.userId = cfg.task.userId;
        approval.scope = "payment:escrow";
        approval.mandateHash = set->payment.hash;
        approval.ttlTicks =
            cfg.task.validityWindow.end > w.clock.tick
                ? (cfg.task.validityWindow.end - w.clock.tick) + 200
                : 200;
        approval.delegationChain = {executingAgentId};
        token = w.authz.issueAjwt(approval, executingAgentId,
                                  w.popKeys.publicKey, &w.mandates);
    }
    catch (Error const& e)
    {
        note("identity", "authorization_failed",
             core::Json{{"error", std::string(errcName(e.code()))}});
        return finish(wf, "aborted");
    }
    note("identity", "ajwt_issued",
         core::Json{{"jti", token.claims.at("jti")},
                    {"scope", "payment:escrow"},
                    {"integrity_hash", token.integrityHash().hex()}});
    w.clock.advance();

    // 5. escrow provisioning and funding
    auto& adapter = w.adapter(railId);
    settle::EscrowParams params;
    params.amount = set->payment.amount;
    params.payerRef = payerRef;
    params.payeeAgentId = set->payment.payeeAgentId;
    params.timeoutTick = cfg.task.validityWindow.end;
    params.tier = tier;
    params.workflowId = wf.workflowId;
    auto escrowAddress = adapter.provisionEscrow(wf.escrowId, params);
    note("settlement", "escrow_provisioned",
         core::Json{{"escrow_id", wf.escrowId},
                    {"rail_id", railId},
                    {"escrow_address", escrowAddress}});

    // the wallet moves funds only under a verified payment-scope token
    auto fundDigest = core::hashOfJson(
        core::Json{{"action", "fund_escrow"},
                   {"escrow_id", wf.escrowId},
                   {"amount", set->payment.amount.minorUnits}});
    try
    {
        w.authz.verifyAjwt(token, popOver(token, fundDigest), w.clock.tick);
    }
    catch (Error const& e)
    {
        note("identity", "funding_authorization_failed",
             core::Json{{"error", std::string(errcName(e.code()))}});
        return finish(wf, "aborted");
    }

    // Tier 1 escrows are batch escrows: the deposit carries one flat fee
    // of headroom so the batch transaction's outputs equal the charges.
    std::uint64_t depositUnits = set->payment.amount.minorUnits;
    if (tier == settle::Tier::Tier1)
        depositUnits +=
            w.rails.rail(railId).config().flatFee.minorUnits;
    auto depositTxId = w.rails.rail(railId).submit(
        w.wallets.signTransfer(payerRef, escrowAddress, depositUnits, false));
    note("settlement", "deposit_submitted",
         core::Json{{"tx_id", depositTxId}, {"amount", depositUnits}});

    while (true)
    {
        advanceRail(railId, 1);
        auto obs = adapter.observeDeposit(wf.escrowId);
        if (obs.final)
            break;
        if (w.clock.tick >= params.timeoutTick)
        {
            w.escrows.transition(
                wf.escrowId,
                settle::EscrowEvent{settle::EscrowEventType::Timeout, {}});
            note("settlement", "escrow_expired",
                 core::Json{{"escrow_id", wf.escrowId}});
            return finish(wf, "expired");
        }
    }
    note("settlement", "escrow_open",
         core::Json{{"escrow_id", wf.escrowId},
                    {"deposit_tx_id",
                     w.escrows.get(wf.escrowId).depositTxId.value_or("")}});

    // 6. delegation
    auto const witnessCount = std::max(contract.minNotaryWitnesses,
                                       identity::tierMinWitnesses(tier));
    auto notaryIds = w.notaries.firstIds(witnessCount);

    orch::ExecutionEnvelope envelope;
    envelope.taskId = wf.taskId;
    envelope.workflowId = wf.workflowId;
    envelope.agentId = executingAgentId;
    envelope.scopeSummary =
        core::Json{{"budget", cfg.task.budgetCap.toJson()},
                   {"capability", cfg.task.requiredCapability},
                   {"validity",
                    core::Json{{"start", cfg.task.validityWindow.start},
                               {"end", cfg.task.validityWindow.end}}}};
    envelope.ajwt = token;
    envelope.intentHash = set->intent.hash;

    try
    {
        w.facilitator.delegate(envelope, popOver(token, envelope.digest()),
                               w.authz, w.escrows, w.notaries, notaryIds);
    }
    catch (Error const& e)
    {
        note("orchestration", "delegation_failed",
             core::Json{{"error", std::string(errcName(e.code()))}});
        return finish(wf, "aborted");
    }
    note("orchestration", "task_delegated",
         core::Json{{"task_id", wf.taskId}, {"agent_id", executingAgentId}});
    w.clock.advance();

    // 7. scripted execution
    auto const& agent = w.agents.at(executingAgentId);
    auto work = agent.execute(envelope, set->cart, cfg.task.budgetCap,
                              w.clock.tick);
    for (auto const& sample : work.samples)
        w.telemetry.record(sample);

    auto refundPath = [&](std::string const& reason) -> RunResult {
        auto& esc = w.escrows.get(wf.escrowId);
        if (esc.status == settle::EscrowStatus::Open)
            w.escrows.transition(
                wf.escrowId,
                settle::EscrowEvent{
                    reason == "timeout"
                        ? settle::EscrowEventType::Timeout
                        : settle::EscrowEventType::VerificationFailed,
                    {}});
        note("settlement", "refund_initiated",
             core::Json{{"escrow_id", wf.escrowId}, {"reason", reason}});
        adapter.refund(wf.escrowId, reason);
        tickUntil(
            [&] {
                return w.escrows.get(wf.escrowId).status ==
                       settle::EscrowStatus::Refunded;
            },
            [&] {
                advanceRail(railId, 1);
                adapter.pollOutcome(wf.escrowId);
            },
            "refund finality");
        note("settlement", "escrow_refunded",
             core::Json{{"escrow_id", wf.escrowId}});
        try
        {
            w.facilitator.evaluatePerformance(wf.workflowId, false);
        }
        catch (Error const&)
        {
        }
        return finish(wf, "refunded");
    };

    if (!work.responded)
    {
        // wait out the validity window, then time the workflow out
        if (w.clock.tick < params.timeoutTick)
        {
            advanceRail(railId, params.timeoutTick - w.clock.tick);
        }
        note("orchestration", "agent_unresponsive",
             core::Json{{"agent_id", executingAgentId}});
        return refundPath("timeout");
    }

    // 8. output submission opens verification and collects evidence
    auto& session = w.hub.openSession(
        wf.workflowId, wf.escrowId,
        w.facilitator.workflow(wf.workflowId).phase ==
            orch::WorkflowPhase::Executing);
    for (auto& buffered : w.facilitator.workflow(wf.workflowId).bufferedReceipts)
        session.receipts.push_back(buffered);
    w.facilitator.workflow(wf.workflowId).phase =
        orch::WorkflowPhase::Verifying;

    auto notarizeExchange = [&](verify::ReceiptKind kind,
                                std::string const& request,
                                std::string const& response) {
        session.receipts.push_back(w.notaries.notarize(
            kind, wf.sessionId, wf.workflowId, core::view(request),
            core::view(response), notaryIds, w.clock.tick));
    };
    if (tier == settle::Tier::Tier1)
    {
        // optimistic: a plain API receipt instead of full witnessing
        notarizeExchange(verify::ReceiptKind::Api, work.apiRequest,
                         work.apiResponse);
    }
    else
    {
        notarizeExchange(verify::ReceiptKind::Model, work.modelRequest,
                         work.modelResponse);
        notarizeExchange(verify::ReceiptKind::Tool, work.toolRequest,
                         work.toolResponse);
        notarizeExchange(verify::ReceiptKind::Api, work.apiRequest,
                         work.apiResponse);
    }
    session.tee = w.teeAuthority.attest(
        executingAgentId, core::BytesView(work.runtimeCodeBytes),
        w.clock.tick);
    note("verification", "evidence_collected",
         core::Json{{"receipts", session.receipts.size()},
                    {"tee", true}});
    w.clock.advance();

    // 9. seal, certify, judge
    auto effectiveKinds = contract.requiredProofKinds;
    for (auto k : identity::tierRequiredProofs(tier))
        effectiveKinds.insert(k);

    verify::PoTEBundle bundle;
    try
    {
        bundle = w.hub.assemblePote(
            wf.workflowId, token.integrityHash(),
            w.telemetry.sessionHash(wf.workflowId), effectiveKinds,
            w.validators, cfg.validators.byzantineMask);
    }
    catch (Error const& e)
    {
        note("verification", "pote_assembly_failed",
             core::Json{{"error", std::string(errcName(e.code()))}});
        return refundPath("verification_failed");
    }
    note("verification", "pote_assembled",
         core::Json{{"merkle_root", bundle.merkleRoot.hex()},
                    {"votes", bundle.quorum.votes.size()}});

    identity::EvaluationContext evalCtx;
    evalCtx.expectedAjwtIntegrityHash = token.integrityHash();
    evalCtx.expectedTelemetryHash = w.telemetry.sessionHash(wf.workflowId);
    evalCtx.paymentAmount = set->payment.amount;
    evalCtx.cartTotal = set->cart.total(set->payment.amount.currency);
    evalCtx.budgetCap = cfg.task.budgetCap;
    evalCtx.telemetryTotalCost = w.telemetry.totalCost(
        wf.workflowId, cfg.task.budgetCap.currency);
    evalCtx.expectedOutputCommitment =
        core::sha256(std::string_view(orch::expectedOrderConfirmation(
            set->cart)));

    auto verdict = identity::evaluateAgentContract(contract, bundle, tier,
                                                   w.anchors, evalCtx);
    note("verification", "contract_evaluated",
         core::Json{{"pass", verdict.pass}, {"reasons", verdict.reasons}});

    try
    {
        w.facilitator.evaluatePerformance(wf.workflowId, verdict.pass);
    }
    catch (Error const&)
    {
    }

    if (!verdict.pass)
        return refundPath("verification_failed");

    w.hub.anchorPote(bundle, true);
    w.escrows.transition(
        wf.escrowId, settle::EscrowEvent{settle::EscrowEventType::PoTEAnchored,
                                         bundle.merkleRoot});
    note("verification", "pote_anchored",
         core::Json{{"merkle_root", bundle.merkleRoot.hex()}});
    w.clock.advance();

    // 10. tier-appropriate settlement
    if (tier == settle::Tier::Tier3)
    {
        advanceRail(railId, cfg.challengeWindowTicks);
        if (cfg.raiseChallenge)
        {
            w.escrows.transition(
                wf.escrowId,
                settle::EscrowEvent{settle::EscrowEventType::ChallengeRaised,
                                    {}});
            note("settlement", "challenge_raised",
                 core::Json{{"escrow_id", wf.escrowId}});
            adapter.refund(wf.escrowId, "challenge_raised");
            tickUntil(
                [&] {
                    return w.escrows.get(wf.escrowId).status ==
                           settle::EscrowStatus::Refunded;
                },
                [&] {
                    advanceRail(railId, 1);
                    adapter.pollOutcome(wf.escrowId);
                },
                "challenge refund finality");
            return finish(wf, "refunded");
        }
        w.escrows.transition(
            wf.escrowId,
            settle::EscrowEvent{
                settle::EscrowEventType::ChallengeWindowElapsed, {}});
        note("settlement", "challenge_window_elapsed",
             core::Json{{"escrow_id", wf.escrowId}});
    }

    std::string settlementTxId;
    if (tier == settle::Tier::Tier1)
    {
        std::vector<settle::BatchCharge> charges{settle::BatchCharge{
            set->payment.payeeAgentId, set->payment.amount, railId}};
        settlementTxId = adapter.batchSettle(wf.escrowId, charges);
        note("settlement", "batch_settlement_submitted",
             core::Json{{"tx_id", settlementTxId}});
    }
    else
    {
        settlementTxId = adapter.settle(wf.escrowId);
        note("settlement", "settlement_submitted",
             core::Json{{"tx_id", settlementTxId}});
    }

    tickUntil(
        [&] {
            return w.escrows.get(wf.escrowId).status ==
                   settle::EscrowStatus::Settled;
        },
        [&] {
            advanceRail(railId, 1);
            adapter.pollOutcome(wf.escrowId);
        },
        "settlement finality");
    note("settlement", "escrow_settled",
         core::Json{{"escrow_id", wf.escrowId},
                    {"tx_id", settlementTxId}});

    // 11. post-settlement reconciliation and explorer indexing
    if (tier != settle::Tier::Tier1)
    {
        auto verdict2 = adapter.reconcile(wf.escrowId);
        note("settlement", "reconciled",
             core::Json{{"match", verdict2.match},
                        {"mismatched_fields", verdict2.mismatchedFields}});
    }
    else
    {
        auto views = w.rails.rail(railId).lookupTx(settlementTxId);
        if (!views.empty())
        {
            settle::ExplorerRecord er;
            er.railId = railId;
            er.txId = settlementTxId;
            er.escrowId = wf.escrowId;
            er.workflowId = wf.workflowId;
            er.kind = "batch_settlement";
            er.from = views.front().from;
            er.to = views.front().to;
            er.amount = views.front().amount;
            er.fee = views.front().fee;
            er.status = views.front().status;
            er.confirmations = views.front().confirmations;
            er.blockHeight = views.front().blockHeight;
            er.verdict = "match";
            w.explorer.index(std::move(er));
        }
        note("settlement", "batch_indexed",
             core::Json{{"tx_id", settlementTxId}});
    }

    return finish(wf, "settled");
}

}
