// Copyright 2026 vtp developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#include "vtp/orch/pipeline.hpp"
#include "vtp/core/errors.hpp"

#include <algorithm>

namespace vtp::orch
{

std::string_view
workflowPhaseName(WorkflowPhase p)
{
    switch (p)
    {
    case WorkflowPhase::Created:
        return "created";
    case WorkflowPhase::MandatesReady:
        return "mandates_ready";
    case WorkflowPhase::Executing:
        return "executing";
    case WorkflowPhase::Verifying:
        return "verifying";
    case WorkflowPhase::Completed:
        return "completed";
    }
    return "?";
}

core::Json
WorkflowRecord::toJson() const
{
    return core::Json{{"session_id", sessionId},
                      {"workflow_id", workflowId},
                      {"escrow_id", escrowId},
                      {"task_id", taskId},
                      {"request", request.toJson()},
                      {"chosen_agent_id", chosenAgentId},
                      {"phase", std::string(workflowPhaseName(phase))},
                      {"outcome", outcome}};
}

core::Json
PerformanceReport::toJson() const
{
    return core::Json{{"latency_p50_ms", latencyP50Ms},
                      {"success", success},
                      {"constraint_adherence", constraintAdherence},
                      {"total_cost", totalCost.toJson()},
                      {"quality_score", qualityScore}};
}

std::vector<RankedAgent>
rankAgents(std::vector<identity::AgentManifest> candidates,
           TaskRequest const& req)
{
    std::vector<RankedAgent> ranked;
    ranked.reserve(candidates.size());
    for (auto& m : candidates)
    {
        double capabilityMatch = 0.0;
        if (m.hasCapability(req.requiredCapability))
        {
            // Jaccard of the agent's capability set with the singleton
            // required set: 1/|capabilities| when held, else 0.
            capabilityMatch =
                1.0 / static_cast<double>(m.capabilities.size());
        }
        double successRate = m.declaredSuccessRateBp / 10000.0;
        double costScore = 0.0;
        if (req.budgetCap.minorUnits > 0)
        {
            double ratio = static_cast<double>(m.declaredCost.minorUnits) /
                           static_cast<double>(req.budgetCap.minorUnits);
            costScore = std::clamp(1.0 - ratio, 0.0, 1.0);
        }
        double score =
            0.5 * capabilityMatch + 0.3 * successRate + 0.2 * costScore;
        ranked.push_back(RankedAgent{std::move(m), score});
    }
    std::sort(ranked.begin(), ranked.end(),
              [](RankedAgent const& a, RankedAgent const& b) {
                  if (a.score != b.score)
                      return a.score > b.score;
                  return a.manifest.agentId < b.manifest.agentId;
              });
    return ranked;
}

std::string
route(std::vector<RankedAgent> const& ranked)
{
    if (ranked.empty())
        fail(Errc::NoAgentFound, "no candidate agents");
    if (ranked.size() == 1)
        return ranked[0].manifest.agentId;

    auto const& a = ranked[0];
    auto const& b = ranked[1];
    if (a.score != b.score)
        return (a.score > b.score ? a : b).manifest.agentId;
    if (a.manifest.declaredCost.minorUnits !=
        b.manifest.declaredCost.minorUnits)
        return (a.manifest.declaredCost.minorUnits <
                        b.manifest.declaredCost.minorUnits
                    ? a
                    : b)
            .manifest.agentId;
    return std::min(a.manifest.agentId, b.manifest.agentId);
}

WorkflowRecord&
Facilitator::submitTask(TaskRequest req)
{
    if (req.validityWindow.end <= mClock.tick)
        fail(Errc::WindowExpired,
             "validity window ended at tick " +
                 std::to_string(req.validityWindow.end));

    WorkflowRecord rec;
    rec.sessionId = mIds.next("sess");
    rec.workflowId = mIds.next("wf");
    rec.escrowId = mIds.next("esc");
    rec.taskId = mIds.next("task");
    rec.request = std::move(req);

    mAudit.append("task_created", rec.workflowId, rec.escrowId,
                  core::Json{{"session_id", rec.sessionId},
                             {"task_id", rec.taskId},
                             {"user_id", rec.request.userId}});
    auto [it, ok] = mWorkflows.emplace(rec.workflowId, std::move(rec));
    return it->second;
}

MandateSet const&
Facilitator::generateMandates(std::string const& workflowId,
                              Quote const& quote, std::string const& railId,
                              std::string const& payerWalletRef,
                              bool userApproves)
{
    auto& wf = workflow(workflowId);
    if (!mRegistry.has(quote.merchantAgentId))
        fail(Errc::UnknownMerchant, quote.merchantAgentId);

    MandateSet set;
    set.intent.userId = wf.request.userId;
    set.intent.intentText = wf.request.intentText;
    set.intent.constraints =
        core::Json{{"budget_cap", wf.request.budgetCap.toJson()},
                   {"required_capability", wf.request.requiredCapability},
                   {"rail_id", railId},
                   {"validity_window",
                    core::Json{{"start", wf.request.validityWindow.start},
                               {"end", wf.request.validityWindow.end}}}};
    set.intent.hash = core::hashOfJson(set.intent.bodyJson());

    set.cart.items = quote.items;
    set.cart.merchantAgentId = quote.merchantAgentId;
    set.cart.intentHash = set.intent.hash;
    set.cart.hash = core::hashOfJson(set.cart.bodyJson());

    auto total = set.cart.total(wf.request.budgetCap.currency);
    if (total.minorUnits > wf.request.budgetCap.minorUnits)
        fail(Errc::BudgetExceeded,
             std::to_string(total.minorUnits) + " over cap " +
                 std::to_string(wf.request.budgetCap.minorUnits));

    mAudit.append("intent_mandate_recorded", workflowId, wf.escrowId,
                  set.intent.toJson());
    mAudit.append("cart_mandate_recorded", workflowId, wf.escrowId,
                  set.cart.toJson());

    // the payment mandate is finalized only after the user approves
    if (!userApproves)
    {
        mAudit.append("cart_approval_rejected", workflowId, wf.escrowId,
                      core::Json{{"cart_hash", set.cart.hash.hex()}});
        fail(Errc::ApprovalRejected, "user rejected the cart");
    }
    mAudit.append("cart_approved", workflowId, wf.escrowId,
                  core::Json{{"cart_hash", set.cart.hash.hex()},
                             {"user_id", wf.request.userId}});

    set.payment.amount = total;
    set.payment.railId = railId;
    set.payment.payerWalletRef = payerWalletRef;
    set.payment.payeeAgentId = quote.merchantAgentId;
    set.payment.escrowId = wf.escrowId;
    set.payment.cartHash = set.cart.hash;
    set.payment.hash = core::hashOfJson(set.payment.bodyJson());

    mAudit.append("payment_mandate_recorded", workflowId, wf.escrowId,
                  set.payment.toJson());

    mMandates.put(workflowId, std::move(set));
    wf.phase = WorkflowPhase::MandatesReady;
    return mMandates.get(workflowId);
}

std::vector<identity::AgentManifest>
Facilitator::retrieveAgents(std::string const& capability) const
{
    std::vector<identity::AgentManifest> found;
    for (auto const& id : mRegistry.agentIds())
    {
        if (!mRegistry.verifyManifest(id))
            continue; // tampered manifests never reach ranking
        auto const& m = mRegistry.manifest(id);
        if (m.hasCapability(capability))
            found.push_back(m);
    }
    return found;
}

PerformanceReport
Facilitator::evaluatePerformance(std::string const& workflowId, bool success)
{
    auto const& wf = workflow(workflowId);
    auto const& samples = mTelemetry.samples(workflowId);
    if (samples.empty())
        fail(Errc::NoTelemetry, workflowId);

    std::vector<std::uint64_t> latencies;
    for (auto const& s : samples)
        latencies.push_back(s.latencyMs);
    std::sort(latencies.begin(), latencies.end());
    // lower median for even counts
    std::uint64_t p50 = latencies[(latencies.size() - 1) / 2];

    PerformanceReport report;
    report.latencyP50Ms = p50;
    report.success = success;
    report.totalCost =
        mTelemetry.totalCost(workflowId, wf.request.budgetCap.currency);
    report.constraintAdherence =
        report.totalCost.minorUnits <= wf.request.budgetCap.minorUnits;
    report.qualityScore = (success ? 60 : 0) +
                          (report.constraintAdherence ? 30 : 0) +
                          (p50 <= 50 ? 10 : 0);

    mAudit.append("performance_report", workflowId, wf.escrowId,
                  report.toJson());
    return report;
}

ExecutionHandle
Facilitator::delegate(ExecutionEnvelope const& envelope,
                      identity::PopProof const& pop,
                      identity::AuthorizationService& authz,
                      settle::EscrowTable const& escrows,
                      verify::NotaryPool const& notaries,
                      std::vector<std::string> const& notaryIds)
{
    auto& wf = workflow(envelope.workflowId);

    auto const& escrow = escrows.get(wf.escrowId);
    if (escrow.status != settle::EscrowStatus::Open)
        fail(Errc::EscrowNotOpen,
             std::string(settle::escrowStatusName(escrow.status)));

    try
    {
        authz.verifyAjwt(envelope.ajwt, pop, mClock.tick);
    }
    catch (Error const& e)
    {
        fail(Errc::BadToken, e.what());
    }

    std::string const request =
        core::canonicalSerialize(envelope.toJson());
    std::string const response = "accepted " + envelope.taskId;
    wf.bufferedReceipts.push_back(
        notaries.notarize(verify::ReceiptKind::Executor, wf.sessionId,
                          wf.workflowId, core::view(request),
                          core::view(response), notaryIds, mClock.tick));

    mTelemetry.record(verify::TelemetrySample{
        wf.workflowId, "executor_dispatch", 1, 0,
        core::Amount{0, wf.request.budgetCap.currency}, mClock.tick});

    wf.chosenAgentId = envelope.agentId;
    wf.phase = WorkflowPhase::Executing;
    mAudit.append("task_delegated", wf.workflowId, wf.escrowId,
                  core::Json{{"task_id", envelope.taskId},
                             {"agent_id", envelope.agentId}});
    return ExecutionHandle{envelope.taskId, wf.workflowId, envelope.agentId};
}

bool
Facilitator::has(std::string const& workflowId) const
{
    return mWorkflows.contains(workflowId);
}

WorkflowRecord&
Facilitator::workflow(std::string const& workflowId)
{
    auto it = mWorkflows.find(workflowId);
    if (it == mWorkflows.end())
        fail(Errc::NotFound, "unknown workflow: " + workflowId);
    return it->second;
}

WorkflowRecord const&
Facilitator::workflow(std::string const& workflowId) const
{
    auto it = mWorkflows.find(workflowId);
    if (it == mWorkflows.end())
        fail(Errc::NotFound, "unknown workflow: " + workflowId);
    return it->second;
}

std::vector<std::string>
Facilitator::workflowIds() const
{
    std::vector<std::string> ids;
    for (auto const& [id, wf] : mWorkflows)
        ids.push_back(id);
    return ids;
}

core::Json
Facilitator::toJson() const
{
    auto arr = core::Json::array();
    for (auto const& [id, wf] : mWorkflows)
        arr.push_back(wf.toJson());
    return arr;
}

}
