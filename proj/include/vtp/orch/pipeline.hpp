// Copyright 2026 vtp developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include "vtp/identity/registry.hpp"
#include "vtp/orch/mandate.hpp"
#include "vtp/orch/task.hpp"
#include "vtp/settle/escrow.hpp"
#include "vtp/verify/evidence.hpp"
#include "vtp/verify/notary.hpp"
#include "vtp/verify/telemetry.hpp"

#include <map>
#include <string>
#include <vector>

namespace vtp::orch
{

enum class WorkflowPhase
{
    Created,
    MandatesReady,
    Executing,
    Verifying,
    Completed,
};

std::string_view workflowPhaseName(WorkflowPhase p);

struct WorkflowRecord
{
    std::string sessionId;
    std::string workflowId;
    std::string escrowId;
    std::string taskId;
    TaskRequest request;
    std::string chosenAgentId;
    WorkflowPhase phase{WorkflowPhase::Created};
    std::string outcome; // settled | refunded | expired | aborted | ""
    // receipts collected before the verification session opens
    std::vector<verify::NotaryReceipt> bufferedReceipts;

    core::Json toJson() const;
};

struct Quote
{
    std::vector<CartItem> items;
    std::string merchantAgentId;
};

struct RankedAgent
{
    identity::AgentManifest manifest;
    double score{0.0};
};

struct PerformanceReport
{
    std::uint64_t latencyP50Ms{0};
    bool success{false};
    bool constraintAdherence{false};
    core::Amount totalCost;
    std::uint32_t qualityScore{0}; // 0..100

    core::Json toJson() const;
};

// score = 0.5 * capability match (Jaccard against the one required
// capability) + 0.3 * declared success rate + 0.2 * cost headroom
// (1 - cost/budget, clamped). Ties order by agent_id ascending.
std::vector<RankedAgent> rankAgents(
    std::vector<identity::AgentManifest> candidates, TaskRequest const& req);

// Routing looks at the top two only: higher score wins, ties break to the
// lower declared cost, then to the lexicographically smaller agent_id.
std::string route(std::vector<RankedAgent> const& ranked); // NoAgentFound

struct ExecutionHandle
{
    std::string taskId;
    std::string workflowId;
    std::string agentId;
};

// Facilitator-side workflow bookkeeping and the orchestration steps that
// do not touch the settlement plane.
class Facilitator
{
  public:
    Facilitator(identity::Registry const& registry, MandateStore& mandates,
                verify::TelemetryStore& telemetry, verify::AuditLedger& audit,
                core::Clock const& clock, core::IdGen& ids)
        : mRegistry(registry)
        , mMandates(mandates)
        , mTelemetry(telemetry)
        , mAudit(audit)
        , mClock(clock)
        , mIds(ids)
    {
    }

    WorkflowRecord& submitTask(TaskRequest req); // WindowExpired

    // Builds the hash-chained mandate triple. The cart must fit the
    // budget; the payment mandate is only finalized after approval.
    MandateSet const& generateMandates(std::string const& workflowId,
                                       Quote const& quote,
                                       std::string const& railId,
                                       std::string const& payerWalletRef,
                                       bool userApproves);

    // Registry query filtered through manifest verification.
    std::vector<identity::AgentManifest>
    retrieveAgents(std::string const& capability) const;

    PerformanceReport evaluatePerformance(std::string const& workflowId,
                                          bool success); // NoTelemetry

    // Hands the envelope to the scripted worker. The escrow must be OPEN
    // and the token must verify against a PoP over the envelope digest;
    // the executor->agent exchange itself is notarized. Telemetry
    // collection starts with the dispatch sample.
    ExecutionHandle delegate(ExecutionEnvelope const& envelope,
                             identity::PopProof const& pop,
                             identity::AuthorizationService& authz,
                             settle::EscrowTable const& escrows,
                             verify::NotaryPool const& notaries,
                             std::vector<std::string> const& notaryIds);

    bool has(std::string const& workflowId) const;
    WorkflowRecord& workflow(std::string const& workflowId);
    WorkflowRecord const& workflow(std::string const& workflowId) const;
    std::vector<std::string> workflowIds() const;

    core::Json toJson() const;

  private:
    identity::Registry const& mRegistry;
    MandateStore& mMandates;
    verify::TelemetryStore& mTelemetry;
    verify::AuditLedger& mAudit;
    core::Clock const& mClock;
    core::IdGen& mIds;
    std::map<std::string, WorkflowRecord> mWorkflows;
};

}
