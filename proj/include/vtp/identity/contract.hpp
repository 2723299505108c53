// Copyright 2026 vtp developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include "vtp/settle/tier.hpp"
#include "vtp/verify/evidence.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace vtp::identity
{

// Verification predicate the agent commits to: which proof objects must
// be present and valid, the notary witness floor, and named extra checks.
struct AgentContract
{
    std::string agentId;
    std::set<verify::ProofKind> requiredProofKinds;
    std::uint32_t minNotaryWitnesses{1};
    std::vector<std::string> extraPredicates;

    core::Json toJson() const;
    static AgentContract fromJson(core::Json const& j);
};

// Per-workflow facts the named predicates evaluate against.
struct EvaluationContext
{
    core::Digest expectedAjwtIntegrityHash;
    core::Digest expectedTelemetryHash;
    core::Amount paymentAmount;
    core::Amount cartTotal;
    core::Amount budgetCap;
    core::Amount telemetryTotalCost;
    std::optional<core::Digest> expectedOutputCommitment;
};

struct ContractVerdict
{
    bool pass{false};
    std::vector<std::string> reasons; // every unmet requirement
};

// Proof kinds the tier baseline mandates, merged with the contract's own.
std::set<verify::ProofKind> tierRequiredProofs(settle::Tier tier);
std::uint32_t tierMinWitnesses(settle::Tier tier);

// Pass iff every required proof object is present and individually valid,
// every notary receipt carries at least max(contract, tier) distinct
// witnesses, the quorum certificate signs the recomputed bundle root, and
// all extra predicates hold.
ContractVerdict evaluateAgentContract(AgentContract const& contract,
                                      verify::PoTEBundle const& pote,
                                      settle::Tier tier,
                                      verify::TrustAnchors const& anchors,
                                      EvaluationContext const& ctx);

}
