// Copyright 2026 vtp developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#include "vtp/identity/contract.hpp"
#include "vtp/core/errors.hpp"
#include "vtp/core/merkle.hpp"
#include "vtp/core/signature.hpp"

#include <algorithm>
#include <set>

namespace vtp::identity
{

using verify::ProofKind;
using verify::ReceiptKind;

core::Json
AgentContract::toJson() const
{
    auto kinds = core::Json::array();
    for (auto k : requiredProofKinds)
        kinds.push_back(std::string(verify::proofKindName(k)));
    return core::Json{{"agent_id", agentId},
                      {"required_proof_kinds", std::move(kinds)},
                      {"min_notary_witnesses", minNotaryWitnesses},
                      {"extra_predicates", extraPredicates}};
}

AgentContract
AgentContract::fromJson(core::Json const& j)
{
    AgentContract c;
    c.agentId = j.at("agent_id").get<std::string>();
    for (auto const& name : j.at("required_proof_kinds"))
        c.requiredProofKinds.insert(
            verify::proofKindFromName(name.get<std::string>()));
    if (c.requiredProofKinds.empty())
        fail(Errc::ConfigInvalid, "required_proof_kinds must be non-empty");
    c.minNotaryWitnesses = j.at("min_notary_witnesses").get<std::uint32_t>();
    if (c.minNotaryWitnesses == 0)
        fail(Errc::ConfigInvalid, "min_notary_witnesses must be positive");
    if (j.contains("extra_predicates"))
        c.extraPredicates =
            j.at("extra_predicates").get<std::vector<std::string>>();
    return c;
}

std::set<ProofKind>
tierRequiredProofs(settle::Tier tier)
{
    switch (tier)
    {
    case settle::Tier::Tier1:
        // optimistic: token integrity plus a plain API receipt
        return {ProofKind::AJwtIntegrity, ProofKind::ApiReceipt};
    case settle::Tier::Tier2:
        return {ProofKind::NotaryReceiptExecutor, ProofKind::NotaryReceiptModel,
                ProofKind::NotaryReceiptTool, ProofKind::AJwtIntegrity,
                ProofKind::TelemetryHash};
    case settle::Tier::Tier3:
        return {ProofKind::NotaryReceiptExecutor, ProofKind::NotaryReceiptModel,
                ProofKind::NotaryReceiptTool, ProofKind::TeeAttestation,
                ProofKind::AJwtIntegrity, ProofKind::TelemetryHash};
    }
    return {};
}

std::uint32_t
tierMinWitnesses(settle::Tier tier)
{
    return tier == settle::Tier::Tier3 ? 2 : 1;
}

namespace
{

bool
hasReceipt(verify::PoTEBundle const& pote, ReceiptKind kind)
{
    return std::any_of(pote.receipts.begin(), pote.receipts.end(),
                       [&](auto const& r) { return r.kind == kind; });
}

void
checkReceipts(verify::PoTEBundle const& pote,
              verify::TrustAnchors const& anchors, std::uint32_t minWitnesses,
              ContractVerdict& verdict)
{
    for (auto const& r : pote.receipts)
    {
        std::string label = std::string(verify::receiptKindName(r.kind)) +
                            " receipt @" + std::to_string(r.tick);
        std::string const bodyStr = core::canonicalSerialize(r.bodyJson());
        auto body = core::view(bodyStr);
        std::set<std::string> distinct;
        for (auto const& w : r.witnesses)
        {
            auto keyIt = anchors.notaryKeys.find(w.notaryId);
            if (keyIt == anchors.notaryKeys.end())
            {
                verdict.reasons.push_back(label + ": unknown notary " +
                                          w.notaryId);
                continue;
            }
            if (!core::verify(keyIt->second, body, w.signature))
            {
                verdict.reasons.push_back(label + ": bad witness signature (" +
                                          w.notaryId + ")");
                continue;
            }
            distinct.insert(w.notaryId);
        }
        if (distinct.size() < minWitnesses)
            verdict.reasons.push_back(
                label + ": " + std::to_string(distinct.size()) +
                " valid witnesses, need " + std::to_string(minWitnesses));
    }
}

void
checkTee(verify::PoTEBundle const& pote, verify::TrustAnchors const& anchors,
         ContractVerdict& verdict)
{
    auto const& tee = *pote.tee;
    std::string const bodyStr = core::canonicalSerialize(tee.bodyJson());
    if (!core::verify(anchors.attestationAuthorityKey, core::view(bodyStr),
                      tee.reportSignature))
        verdict.reasons.push_back("TeeAttestation: bad authority signature");
    auto it = anchors.expectedMeasurements.find(tee.agentId);
    if (it != anchors.expectedMeasurements.end() &&
        it->second != tee.enclaveMeasurement)
        verdict.reasons.push_back(
            "TeeAttestation: enclave measurement drifted from registered "
            "expectation");
}

void
checkQuorum(verify::PoTEBundle const& pote, verify::TrustAnchors const& anchors,
            ContractVerdict& verdict)
{
    auto const& q = pote.quorum;
    if (q.subjectDigest != pote.merkleRoot)
    {
        verdict.reasons.push_back(
            "quorum certificate signs a different digest than the bundle "
            "root");
        return;
    }
    std::set<std::string> distinct;
    for (auto const& v : q.votes)
    {
        auto keyIt = anchors.validatorKeys.find(v.validatorId);
        if (keyIt == anchors.validatorKeys.end() ||
            !core::verify(keyIt->second, q.subjectDigest.view(), v.signature))
        {
            verdict.reasons.push_back("quorum: invalid vote from " +
                                      v.validatorId);
            continue;
        }
        distinct.insert(v.validatorId);
    }
    std::uint32_t const needed = 2 * q.fTolerated + 1;
    if (distinct.size() < needed)
        verdict.reasons.push_back(
            "quorum: " + std::to_string(distinct.size()) +
            " valid votes, need " + std::to_string(needed));
}

void
checkPredicate(std::string const& name, verify::PoTEBundle const& pote,
               EvaluationContext const& ctx, ContractVerdict& verdict)
{
    if (name == "reconcile-amounts")
    {
        if (!(ctx.paymentAmount == ctx.cartTotal))
            verdict.reasons.push_back(
                "reconcile-amounts: payment amount differs from cart total");
        if (ctx.paymentAmount.minorUnits > ctx.budgetCap.minorUnits)
            verdict.reasons.push_back(
                "reconcile-amounts: payment amount exceeds budget cap");
        return;
    }
    if (name == "budget-adherence")
    {
        if (ctx.telemetryTotalCost.minorUnits > ctx.budgetCap.minorUnits)
            verdict.reasons.push_back(
                "budget-adherence: telemetry cost exceeds budget cap");
        return;
    }
    if (name == "output-matches-cart")
    {
        if (!ctx.expectedOutputCommitment)
        {
            verdict.reasons.push_back(
                "output-matches-cart: no expected output commitment");
            return;
        }
        bool matched = std::any_of(
            pote.receipts.begin(), pote.receipts.end(), [&](auto const& r) {
                return (r.kind == ReceiptKind::Api ||
                        r.kind == ReceiptKind::Tool) &&
                       r.responseCommitment == *ctx.expectedOutputCommitment;
            });
        if (!matched)
            verdict.reasons.push_back(
                "output-matches-cart: no api/tool receipt commits to the "
                "expected output");
        return;
    }
    verdict.reasons.push_back("unknown predicate: " + name);
}

}

ContractVerdict
evaluateAgentContract(AgentContract const& contract,
                      verify::PoTEBundle const& pote, settle::Tier tier,
                      verify::TrustAnchors const& anchors,
                      EvaluationContext const& ctx)
{
    ContractVerdict verdict;

    auto required = contract.requiredProofKinds;
    for (auto k : tierRequiredProofs(tier))
        required.insert(k);

    for (auto kind : required)
    {
        bool present = true;
        switch (kind)
        {
        case ProofKind::NotaryReceiptExecutor:
            present = hasReceipt(pote, ReceiptKind::Executor);
            break;
        case ProofKind::NotaryReceiptModel:
            present = hasReceipt(pote, ReceiptKind::Model);
            break;
        case ProofKind::NotaryReceiptTool:
            present = hasReceipt(pote, ReceiptKind::Tool);
            break;
        case ProofKind::ApiReceipt:
            present = hasReceipt(pote, ReceiptKind::Api);
            break;
        case ProofKind::TeeAttestation:
            present = pote.tee.has_value();
            break;
        case ProofKind::AJwtIntegrity:
            if (pote.ajwtIntegrityHash != ctx.expectedAjwtIntegrityHash)
                verdict.reasons.push_back(
                    "AJwtIntegrity: bundle hash differs from the token used");
            break;
        case ProofKind::TelemetryHash:
            if (pote.telemetryHash != ctx.expectedTelemetryHash)
                verdict.reasons.push_back(
                    "TelemetryHash: bundle hash differs from the session "
                    "hash");
            break;
        }
        if (!present)
            verdict.reasons.push_back(
                std::string(verify::proofKindName(kind)) + " missing");
    }

    std::uint32_t const minWitnesses =
        std::max(contract.minNotaryWitnesses, tierMinWitnesses(tier));
    checkReceipts(pote, anchors, minWitnesses, verdict);

    if (pote.tee)
        checkTee(pote, anchors, verdict);

    // bundle integrity: the sealed root must be recomputable
    auto leaves = pote.evidenceLeaves();
    if (core::merkleRoot(leaves) != pote.merkleRoot)
        verdict.reasons.push_back(
            "bundle root does not match its evidence set");

    checkQuorum(pote, anchors, verdict);

    for (auto const& name : contract.extraPredicates)
        checkPredicate(name, pote, ctx, verdict);

    verdict.pass = verdict.reasons.empty();
    return verdict;
}

}
