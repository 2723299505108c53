// Copyright 2026 vtp developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#include "vtp/verify/evidence.hpp"
#include "vtp/core/errors.hpp"

namespace vtp::verify
{

std::string_view
proofKindName(ProofKind k)
{
    switch (k)
    {
    case ProofKind::NotaryReceiptExecutor:
        return "NotaryReceiptExecutor";
    case ProofKind::NotaryReceiptModel:
        return "NotaryReceiptModel";
    case ProofKind::NotaryReceiptTool:
        return "NotaryReceiptTool";
    case ProofKind::TeeAttestation:
        return "TeeAttestation";
    case ProofKind::AJwtIntegrity:
        return "AJwtIntegrity";
    case ProofKind::ApiReceipt:
        return "ApiReceipt";
    case ProofKind::TelemetryHash:
        return "TelemetryHash";
    }
    return "?";
}

ProofKind
proofKindFromName(std::string_view name)
{
    for (auto k :
         {ProofKind::NotaryReceiptExecutor, ProofKind::NotaryReceiptModel,
          ProofKind::NotaryReceiptTool, ProofKind::TeeAttestation,
          ProofKind::AJwtIntegrity, ProofKind::ApiReceipt,
          ProofKind::TelemetryHash})
        if (proofKindName(k) == name)
            return k;
    fail(Errc::BadEncoding, "unknown proof kind: " + std::string(name));
}

std::string_view
receiptKindName(ReceiptKind k)
{
    switch (k)
    {
    case ReceiptKind::Executor:
        return "executor";
    case ReceiptKind::Model:
        return "model";
    case ReceiptKind::Tool:
        return "tool";
    case ReceiptKind::Api:
        return "api";
    }
    return "?";
}

ReceiptKind
receiptKindFromName(std::string_view name)
{
    for (auto k : {ReceiptKind::Executor, ReceiptKind::Model,
                   ReceiptKind::Tool, ReceiptKind::Api})
        if (receiptKindName(k) == name)
            return k;
    fail(Errc::BadEncoding, "unknown receipt kind: " + std::string(name));
}

core::Json
NotaryReceipt::bodyJson() const
{
    return core::Json{{"kind", std::string(receiptKindName(kind))},
                      {"session_id", sessionId},
                      {"workflow_id", workflowId},
                      {"request_commitment", requestCommitment.hex()},
                      {"response_commitment", responseCommitment.hex()},
                      {"tick", tick}};
}

core::Json
NotaryReceipt::toJson() const
{
    auto j = bodyJson();
    auto sigs = core::Json::array();
    for (auto const& w : witnesses)
        sigs.push_back(core::Json{{"notary_id", w.notaryId},
                                  {"signature", core::hexEncode(w.signature)}});
    j["witness_signatures"] = std::move(sigs);
    return j;
}

core::Json
TeeAttestation::bodyJson() const
{
    return core::Json{{"agent_id", agentId},
                      {"enclave_measurement", enclaveMeasurement.hex()},
                      {"tick", tick}};
}

core::Json
TeeAttestation::toJson() const
{
    auto j = bodyJson();
    j["report_signature"] = core::hexEncode(reportSignature);
    return j;
}

core::Json
QuorumCertificate::toJson() const
{
    auto votesJson = core::Json::array();
    for (auto const& v : votes)
        votesJson.push_back(
            core::Json{{"validator_id", v.validatorId},
                       {"signature", core::hexEncode(v.signature)}});
    return core::Json{{"subject_digest", subjectDigest.hex()},
                      {"votes", std::move(votesJson)},
                      {"n_validators", nValidators},
                      {"f_tolerated", fTolerated}};
}

std::vector<core::Bytes>
PoTEBundle::evidenceLeaves() const
{
    std::vector<core::Bytes> leaves;
    for (auto const& r : receipts)
        leaves.push_back(core::to_bytes(core::canonicalSerialize(r.toJson())));
    if (tee)
        leaves.push_back(
            core::to_bytes(core::canonicalSerialize(tee->toJson())));
    leaves.push_back(core::to_bytes(core::canonicalSerialize(
        core::Json{{"ajwt_integrity_hash", ajwtIntegrityHash.hex()}})));
    leaves.push_back(core::to_bytes(core::canonicalSerialize(
        core::Json{{"telemetry_hash", telemetryHash.hex()}})));
    return leaves;
}

core::Json
PoTEBundle::toJson() const
{
    auto receiptsJson = core::Json::array();
    for (auto const& r : receipts)
        receiptsJson.push_back(r.toJson());
    return core::Json{{"workflow_id", workflowId},
                      {"escrow_id", escrowId},
                      {"receipts", std::move(receiptsJson)},
                      {"tee", tee ? tee->toJson() : core::Json(nullptr)},
                      {"ajwt_integrity_hash", ajwtIntegrityHash.hex()},
                      {"telemetry_hash", telemetryHash.hex()},
                      {"merkle_root", merkleRoot.hex()},
                      {"quorum", quorum.toJson()}};
}

}
