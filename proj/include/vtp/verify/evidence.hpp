// Copyright 2026 vtp developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include "vtp/core/amount.hpp"
#include "vtp/core/canonical.hpp"
#include "vtp/core/digest.hpp"
#include "vtp/core/ids.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace vtp::verify
{

// Proof objects an Agent Contract or tier baseline can require.
enum class ProofKind
{
    NotaryReceiptExecutor,
    NotaryReceiptModel,
    NotaryReceiptTool,
    TeeAttestation,
    AJwtIntegrity,
    ApiReceipt,
    TelemetryHash,
};

std::string_view proofKindName(ProofKind k);
ProofKind proofKindFromName(std::string_view name);

enum class ReceiptKind
{
    Executor,
    Model,
    Tool,
    Api,
};

std::string_view receiptKindName(ReceiptKind k);
ReceiptKind receiptKindFromName(std::string_view name);

struct WitnessSignature
{
    std::string notaryId;
    core::Bytes signature; // over the canonical receipt body
};

// Notary co-signature over request/response commitments of one exchange.
struct NotaryReceipt
{
    ReceiptKind kind{ReceiptKind::Executor};
    std::string sessionId;
    std::string workflowId;
    core::Digest requestCommitment;
    core::Digest responseCommitment;
    core::Tick tick{0};
    std::vector<WitnessSignature> witnesses;

    core::Json bodyJson() const; // what the witnesses sign
    core::Json toJson() const;
};

struct TeeAttestation
{
    std::string agentId;
    core::Digest enclaveMeasurement; // hash of agent code/config bytes
    core::Tick tick{0};
    core::Bytes reportSignature; // by the attestation authority key

    core::Json bodyJson() const;
    core::Json toJson() const;
};

struct QuorumVote
{
    std::string validatorId;
    core::Bytes signature; // over the raw subject digest bytes
};

struct QuorumCertificate
{
    core::Digest subjectDigest;
    std::vector<QuorumVote> votes;
    std::uint32_t nValidators{0};
    std::uint32_t fTolerated{0};

    core::Json toJson() const;
};

// The sealed evidence set. merkle_root covers the canonical bytes of
// [receipts in canonical order..., tee?, ajwt record, telemetry record];
// the quorum certificate signs exactly that root.
struct PoTEBundle
{
    std::string workflowId;
    std::string escrowId;
    std::vector<NotaryReceipt> receipts;
    std::optional<TeeAttestation> tee;
    core::Digest ajwtIntegrityHash;
    core::Digest telemetryHash;
    core::Digest merkleRoot;
    QuorumCertificate quorum;

    // Leaf byte strings in the fixed canonical order.
    std::vector<core::Bytes> evidenceLeaves() const;
    core::Json toJson() const;
};

// Public keys the verifier trusts; no secret material.
struct TrustAnchors
{
    std::map<std::string, core::Bytes> notaryKeys;
    std::map<std::string, core::Bytes> validatorKeys;
    core::Bytes attestationAuthorityKey;
    std::map<std::string, core::Digest> expectedMeasurements;
};

}
