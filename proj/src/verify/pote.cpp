// Copyright 2026 vtp developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#include "vtp/verify/pote.hpp"
#include "vtp/core/errors.hpp"
#include "vtp/core/merkle.hpp"

#include <algorithm>
#include <ostream>

namespace vtp::verify
{

core::Json
PoTEAnchor::toJson() const
{
    return core::Json{{"workflow_id", workflowId},
                      {"escrow_id", escrowId},
                      {"merkle_root", merkleRoot.hex()},
                      {"tick", tick}};
}

PoTEAnchor const&
PoTEAnchorLog::anchor(std::string const& workflowId,
                      std::string const& escrowId, core::Digest const& root,
                      core::Tick tick)
{
    for (auto const& e : mEntries)
    {
        if (e.escrowId != escrowId)
            continue;
        if (e.merkleRoot == root)
            return e; // idempotent re-anchor
        fail(Errc::Conflict, "different PoTE root already anchored for " +
                                 escrowId);
    }
    mEntries.push_back(PoTEAnchor{workflowId, escrowId, root, tick});
    return mEntries.back();
}

std::optional<PoTEAnchor>
PoTEAnchorLog::latestFor(std::string const& escrowId) const
{
    for (auto it = mEntries.rbegin(); it != mEntries.rend(); ++it)
        if (it->escrowId == escrowId)
            return *it;
    return std::nullopt;
}

bool
PoTEAnchorLog::hasRootAtOrBefore(std::string const& escrowId,
                                 core::Digest const& root,
                                 core::Tick tick) const
{
    for (auto const& e : mEntries)
        if (e.escrowId == escrowId && e.merkleRoot == root && e.tick <= tick)
            return true;
    return false;
}

void
PoTEAnchorLog::exportJsonl(std::ostream& out) const
{
    for (auto const& e : mEntries)
        out << core::canonicalSerialize(e.toJson()) << "\n";
}

core::Json
PoTEAnchorLog::toJson() const
{
    auto arr = core::Json::array();
    for (auto const& e : mEntries)
        arr.push_back(e.toJson());
    return arr;
}

void
sortReceiptsCanonically(std::vector<NotaryReceipt>& receipts)
{
    std::stable_sort(receipts.begin(), receipts.end(),
                     [](NotaryReceipt const& a, NotaryReceipt const& b) {
                         if (a.kind != b.kind)
                             return static_cast<int>(a.kind) <
                                    static_cast<int>(b.kind);
                         if (a.tick != b.tick)
                             return a.tick < b.tick;
                         return a.requestCommitment < b.requestCommitment;
                     });
}

VerificationSession&
VerificationHub::openSession(std::string const& workflowId,
                             std::string const& escrowId,
                             bool workflowExecuting)
{
    if (!workflowExecuting)
        fail(Errc::WrongState,
             "workflow not executing: " + workflowId);
    if (mSessions.contains(workflowId))
        fail(Errc::WrongState,
             "verification session already open for " + workflowId);
    auto [it, inserted] = mSessions.emplace(
        workflowId, VerificationSession{workflowId, escrowId, {}, {}});
    mAudit.append("verification_session_opened", workflowId, escrowId,
                  core::Json{{"workflow_id", workflowId}});
    return it->second;
}

VerificationSession&
VerificationHub::session(std::string const& workflowId)
{
    auto it = mSessions.find(workflowId);
    if (it == mSessions.end())
        fail(Errc::WrongState, "no verification session for " + workflowId);
    return it->second;
}

PoTEBundle
VerificationHub::assemblePote(std::string const& workflowId,
                              core::Digest const& ajwtIntegrityHash,
                              core::Digest const& telemetryHash,
                              std::set<ProofKind> const& requiredKinds,
                              ValidatorSet const& validators,
                              std::set<std::uint32_t> const& byzantineMask)
{
    auto& sess = session(workflowId);

    PoTEBundle bundle;
    bundle.workflowId = sess.workflowId;
    bundle.escrowId = sess.escrowId;
    bundle.receipts = sess.receipts;
    sortReceiptsCanonically(bundle.receipts);
    bundle.tee = sess.tee;
    bundle.ajwtIntegrityHash = ajwtIntegrityHash;
    bundle.telemetryHash = telemetryHash;

    auto hasKind = [&](ReceiptKind k) {
        return std::any_of(bundle.receipts.begin(), bundle.receipts.end(),
                           [&](auto const& r) { return r.kind == k; });
    };
    for (auto kind : requiredKinds)
    {
        bool present = true;
        switch (kind)
        {
        case ProofKind::NotaryReceiptExecutor:
            present = hasKind(ReceiptKind::Executor);
            break;
        case ProofKind::NotaryReceiptModel:
            present = hasKind(ReceiptKind::Model);
            break;
        case ProofKind::NotaryReceiptTool:
            present = hasKind(ReceiptKind::Tool);
            break;
        case ProofKind::ApiReceipt:
            present = hasKind(ReceiptKind::Api);
            break;
        case ProofKind::TeeAttestation:
            present = bundle.tee.has_value();
            break;
        case ProofKind::AJwtIntegrity:
        case ProofKind::TelemetryHash:
            break; // carried as hashes, always embedded
        }
        if (!present)
            fail(Errc::MissingProofObject,
                 std::string(proofKindName(kind)) + " for " + workflowId);
    }

    bundle.merkleRoot = core::merkleRoot(bundle.evidenceLeaves());

    auto cert = validators.validate(bundle.merkleRoot, byzantineMask);
    if (!cert)
        fail(Errc::NoQuorum, "validators did not certify " + workflowId);
    bundle.quorum = *cert;

    mAudit.append("pote_assembled", workflowId, sess.escrowId,
                  core::Json{{"merkle_root", bundle.merkleRoot.hex()},
                             {"votes", bundle.quorum.votes.size()}});
    return bundle;
}

PoTEAnchor const&
VerificationHub::anchorPote(PoTEBundle const& bundle, bool verdictPass)
{
    if (!verdictPass)
        fail(Errc::ContractFailed,
             "contract verdict failed for " + bundle.workflowId);
    auto const& anchor = mAnchors.anchor(bundle.workflowId, bundle.escrowId,
                                         bundle.merkleRoot, mClock.tick);
    mAudit.append("pote_anchored", bundle.workflowId, bundle.escrowId,
                  core::Json{{"merkle_root", bundle.merkleRoot.hex()}});
    return anchor;
}

}
