// Copyright 2026 vtp developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include "vtp/verify/audit.hpp"
#include "vtp/verify/evidence.hpp"
#include "vtp/verify/quorum.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <set>

namespace vtp::verify
{

// Collects the receipts of one workflow between output submission and
// PoTE assembly. One session per workflow.
struct VerificationSession
{
    std::string workflowId;
    std::string escrowId;
    std::vector<NotaryReceipt> receipts;
    std::optional<TeeAttestation> tee;
};

struct PoTEAnchor
{
    std::string workflowId;
    std::string escrowId;
    core::Digest merkleRoot;
    core::Tick tick{0};

    core::Json toJson() const;
};

// Append-only anchor store keyed by (workflow_id, escrow_id).
// Re-anchoring the same root is idempotent; a different root is a hard
// Conflict.
class PoTEAnchorLog
{
  public:
    PoTEAnchor const& anchor(std::string const& workflowId,
                             std::string const& escrowId,
                             core::Digest const& root, core::Tick tick);

    std::optional<PoTEAnchor> latestFor(std::string const& escrowId) const;

    bool hasRootAtOrBefore(std::string const& escrowId, core::Digest const& root,
                           core::Tick tick) const;

    std::vector<PoTEAnchor> const&
    entries() const
    {
        return mEntries;
    }

    void exportJsonl(std::ostream& out) const;
    core::Json toJson() const;

  private:
    std::vector<PoTEAnchor> mEntries;
};

class VerificationHub
{
  public:
    VerificationHub(AuditLedger& audit, core::Clock const& clock)
        : mAudit(audit), mClock(clock)
    {
    }

    // `workflowExecuting` is the workflow-state gate; a second open for
    // the same workflow is rejected.
    VerificationSession& openSession(std::string const& workflowId,
                                     std::string const& escrowId,
                                     bool workflowExecuting);

    bool
    hasSession(std::string const& workflowId) const
    {
        return mSessions.contains(workflowId);
    }

    VerificationSession& session(std::string const& workflowId);

    // Orders the evidence canonically, checks required objects, obtains a
    // quorum certificate over the sealed root, and returns the bundle.
    // Throws MissingProofObject / NoQuorum.
    PoTEBundle assemblePote(std::string const& workflowId,
                            core::Digest const& ajwtIntegrityHash,
                            core::Digest const& telemetryHash,
                            std::set<ProofKind> const& requiredKinds,
                            ValidatorSet const& validators,
                            std::set<std::uint32_t> const& byzantineMask);

    // Records the bundle root; caller must have a passing contract
    // verdict. Throws ContractFailed when it does not.
    PoTEAnchor const& anchorPote(PoTEBundle const& bundle, bool verdictPass);

    PoTEAnchorLog&
    anchors()
    {
        return mAnchors;
    }

    PoTEAnchorLog const&
    anchors() const
    {
        return mAnchors;
    }

  private:
    AuditLedger& mAudit;
    core::Clock const& mClock;
    std::map<std::string, VerificationSession> mSessions;
    PoTEAnchorLog mAnchors;
};

// Canonical receipt order inside a bundle: kind, then tick, then request
// commitment.
void sortReceiptsCanonically(std::vector<NotaryReceipt>& receipts);

}
