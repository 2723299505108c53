// Copyright 2026 vtp developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include "vtp/core/amount.hpp"
#include "vtp/core/digest.hpp"
#include "vtp/core/ids.hpp"
#include "vtp/settle/tier.hpp"
#include "vtp/verify/audit.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace vtp::settle
{

enum class EscrowStatus
{
    Created,
    FundingPending,
    Open,
    SettlementPending,
    Settled,
    RefundPending,
    Refunded,
    Expired,
};

std::string_view escrowStatusName(EscrowStatus s);

enum class EscrowEventType
{
    DepositObserved,
    FinalityReached,
    PoTEAnchored,
    VerificationFailed,
    Timeout,
    ChallengeRaised,
    ChallengeWindowElapsed,
    SettlementConfirmed,
    RefundConfirmed,
};

std::string_view escrowEventName(EscrowEventType e);

struct EscrowEvent
{
    EscrowEventType type;
    std::optional<core::Digest> poteRoot; // PoTEAnchored payload
};

struct EscrowRecord
{
    std::string escrowId;
    std::string railId;
    core::Amount amount;
    std::string payerRef; // payer wallet ref
    std::string payeeAgentId;
    std::string escrowAddress;
    std::optional<std::string> depositTxId;
    EscrowStatus status{EscrowStatus::Created};
    std::optional<core::Digest> poteRoot;
    std::vector<std::string> settlementTxIds; // scoped to railId
    core::Tick timeoutTick{0};
    Tier tier{Tier::Tier2};
    std::string workflowId;
    // Tier 3 challenge accounting
    bool challengeWindowElapsed{false};
    bool challenged{false};
    // every status this record has held, in order
    std::vector<EscrowStatus> history{EscrowStatus::Created};

    bool
    terminal() const
    {
        return status == EscrowStatus::Settled ||
               status == EscrowStatus::Refunded ||
               status == EscrowStatus::Expired;
    }

    core::Json toJson() const;
};

// The PoTE-gated state machine. Undocumented (state, event) pairs reject
// with IllegalTransition; terminal states admit nothing.
std::optional<EscrowStatus> documentedTransition(EscrowStatus from,
                                                 EscrowEventType event,
                                                 Tier tier);

class EscrowTable
{
  public:
    explicit EscrowTable(verify::AuditLedger& audit) : mAudit(audit)
    {
    }

    EscrowRecord& create(EscrowRecord record); // DuplicateEscrow

    bool has(std::string const& escrowId) const;
    EscrowRecord& get(std::string const& escrowId);             // UnknownEscrow
    EscrowRecord const& get(std::string const& escrowId) const; // UnknownEscrow

    // Applies one event; returns the new status. Throws IllegalTransition
    // or UnknownEscrow. Emits an audit event per accepted transition.
    EscrowStatus transition(std::string const& escrowId, EscrowEvent event);

    std::vector<std::string> escrowIds() const;
    core::Json toJson() const;

  private:
    verify::AuditLedger& mAudit;
    std::map<std::string, EscrowRecord> mRecords;
};

}
