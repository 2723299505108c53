// Copyright 2026 vtp developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#include "vtp/settle/escrow.hpp"
#include "vtp/core/errors.hpp"

namespace vtp::settle
{

std::string_view
escrowStatusName(EscrowStatus s)
{
    switch (s)
    {
    case EscrowStatus::Created:
        return "CREATED";
    case EscrowStatus::FundingPending:
        return "FUNDING_PENDING";
    case EscrowStatus::Open:
        return "OPEN";
    case EscrowStatus::SettlementPending:
        return "SETTLEMENT_PENDING";
    case EscrowStatus::Settled:
        return "SETTLED";
    case EscrowStatus::RefundPending:
        return "REFUND_PENDING";
    case EscrowStatus::Refunded:
        return "REFUNDED";
    case EscrowStatus::Expired:
        return "EXPIRED";
    }
    return "?";
}

std::string_view
escrowEventName(EscrowEventType e)
{
    switch (e)
    {
    case EscrowEventType::DepositObserved:
        return "DepositObserved";
    case EscrowEventType::FinalityReached:
        return "FinalityReached";
    case EscrowEventType::PoTEAnchored:
        return "PoTEAnchored";
    case EscrowEventType::VerificationFailed:
        return "VerificationFailed";
    case EscrowEventType::Timeout:
        return "Timeout";
    case EscrowEventType::ChallengeRaised:
        return "ChallengeRaised";
    case EscrowEventType::ChallengeWindowElapsed:
        return "ChallengeWindowElapsed";
    case EscrowEventType::SettlementConfirmed:
        return "SettlementConfirmed";
    case EscrowEventType::RefundConfirmed:
        return "RefundConfirmed";
    }
    return "?";
}

std::optional<EscrowStatus>
documentedTransition(EscrowStatus from, EscrowEventType event, Tier tier)
{
    using S = EscrowStatus;
    using E = EscrowEventType;
    switch (from)
    {
    case S::Created:
        if (event == E::DepositObserved)
            return S::FundingPending;
        if (event == E::Timeout)
            return S::Expired;
        return std::nullopt;
    case S::FundingPending:
        if (event == E::FinalityReached)
            return S::Open;
        if (event == E::Timeout)
            return S::Expired;
        return std::nullopt;
    case S::Open:
        if (event == E::PoTEAnchored)
            return S::SettlementPending;
        if (event == E::VerificationFailed || event == E::Timeout)
            return S::RefundPending;
        return std::nullopt;
    case S::SettlementPending:
        if (event == E::SettlementConfirmed)
            return S::Settled;
        if (event == E::ChallengeRaised && tier == Tier::Tier3)
            return S::RefundPending;
        if (event == E::ChallengeWindowElapsed && tier == Tier::Tier3)
            return S::SettlementPending; // arms settlement, no state change
        return std::nullopt;
    case S::RefundPending:
        if (event == E::RefundConfirmed)
            return S::Refunded;
        return std::nullopt;
    case S::Settled:
    case S::Refunded:
    case S::Expired:
        return std::nullopt; // terminal
    }
    return std::nullopt;
}

core::Json
EscrowRecord::toJson() const
{
    auto txIds = core::Json::array();
    for (auto const& id : settlementTxIds)
        txIds.push_back(id);
    return core::Json{
        {"escrow_id", escrowId},
        {"rail_id", railId},
        {"amount", amount.toJson()},
        {"payer_ref", payerRef},
        {"payee_agent_id", payeeAgentId},
        {"escrow_address", escrowAddress},
        {"deposit_tx_id",
         depositTxId ? core::Json(*depositTxId) : core::Json(nullptr)},
        {"status", std::string(escrowStatusName(status))},
        {"pote_root", poteRoot ? core::Json(poteRoot->hex())
                               : core::Json(nullptr)},
        {"settlement_tx_ids", std::move(txIds)},
        {"timeout_tick", timeoutTick},
        {"tier", std::string(tierName(tier))},
        {"workflow_id", workflowId},
        {"challenge_window_elapsed", challengeWindowElapsed},
        {"challenged", challenged}};
}

EscrowRecord&
EscrowTable::create(EscrowRecord record)
{
    if (mRecords.contains(record.escrowId))
        fail(Errc::DuplicateEscrow, record.escrowId);
    auto id = record.escrowId;
    auto [it, ok] = mRecords.emplace(id, std::move(record));
    mAudit.append("escrow_created", it->second.workflowId, id,
                  core::Json{{"rail_id", it->second.railId},
                             {"escrow_address", it->second.escrowAddress},
                             {"tier", std::string(tierName(it->second.tier))}});
    return it->second;
}

bool
EscrowTable::has(std::string const& escrowId) const
{
    return mRecords.contains(escrowId);
}

EscrowRecord&
EscrowTable::get(std::string const& escrowId)
{
    auto it = mRecords.find(escrowId);
    if (it == mRecords.end())
        fail(Errc::UnknownEscrow, escrowId);
    return it->second;
}

EscrowRecord const&
EscrowTable::get(std::string const& escrowId) const
{
    auto it = mRecords.find(escrowId);
    if (it == mRecords.end())
        fail(Errc::UnknownEscrow, escrowId);
    return it->second;
}

EscrowStatus
EscrowTable::transition(std::string const& escrowId, EscrowEvent event)
{
    auto& rec = get(escrowId);
    auto next = documentedTransition(rec.status, event.type, rec.tier);
    if (!next)
        fail(Errc::IllegalTransition,
             std::string(escrowStatusName(rec.status)) + " + " +
                 std::string(escrowEventName(event.type)) + " on " + escrowId);

    if (event.type == EscrowEventType::PoTEAnchored)
    {
        if (!event.poteRoot)
            fail(Errc::IllegalTransition,
                 "PoTEAnchored event without a root");
        rec.poteRoot = event.poteRoot;
    }
    if (event.type == EscrowEventType::ChallengeWindowElapsed)
        rec.challengeWindowElapsed = true;
    if (event.type == EscrowEventType::ChallengeRaised)
        rec.challenged = true;

    auto const before = rec.status;
    rec.status = *next;
    if (rec.history.empty() || rec.history.back() != rec.status)
        rec.history.push_back(rec.status);
    mAudit.append(
        "escrow_transition", rec.workflowId, escrowId,
        core::Json{{"event", std::string(escrowEventName(event.type))},
                   {"from", std::string(escrowStatusName(before))},
                   {"to", std::string(escrowStatusName(rec.status))}});
    return rec.status;
}

std::vector<std::string>
EscrowTable::escrowIds() const
{
    std::vector<std::string> ids;
    for (auto const& [id, rec] : mRecords)
        ids.push_back(id);
    return ids;
}

core::Json
EscrowTable::toJson() const
{
    auto arr = core::Json::array();
    for (auto const& [id, rec] : mRecords)
        arr.push_back(rec.toJson());
    return arr;
}

}
