// Copyright 2026 vtp developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#include "vtp/settle/adapter.hpp"
#include "vtp/core/errors.hpp"

#include <algorithm>
#include <map>

namespace vtp::settle
{

core::Json
ExplorerRecord::toJson() const
{
    return core::Json{{"rail_id", railId},
                      {"tx_id", txId},
                      {"escrow_id", escrowId},
                      {"workflow_id", workflowId},
                      {"kind", kind},
                      {"from", from},
                      {"to", to},
                      {"amount", amount},
                      {"fee", fee},
                      {"status", status},
                      {"confirmations", confirmations},
                      {"block_height", blockHeight},
                      {"verdict", verdict}};
}

std::vector<ExplorerRecord>
ExplorerIndex::query(ExplorerFilter const& filter) const
{
    std::vector<ExplorerRecord> found;
    for (auto const& r : mRecords)
    {
        if (filter.railId && r.railId != *filter.railId)
            continue;
        if (filter.txId && r.txId != *filter.txId)
            continue;
        if (filter.escrowId && r.escrowId != *filter.escrowId)
            continue;
        if (filter.workflowId && r.workflowId != *filter.workflowId)
            continue;
        found.push_back(r);
    }
    return found;
}

core::Json
ExplorerIndex::toJson() const
{
    auto arr = core::Json::array();
    for (auto const& r : mRecords)
        arr.push_back(r.toJson());
    return arr;
}

std::string
RailAdapter::payeeWalletRef(std::string const& agentId) const
{
    return "agent:" + agentId + "@" + mRailId;
}

std::string
RailAdapter::escrowWalletRef(std::string const& escrowId) const
{
    return "escrow:" + escrowId + "@" + mRailId;
}

std::string
RailAdapter::provisionEscrow(std::string const& escrowId,
                             EscrowParams const& params)
{
    if (!mRails.has(mRailId))
        fail(Errc::UnknownRail, mRailId);
    if (mEscrows.has(escrowId))
        fail(Errc::DuplicateEscrow, escrowId);

    auto address = mWallets.createWallet(escrowWalletRef(escrowId), mRailId);

    EscrowRecord rec;
    rec.escrowId = escrowId;
    rec.railId = mRailId;
    rec.amount = params.amount;
    rec.payerRef = params.payerRef;
    rec.payeeAgentId = params.payeeAgentId;
    rec.escrowAddress = address;
    rec.timeoutTick = params.timeoutTick;
    rec.tier = params.tier;
    rec.workflowId = params.workflowId;
    mEscrows.create(std::move(rec));
    return address;
}

DepositObservation
RailAdapter::observeDeposit(std::string const& escrowId)
{
    auto& rec = mEscrows.get(escrowId);
    std::uint32_t const threshold =
        rec.tier == Tier::Tier3 ? chain().config().extendedFinalityConfirmations
                                : chain().config().finalityConfirmations;

    DepositObservation obs;
    for (auto const& inbound : chain().inboundTransfers(rec.escrowAddress))
    {
        obs.seen = true;
        if (inbound.reverted || inbound.amount < rec.amount.minorUnits)
            continue; // a reverted or short transfer never funds
        obs.depositTxId = inbound.txId;
        obs.confirmations = inbound.confirmations;
        obs.final = inbound.confirmations >= threshold;
        break;
    }

    if (obs.depositTxId && rec.status == EscrowStatus::Created)
    {
        rec.depositTxId = obs.depositTxId;
        mEscrows.transition(escrowId,
                            EscrowEvent{EscrowEventType::DepositObserved, {}});
    }
    if (obs.final && rec.status == EscrowStatus::FundingPending)
        mEscrows.transition(escrowId,
                            EscrowEvent{EscrowEventType::FinalityReached, {}});
    return obs;
}

bool
RailAdapter::checkClaimedDeposit(std::string const& escrowId,
                                 std::string const& claimedTxId) const
{
    auto const& rec = mEscrows.get(escrowId);
    for (auto const& view : chain().lookupTx(claimedTxId))
    {
        if (view.to == rec.escrowAddress && view.status == "success" &&
            view.amount >= rec.amount.minorUnits)
            return true;
    }
    return false;
}

std::string
RailAdapter::settle(std::string const& escrowId)
{
    auto& rec = mEscrows.get(escrowId); // UnknownEscrow first

    auto anchored = mAnchors.latestFor(escrowId);
    if (!anchored)
        fail(Errc::PoTEMissing,
             "no anchored PoTE root for " + escrowId);
    if (rec.status != EscrowStatus::SettlementPending)
        fail(Errc::WrongState,
             "settle on " + std::string(escrowStatusName(rec.status)));
    if (!rec.poteRoot || *rec.poteRoot != anchored->merkleRoot)
        fail(Errc::PoTEMissing,
             "escrow root does not match the anchor log");
    if (rec.tier == Tier::Tier3)
    {
        if (rec.challenged)
            fail(Errc::WrongState, "challenge raised during the window");
        if (!rec.challengeWindowElapsed)
            fail(Errc::WrongState, "challenge window still open");
    }

    auto payeeAddress = mWallets.addressOf(payeeWalletRef(rec.payeeAgentId));
    std::uint64_t const fee = chain().config().flatFee.minorUnits;
    if (rec.amount.minorUnits < fee)
        fail(Errc::Overflow, "escrowed amount below the flat fee");
    auto stx = mWallets.signTransfer(escrowWalletRef(escrowId), payeeAddress,
                                     rec.amount.minorUnits - fee, false);
    auto txId = chain().submit(std::move(stx));
    rec.settlementTxIds.push_back(txId);
    mAudit.append("settlement_submitted", rec.workflowId, escrowId,
                  core::Json{{"tx_id", txId},
                             {"rail_id", mRailId},
                             {"amount", rec.amount.minorUnits - fee}});
    return txId;
}

std::string
RailAdapter::refund(std::string const& escrowId, std::string const& reason)
{
    auto& rec = mEscrows.get(escrowId);
    if (rec.status != EscrowStatus::RefundPending)
        fail(Errc::WrongState,
             "refund on " + std::string(escrowStatusName(rec.status)));

    auto payerAddress = mWallets.addressOf(rec.payerRef);
    std::uint64_t const fee = chain().config().flatFee.minorUnits;
    // the whole residual balance goes back, minus the transfer fee
    std::uint64_t const balance = chain().balance(rec.escrowAddress);
    if (balance < fee)
        fail(Errc::Overflow, "escrow balance below the flat fee");
    auto stx = mWallets.signTransfer(escrowWalletRef(escrowId), payerAddress,
                                     balance - fee, false);
    auto txId = chain().submit(std::move(stx));
    rec.settlementTxIds.push_back(txId);
    mAudit.append("refund_submitted", rec.workflowId, escrowId,
                  core::Json{{"tx_id", txId},
                             {"rail_id", mRailId},
                             {"reason", reason}});
    return txId;
}

std::string
RailAdapter::batchSettle(std::string const& batchEscrowId,
                         std::vector<BatchCharge> const& charges)
{
    auto& rec = mEscrows.get(batchEscrowId);
    for (auto const& c : charges)
    {
        if (classifyTier(c.amount) != Tier::Tier1)
            fail(Errc::MixedTier,
                 "non-Tier1 charge of " + std::to_string(c.amount.minorUnits));
        if (c.railId != mRailId)
            fail(Errc::MixedRail, c.railId + " vs " + mRailId);
    }

    auto anchored = mAnchors.latestFor(batchEscrowId);
    if (!anchored)
        fail(Errc::PoTEMissing,
             "no anchored PoTE root for batch " + batchEscrowId);
    if (rec.status != EscrowStatus::SettlementPending)
        fail(Errc::WrongState, "batch settle on " +
                                   std::string(escrowStatusName(rec.status)));

    // per-payee sums in deterministic order
    std::map<std::string, std::uint64_t> perPayee;
    for (auto const& c : charges)
        perPayee[c.payeeAgentId] += c.amount.minorUnits;
    std::vector<TxOutput> outputs;
    for (auto const& [payee, total] : perPayee)
        outputs.push_back(
            TxOutput{mWallets.addressOf(payeeWalletRef(payee)), total});

    auto stx = mWallets.signTransferMulti(escrowWalletRef(batchEscrowId),
                                          std::move(outputs), false);
    auto txId = chain().submit(std::move(stx));
    rec.settlementTxIds.push_back(txId);
    mAudit.append("batch_settlement_submitted", rec.workflowId, batchEscrowId,
                  core::Json{{"tx_id", txId},
                             {"rail_id", mRailId},
                             {"charges", charges.size()}});
    return txId;
}

void
RailAdapter::pollOutcome(std::string const& escrowId)
{
    auto& rec = mEscrows.get(escrowId);
    if (rec.settlementTxIds.empty())
        return;
    auto views = chain().lookupTx(rec.settlementTxIds.back());
    if (views.empty())
        return;
    bool const finalized = views.front().status == "success" &&
                           views.front().confirmations >=
                               chain().config().finalityConfirmations;
    if (!finalized)
        return;
    if (rec.status == EscrowStatus::SettlementPending)
        mEscrows.transition(
            escrowId, EscrowEvent{EscrowEventType::SettlementConfirmed, {}});
    else if (rec.status == EscrowStatus::RefundPending)
        mEscrows.transition(
            escrowId, EscrowEvent{EscrowEventType::RefundConfirmed, {}});
}

ReconcileVerdict
RailAdapter::reconcile(std::string const& escrowId)
{
    auto& rec = mEscrows.get(escrowId);
    if (rec.status != EscrowStatus::Settled)
        fail(Errc::WrongState,
             "reconcile on " + std::string(escrowStatusName(rec.status)));
    if (rec.settlementTxIds.empty())
        fail(Errc::TxNotFound, "no settlement tx recorded");

    auto const& txId = rec.settlementTxIds.back();
    auto views = chain().lookupTx(txId);
    if (views.empty())
        fail(Errc::TxNotFound, txId);

    auto payeeAddress = mWallets.addressOf(payeeWalletRef(rec.payeeAgentId));
    std::uint64_t const fee = chain().config().flatFee.minorUnits;

    ReconcileVerdict verdict;
    auto const& view = views.front();
    if (view.from != rec.escrowAddress)
        verdict.mismatchedFields.push_back("from");
    if (view.to != payeeAddress)
        verdict.mismatchedFields.push_back("to");
    if (view.amount != rec.amount.minorUnits - fee)
        verdict.mismatchedFields.push_back("amount");
    verdict.match = verdict.mismatchedFields.empty();
    verdict.txRecord = view.toJson();

    ExplorerRecord er;
    er.railId = mRailId;
    er.txId = txId;
    er.escrowId = escrowId;
    er.workflowId = rec.workflowId;
    er.kind = "settlement";
    er.from = view.from;
    er.to = view.to;
    er.amount = view.amount;
    er.fee = view.fee;
    er.status = view.status;
    er.confirmations = view.confirmations;
    er.blockHeight = view.blockHeight;
    if (verdict.match)
        er.verdict = "match";
    else
    {
        er.verdict = "mismatch(";
        for (std::size_t i = 0; i < verdict.mismatchedFields.size(); ++i)
            er.verdict += (i ? "," : "") + verdict.mismatchedFields[i];
        er.verdict += ")";
    }
    mExplorer.index(std::move(er));

    mAudit.append("reconciled", rec.workflowId, escrowId,
                  core::Json{{"tx_id", txId},
                             {"verdict", verdict.match ? "match" : "mismatch"}});
    return verdict;
}

}
