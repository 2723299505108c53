// Copyright 2026 vtp developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include "vtp/settle/chain.hpp"
#include "vtp/settle/escrow.hpp"
#include "vtp/settle/wallet.hpp"
#include "vtp/verify/pote.hpp"

#include <optional>
#include <string>
#include <vector>

namespace vtp::settle
{

struct DepositObservation
{
    bool seen{false};
    std::uint64_t confirmations{0};
    bool final{false};
    std::optional<std::string> depositTxId;
};

struct ReconcileVerdict
{
    bool match{false};
    std::vector<std::string> mismatchedFields;
    core::Json txRecord;
};

// Control-plane index of terminal settlement events, filled at
// reconciliation time.
struct ExplorerRecord
{
    std::string railId;
    std::string txId;
    std::string escrowId;
    std::string workflowId;
    std::string kind; // settlement | refund | batch_settlement
    std::string from;
    std::string to;
    std::uint64_t amount{0};
    std::uint64_t fee{0};
    std::string status;
    std::uint64_t confirmations{0};
    std::uint64_t blockHeight{0};
    std::string verdict; // match | mismatch(...) | ""

    core::Json toJson() const;
};

struct ExplorerFilter
{
    std::optional<std::string> railId;
    std::optional<std::string> txId;
    std::optional<std::string> escrowId;
    std::optional<std::string> workflowId;
};

class ExplorerIndex
{
  public:
    void
    index(ExplorerRecord record)
    {
        mRecords.push_back(std::move(record));
    }

    std::vector<ExplorerRecord> query(ExplorerFilter const& filter) const;
    core::Json toJson() const;

  private:
    std::vector<ExplorerRecord> mRecords;
};

struct BatchCharge
{
    std::string payeeAgentId;
    core::Amount amount;
    std::string railId;
};

struct EscrowParams
{
    core::Amount amount;
    std::string payerRef;
    std::string payeeAgentId;
    core::Tick timeoutTick{0};
    Tier tier{Tier::Tier2};
    std::string workflowId;
};

// One adapter per rail. Holds the escrow keys through the wallet store,
// observes its own ledger for deposits, and exposes settle/refund to the
// control plane. The adapter never decides to settle on its own.
class RailAdapter
{
  public:
    RailAdapter(std::string railId, RailHub& rails, WalletStore& wallets,
                EscrowTable& escrows, verify::PoTEAnchorLog const& anchors,
                verify::AuditLedger& audit, ExplorerIndex& explorer)
        : mRailId(std::move(railId))
        , mRails(rails)
        , mWallets(wallets)
        , mEscrows(escrows)
        , mAnchors(anchors)
        , mAudit(audit)
        , mExplorer(explorer)
    {
    }

    std::string const&
    railId() const
    {
        return mRailId;
    }

    // Fresh escrow address with zero balance; record starts in CREATED.
    std::string provisionEscrow(std::string const& escrowId,
                                EscrowParams const& params);

    // Scans this rail's own ledger; never trusts caller-supplied tx ids.
    // Feeds DepositObserved / FinalityReached edges into the machine.
    DepositObservation observeDeposit(std::string const& escrowId);

    // Cross-check of a claimed deposit tx id against the ledger.
    bool checkClaimedDeposit(std::string const& escrowId,
                             std::string const& claimedTxId) const;

    // Control-plane settlement instruction. UnknownEscrow -> PoTEMissing
    // -> WrongState precedence.
    std::string settle(std::string const& escrowId);

    std::string refund(std::string const& escrowId,
                       std::string const& reason);

    // One transaction moving every Tier-1 charge; per-payee outputs equal
    // per-payee sums. MixedTier / MixedRail reject the batch.
    std::string batchSettle(std::string const& batchEscrowId,
                            std::vector<BatchCharge> const& charges);

    // After finality, feeds SettlementConfirmed / RefundConfirmed.
    void pollOutcome(std::string const& escrowId);

    ReconcileVerdict reconcile(std::string const& escrowId);

    std::string payeeWalletRef(std::string const& agentId) const;
    std::string escrowWalletRef(std::string const& escrowId) const;

  private:
    SimChain&
    chain()
    {
        return mRails.rail(mRailId);
    }

    SimChain const&
    chain() const
    {
        return mRails.rail(mRailId);
    }

    std::string mRailId;
    RailHub& mRails;
    WalletStore& mWallets;
    EscrowTable& mEscrows;
    verify::PoTEAnchorLog const& mAnchors;
    verify::AuditLedger& mAudit;
    ExplorerIndex& mExplorer;
};

}
