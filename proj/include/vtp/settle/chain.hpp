// Copyright 2026 vtp developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include "vtp/core/amount.hpp"
#include "vtp/core/canonical.hpp"
#include "vtp/core/digest.hpp"
#include "vtp/core/ids.hpp"
#include "vtp/core/signature.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace vtp::settle
{

struct RailConfig
{
    std::string railId;
    std::uint64_t chainId{0};
    std::uint32_t finalityConfirmations{3};
    std::uint32_t extendedFinalityConfirmations{12}; // Tier 3
    core::Amount flatFee{10, "USD"};

    core::Json toJson() const;
    static RailConfig fromJson(core::Json const& j);
};

struct TxOutput
{
    std::string to;
    std::uint64_t amount{0};
};

// Signing body; chain_id embeds the replay domain.
struct Transaction
{
    std::uint64_t chainId{0};
    std::string from;
    std::uint64_t nonce{0};
    std::vector<TxOutput> outputs;
    std::uint64_t fee{0};
    bool revertFlag{false};

    core::Json toJson() const;
    std::uint64_t totalOut() const;
};

struct SignedTransaction
{
    Transaction tx;
    core::Bytes fromPk;
    core::Bytes signature;

    std::string txId() const; // hash of the canonical body
};

SignedTransaction signTransaction(Transaction tx, core::KeyPair const& keys);

std::string addressOfPublicKey(core::BytesView publicKey);

// Explorer view of one transaction output.
struct TxView
{
    std::string railId;
    std::string txId;
    std::string from;
    std::string to;
    std::uint64_t amount{0};
    std::uint64_t fee{0};
    std::string status; // success | reverted
    std::uint64_t confirmations{0};
    std::uint64_t blockHeight{0};

    core::Json toJson() const;
};

struct InboundTransfer
{
    std::string txId;
    std::string from;
    std::uint64_t amount{0};
    std::uint64_t confirmations{0};
    std::uint64_t blockHeight{0};
    bool reverted{false};
};

struct RejectedTx
{
    std::string txId;
    std::string from;
    std::string reason;
};

// Deterministic single-rail ledger: pending transactions are included in
// arrival order when a block is produced; a transaction is included only
// if its signature, chain_id, nonce and balance check out. Total supply
// is conserved: sum(balances) + fees collected == minted, every block.
class SimChain
{
  public:
    explicit SimChain(RailConfig config) : mConfig(std::move(config))
    {
    }

    RailConfig const&
    config() const
    {
        return mConfig;
    }

    // Genesis allocation; counted into the conservation baseline.
    void fund(std::string const& address, std::uint64_t amount);

    std::string submit(SignedTransaction stx);

    // Produce n blocks; returns the new height.
    std::uint64_t tick(std::uint64_t n);

    std::uint64_t
    height() const
    {
        return mBlocks.size();
    }

    std::uint64_t balance(std::string const& address) const;
    std::uint64_t nextNonce(std::string const& address) const;

    std::uint64_t
    feesCollected() const
    {
        return mFees;
    }

    std::uint64_t
    minted() const
    {
        return mMinted;
    }

    bool conservationHolds() const;

    std::vector<TxView> lookupTx(std::string const& txId) const;
    std::vector<InboundTransfer>
    inboundTransfers(std::string const& address) const;

    // Raw signed form of an included transaction (replay-attack surface).
    std::optional<SignedTransaction>
    includedTransaction(std::string const& txId) const;

    std::vector<RejectedTx> const&
    rejected() const
    {
        return mRejected;
    }

    // Every included transaction, for trace scans.
    std::vector<TxView> allTxViews() const;

    core::Json toJson() const;

  private:
    struct Included
    {
        SignedTransaction stx;
        std::string txId;
        std::uint64_t blockHeight{0};
        bool reverted{false};
    };

    bool applyTx(SignedTransaction const& stx, std::uint64_t height,
                 std::string& reason);

    RailConfig mConfig;
    std::map<std::string, std::uint64_t> mBalances;
    std::map<std::string, std::uint64_t> mNonces;
    std::vector<SignedTransaction> mPending;
    std::vector<Included> mIncluded;
    std::vector<std::vector<std::string>> mBlocks; // tx ids per block
    std::vector<RejectedTx> mRejected;
    std::uint64_t mFees{0};
    std::uint64_t mMinted{0};
};

// The configured rails of a run; chain ids must be unique.
class RailHub
{
  public:
    SimChain& addRail(RailConfig config);
    SimChain& rail(std::string const& railId);              // UnknownRail
    SimChain const& rail(std::string const& railId) const;  // UnknownRail
    bool has(std::string const& railId) const;
    std::vector<std::string> railIds() const;

  private:
    std::map<std::string, SimChain> mRails;
};

}
