// Copyright 2026 vtp developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#include "vtp/settle/chain.hpp"
#include "vtp/core/errors.hpp"
#include "vtp/core/sha256.hpp"

#include <algorithm>

namespace vtp::settle
{

core::Json
RailConfig::toJson() const
{
    return core::Json{
        {"rail_id", railId},
        {"chain_id", chainId},
        {"finality_confirmations", finalityConfirmations},
        {"extended_finality_confirmations", extendedFinalityConfirmations},
        {"flat_fee", flatFee.toJson()}};
}

RailConfig
RailConfig::fromJson(core::Json const& j)
{
    RailConfig c;
    c.railId = j.at("rail_id").get<std::string>();
    core::RailId::parse(c.railId); // shape check
    c.chainId = j.at("chain_id").get<std::uint64_t>();
    c.finalityConfirmations =
        j.at("finality_confirmations").get<std::uint32_t>();
    c.extendedFinalityConfirmations =
        j.at("extended_finality_confirmations").get<std::uint32_t>();
    if (c.finalityConfirmations == 0 ||
        c.extendedFinalityConfirmations < c.finalityConfirmations)
        fail(Errc::ConfigInvalid,
             "extended finality must be >= standard finality (>0)");
    c.flatFee = core::Amount::fromJson(j.at("flat_fee"));
    return c;
}

core::Json
Transaction::toJson() const
{
    auto outs = core::Json::array();
    for (auto const& o : outputs)
        outs.push_back(core::Json{{"to", o.to}, {"amount", o.amount}});
    return core::Json{{"chain_id", chainId}, {"from", from},
                      {"nonce", nonce},      {"outputs", std::move(outs)},
                      {"fee", fee},          {"revert", revertFlag}};
}

std::uint64_t
Transaction::totalOut() const
{
    std::uint64_t total = 0;
    for (auto const& o : outputs)
    {
        if (__builtin_add_overflow(total, o.amount, &total))
            fail(Errc::Overflow, "transaction output overflow");
    }
    return total;
}

std::string
SignedTransaction::txId() const
{
    return core::hashOfJson(tx.toJson()).hex();
}

SignedTransaction
signTransaction(Transaction tx, core::KeyPair const& keys)
{
    SignedTransaction stx;
    stx.signature = core::sign(
        keys.secretKey, core::view(core::canonicalSerialize(tx.toJson())));
    stx.fromPk = keys.publicKey;
    stx.tx = std::move(tx);
    return stx;
}

std::string
addressOfPublicKey(core::BytesView publicKey)
{
    auto digest = core::sha256(publicKey);
    return "0x" + core::hexEncode(
                      core::BytesView(digest.bytes.data(), 20));
}

void
SimChain::fund(std::string const& address, std::uint64_t amount)
{
    mBalances[address] += amount;
    mMinted += amount;
}

std::string
SimChain::submit(SignedTransaction stx)
{
    auto id = stx.txId();
    mPending.push_back(std::move(stx));
    return id;
}

bool
SimChain::applyTx(SignedTransaction const& stx, std::uint64_t height,
                  std::string& reason)
{
    auto const& tx = stx.tx;
    if (tx.chainId != mConfig.chainId)
    {
        reason = "chain_id_mismatch";
        return false;
    }
    if (!core::verify(stx.fromPk,
                      core::view(core::canonicalSerialize(tx.toJson())),
                      stx.signature))
    {
        reason = "bad_signature";
        return false;
    }
    if (addressOfPublicKey(stx.fromPk) != tx.from)
    {
        reason = "sender_key_mismatch";
        return false;
    }
    if (mNonces[tx.from] != tx.nonce)
    {
        reason = "bad_nonce";
        return false;
    }
    std::uint64_t const needed =
        tx.revertFlag ? tx.fee : tx.totalOut() + tx.fee;
    if (mBalances[tx.from] < needed)
    {
        reason = "insufficient_balance";
        return false;
    }

    mNonces[tx.from] += 1;
    mBalances[tx.from] -= tx.fee;
    mFees += tx.fee;
    if (!tx.revertFlag)
    {
        mBalances[tx.from] -= tx.totalOut();
        for (auto const& o : tx.outputs)
            mBalances[o.to] += o.amount;
    }
    (void)height;
    return true;
}

std::uint64_t
SimChain::tick(std::uint64_t n)
{
    for (std::uint64_t i = 0; i < n; ++i)
    {
        std::uint64_t const newHeight = mBlocks.size() + 1;
        std::vector<std::string> blockTxs;
        auto pending = std::move(mPending);
        mPending.clear();
        for (auto& stx : pending)
        {
            std::string reason;
            auto id = stx.txId();
            bool const reverted = stx.tx.revertFlag;
            if (applyTx(stx, newHeight, reason))
            {
                blockTxs.push_back(id);
                mIncluded.push_back(
                    Included{std::move(stx), id, newHeight, reverted});
            }
            else
            {
                mRejected.push_back(RejectedTx{id, stx.tx.from, reason});
            }
        }
        mBlocks.push_back(std::move(blockTxs));
        if (!conservationHolds())
            fail(Errc::Overflow,
                 "supply conservation violated at height " +
                     std::to_string(mBlocks.size()));
    }
    return mBlocks.size();
}

std::uint64_t
SimChain::balance(std::string const& address) const
{
    auto it = mBalances.find(address);
    return it == mBalances.end() ? 0 : it->second;
}

std::uint64_t
SimChain::nextNonce(std::string const& address) const
{
    auto it = mNonces.find(address);
    std::uint64_t next = it == mNonces.end() ? 0 : it->second;
    for (auto const& p : mPending)
        if (p.tx.from == address)
            ++next;
    return next;
}

bool
SimChain::conservationHolds() const
{
    std::uint64_t total = mFees;
    for (auto const& [addr, bal] : mBalances)
        total += bal;
    return total == mMinted;
}

std::vector<TxView>
SimChain::lookupTx(std::string const& txId) const
{
    std::vector<TxView> views;
    for (auto const& inc : mIncluded)
    {
        if (inc.txId != txId)
            continue;
        std::uint64_t const confirmations = height() - inc.blockHeight + 1;
        for (auto const& o : inc.stx.tx.outputs)
            views.push_back(TxView{mConfig.railId, inc.txId, inc.stx.tx.from,
                                   o.to, o.amount, inc.stx.tx.fee,
                                   inc.reverted ? "reverted" : "success",
                                   confirmations, inc.blockHeight});
        if (inc.stx.tx.outputs.empty())
            views.push_back(TxView{mConfig.railId, inc.txId, inc.stx.tx.from,
                                   "", 0, inc.stx.tx.fee,
                                   inc.reverted ? "reverted" : "success",
                                   confirmations, inc.blockHeight});
    }
    return views;
}

std::optional<SignedTransaction>
SimChain::includedTransaction(std::string const& txId) const
{
    for (auto const& inc : mIncluded)
        if (inc.txId == txId)
            return inc.stx;
    return std::nullopt;
}

std::vector<InboundTransfer>
SimChain::inboundTransfers(std::string const& address) const
{
    std::vector<InboundTransfer> found;
    for (auto const& inc : mIncluded)
    {
        for (auto const& o : inc.stx.tx.outputs)
        {
            if (o.to != address)
                continue;
            found.push_back(InboundTransfer{
                inc.txId, inc.stx.tx.from, o.amount,
                height() - inc.blockHeight + 1, inc.blockHeight,
                inc.reverted});
        }
    }
    return found;
}

std::vector<TxView>
SimChain::allTxViews() const
{
    std::vector<TxView> views;
    for (auto const& inc : mIncluded)
    {
        std::uint64_t const confirmations = height() - inc.blockHeight + 1;
        for (auto const& o : inc.stx.tx.outputs)
            views.push_back(TxView{mConfig.railId, inc.txId, inc.stx.tx.from,
                                   o.to, o.amount, inc.stx.tx.fee,
                                   inc.reverted ? "reverted" : "success",
                                   confirmations, inc.blockHeight});
    }
    return views;
}

core::Json
TxView::toJson() const
{
    return core::Json{{"rail_id", railId},
                      {"tx_id", txId},
                      {"from", from},
                      {"to", to},
                      {"amount", amount},
                      {"fee", fee},
                      {"status", status},
                      {"confirmations", confirmations},
                      {"block_height", blockHeight}};
}

core::Json
SimChain::toJson() const
{
    auto txs = core::Json::array();
    for (auto const& v : allTxViews())
        txs.push_back(v.toJson());
    auto rejects = core::Json::array();
    for (auto const& r : mRejected)
        rejects.push_back(core::Json{
            {"tx_id", r.txId}, {"from", r.from}, {"reason", r.reason}});
    return core::Json{{"config", mConfig.toJson()},
                      {"height", height()},
                      {"balances", mBalances},
                      {"fees_collected", mFees},
                      {"minted", mMinted},
                      {"transactions", std::move(txs)},
                      {"rejected", std::move(rejects)}};
}

SimChain&
RailHub::addRail(RailConfig config)
{
    if (mRails.contains(config.railId))
        fail(Errc::ConfigInvalid, "duplicate rail: " + config.railId);
    for (auto const& [id, chain] : mRails)
        if (chain.config().chainId == config.chainId)
            fail(Errc::ConfigInvalid,
                 "chain_id already in use by " + id);
    auto railId = config.railId;
    auto [it, ok] = mRails.emplace(railId, SimChain(std::move(config)));
    return it->second;
}

SimChain&
RailHub::rail(std::string const& railId)
{
    auto it = mRails.find(railId);
    if (it == mRails.end())
        fail(Errc::UnknownRail, railId);
    return it->second;
}

SimChain const&
RailHub::rail(std::string const& railId) const
{
    auto it = mRails.find(railId);
    if (it == mRails.end())
        fail(Errc::UnknownRail, railId);
    return it->second;
}

bool
RailHub::has(std::string const& railId) const
{
    return mRails.contains(railId);
}

std::vector<std::string>
RailHub::railIds() const
{
    std::vector<std::string> ids;
    for (auto const& [id, chain] : mRails)
        ids.push_back(id);
    return ids;
}

}
