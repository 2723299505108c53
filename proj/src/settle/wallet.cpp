// Copyright 2026 vtp developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#include "vtp/settle/wallet.hpp"
#include "vtp/core/errors.hpp"

namespace vtp::settle
{

std::string
WalletStore::createWallet(std::string const& walletRef,
                          std::string const& railId)
{
    if (auto it = mAccounts.find(walletRef); it != mAccounts.end())
    {
        if (it->second.railId != railId)
            fail(Errc::ConfigInvalid,
                 "wallet " + walletRef + " already bound to " +
                     it->second.railId);
        return it->second.address;
    }
    if (!mRails.has(railId))
        fail(Errc::UnknownRail, railId);

    Account acct;
    acct.walletRef = walletRef;
    acct.railId = railId;
    acct.keys = core::keygen(mRng);
    acct.address = addressOfPublicKey(acct.keys.publicKey);
    auto address = acct.address;
    mAccounts.emplace(walletRef, std::move(acct));
    return address;
}

bool
WalletStore::has(std::string const& walletRef) const
{
    return mAccounts.contains(walletRef);
}

WalletStore::Account const&
WalletStore::account(std::string const& walletRef) const
{
    auto it = mAccounts.find(walletRef);
    if (it == mAccounts.end())
        fail(Errc::UnknownWallet, walletRef);
    return it->second;
}

std::string const&
WalletStore::addressOf(std::string const& walletRef) const
{
    return account(walletRef).address;
}

std::string const&
WalletStore::railOf(std::string const& walletRef) const
{
    return account(walletRef).railId;
}

SignedTransaction
WalletStore::signTransfer(std::string const& walletRef,
                          std::string const& toAddress, std::uint64_t amount,
                          bool revertFlag)
{
    return signTransferMulti(walletRef, {TxOutput{toAddress, amount}},
                             revertFlag);
}

SignedTransaction
WalletStore::signTransferMulti(std::string const& walletRef,
                               std::vector<TxOutput> outputs, bool revertFlag)
{
    auto const& acct = account(walletRef);
    auto const& chain = mRails.rail(acct.railId);

    Transaction tx;
    tx.chainId = chain.config().chainId;
    tx.from = acct.address;
    tx.nonce = chain.nextNonce(acct.address);
    tx.outputs = std::move(outputs);
    tx.fee = chain.config().flatFee.minorUnits;
    tx.revertFlag = revertFlag;
    return signTransaction(std::move(tx), acct.keys);
}

void
WalletStore::collectSecretMaterial(std::vector<core::Bytes>& out) const
{
    for (auto const& [ref, acct] : mAccounts)
        out.push_back(acct.keys.secretKey);
}

core::Json
WalletStore::toJson() const
{
    auto arr = core::Json::array();
    for (auto const& [ref, acct] : mAccounts)
        arr.push_back(core::Json{{"wallet_ref", acct.walletRef},
                                 {"rail_id", acct.railId},
                                 {"address", acct.address}});
    return arr;
}

}
