// Copyright 2026 vtp developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include "vtp/core/rng.hpp"
#include "vtp/settle/chain.hpp"

#include <map>
#include <string>
#include <vector>

namespace vtp::settle
{

// Settlement-plane custody. Secret keys live here and only here; nothing
// in this class serializes them, and signing happens only through
// signTransfer. Wallet refs bind an identity to one rail_id.
class WalletStore
{
  public:
    WalletStore(RailHub& rails, core::Rng& rng) : mRails(rails), mRng(rng)
    {
    }

    // Creates (or returns) the wallet for walletRef on railId.
    std::string createWallet(std::string const& walletRef,
                             std::string const& railId);

    bool has(std::string const& walletRef) const;
    std::string const& addressOf(std::string const& walletRef) const;
    std::string const& railOf(std::string const& walletRef) const;

    // Builds and signs a transfer on the wallet's bound rail. chain_id
    // and flat fee come from that rail; the nonce from its ledger.
    SignedTransaction signTransfer(std::string const& walletRef,
                                   std::string const& toAddress,
                                   std::uint64_t amount, bool revertFlag);

    // Multi-output variant used by batch settlement.
    SignedTransaction signTransferMulti(std::string const& walletRef,
                                        std::vector<TxOutput> outputs,
                                        bool revertFlag);

    // Ground truth for the key-isolation byte-scan.
    void collectSecretMaterial(std::vector<core::Bytes>& out) const;

    // Public wallet directory (ref, rail, address); no key material.
    core::Json toJson() const;

  private:
    struct Account
    {
        std::string walletRef;
        std::string railId;
        std::string address;
        core::KeyPair keys;
    };

    Account const& account(std::string const& walletRef) const;

    RailHub& mRails;
    core::Rng& mRng;
    std::map<std::string, Account> mAccounts;
};

}
