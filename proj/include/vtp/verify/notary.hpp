// Copyright 2026 vtp developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include "vtp/core/rng.hpp"
#include "vtp/core/signature.hpp"
#include "vtp/identity/registry.hpp"
#include "vtp/verify/evidence.hpp"

#include <map>
#include <string>
#include <vector>

namespace vtp::verify
{

// Signing witnesses over request/response commitments; the co-signing
// stand-in for an MPC-TLS notary.
class NotaryPool
{
  public:
    NotaryPool(core::Rng& rng, std::uint32_t count);

    // Receipt over one exchange, signed by every listed notary.
    NotaryReceipt notarize(ReceiptKind kind, std::string const& sessionId,
                           std::string const& workflowId,
                           core::BytesView requestBytes,
                           core::BytesView responseBytes,
                           std::vector<std::string> const& notaryIds,
                           core::Tick tick) const; // NoNotary if empty

    std::vector<std::string> firstIds(std::uint32_t count) const;
    std::map<std::string, core::Bytes> publicKeys() const;
    void collectSecretMaterial(std::vector<core::Bytes>& out) const;

  private:
    struct Notary
    {
        std::string id;
        core::KeyPair keys;
    };
    std::vector<Notary> mNotaries;
};

// Signed measurement stub standing in for hardware attestation.
class AttestationAuthority
{
  public:
    AttestationAuthority(core::Rng& rng, identity::Registry const& registry)
        : mKeys(core::keygen(rng)), mRegistry(registry)
    {
    }

    TeeAttestation attest(std::string const& agentId,
                          core::BytesView codeBytes,
                          core::Tick tick) const; // UnknownAgent

    bool verifyReport(TeeAttestation const& report) const;

    core::Bytes const&
    publicKey() const
    {
        return mKeys.publicKey;
    }

    void
    collectSecretMaterial(std::vector<core::Bytes>& out) const
    {
        out.push_back(mKeys.secretKey);
    }

  private:
    core::KeyPair mKeys;
    identity::Registry const& mRegistry;
};

}
