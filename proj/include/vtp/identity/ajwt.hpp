// Copyright 2026 vtp developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include "vtp/core/rng.hpp"
#include "vtp/core/signature.hpp"
#include "vtp/identity/registry.hpp"
#include "vtp/verify/audit.hpp"

#include <set>
#include <string>
#include <vector>

namespace vtp::identity
{

// Intent-scoped agent token. External form is three unpadded base64url
// segments (canonical-JSON header, canonical-JSON claims, signature)
// joined by '.'.
struct AJwt
{
    core::Json header;
    core::Json claims;
    core::Bytes signature;

    std::string signingInput() const;
    std::string encode() const;
    static AJwt decode(std::string const& token); // throws BadToken

    // Hash of the external form; what PoTE bundles embed.
    core::Digest integrityHash() const;
};

struct UserApproval
{
    std::string userId;
    std::string scope; // payment:escrow | task:execute | credentials:read
    core::Digest mandateHash;
    core::Tick ttlTicks{100};
    std::vector<std::string> delegationChain; // defaults to [agent_id]
};

// Holder proof: a signature under the token's cnf key over
// (jti || request_digest). One (jti, request_digest) pair is accepted
// exactly once.
struct PopProof
{
    std::string jti;
    core::Digest requestDigest;
    core::Bytes signature;
};

core::Bytes popMessage(std::string const& jti,
                       core::Digest const& requestDigest);

// How the authorization service checks a payment-scope token against the
// stored Payment Mandate; orchestration owns the mandate store.
class PaymentMandateLookup
{
  public:
    virtual ~PaymentMandateLookup() = default;
    virtual bool paymentMandateExists(core::Digest const& hash) const = 0;
};

class AuthorizationService
{
  public:
    AuthorizationService(Registry const& registry, verify::AuditLedger& audit,
                         core::Clock const& clock, core::Rng& rng)
        : mRegistry(registry)
        , mAudit(audit)
        , mClock(clock)
        , mKeys(core::keygen(rng))
        , mRng(rng)
    {
    }

    AJwt issueAjwt(UserApproval const& approval, std::string const& agentId,
                   core::Bytes const& popPk,
                   PaymentMandateLookup const* mandates);

    // Returns the claims on success; consumes (jti, request_digest).
    core::Json verifyAjwt(AJwt const& token, PopProof const& pop,
                          core::Tick now);

    core::Bytes const&
    issuerPublicKey() const
    {
        return mKeys.publicKey;
    }

    // Ground truth for the key-isolation byte-scan; test/attack support
    // only, never serialized.
    void
    collectSecretMaterial(std::vector<core::Bytes>& out) const
    {
        out.push_back(mKeys.secretKey);
    }

  private:
    Registry const& mRegistry;
    verify::AuditLedger& mAudit;
    core::Clock const& mClock;
    core::KeyPair mKeys;
    core::Rng& mRng;
    std::set<std::string> mIssuedJtis;
    std::set<core::Digest> mConsumed;
};

}
