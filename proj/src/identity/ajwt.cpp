// Copyright 2026 vtp developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#include "vtp/identity/ajwt.hpp"
#include "vtp/core/base64url.hpp"
#include "vtp/core/errors.hpp"
#include "vtp/core/sha256.hpp"

#include <set>

namespace vtp::identity
{

namespace
{
bool
knownScope(std::string const& scope)
{
    return scope == "payment:escrow" || scope == "task:execute" ||
           scope == "credentials:read";
}
}

std::string
AJwt::signingInput() const
{
    return core::canonicalSerialize(header) + "." +
           core::canonicalSerialize(claims);
}

std::string
AJwt::encode() const
{
    auto headerBytes = core::to_bytes(core::canonicalSerialize(header));
    auto claimsBytes = core::to_bytes(core::canonicalSerialize(claims));
    return core::base64urlEncode(headerBytes) + "." +
           core::base64urlEncode(claimsBytes) + "." +
           core::base64urlEncode(signature);
}

AJwt
AJwt::decode(std::string const& token)
{
    auto first = token.find('.');
    auto second = token.rfind('.');
    if (first == std::string::npos || second == first)
        fail(Errc::BadToken, "token must have three segments");
    try
    {
        AJwt t;
        t.header = core::Json::parse(core::to_string(
            core::base64urlDecode(token.substr(0, first))));
        t.claims = core::Json::parse(core::to_string(core::base64urlDecode(
            token.substr(first + 1, second - first - 1))));
        t.signature = core::base64urlDecode(token.substr(second + 1));
        return t;
    }
    catch (Error const&)
    {
        fail(Errc::BadToken, "undecodable token segment");
    }
    catch (core::Json::exception const&)
    {
        fail(Errc::BadToken, "token segment is not valid JSON");
    }
}

core::Digest
AJwt::integrityHash() const
{
    return core::sha256(std::string_view(encode()));
}

core::Bytes
popMessage(std::string const& jti, core::Digest const& requestDigest)
{
    core::Bytes msg = core::to_bytes(jti);
    msg.insert(msg.end(), requestDigest.bytes.begin(),
               requestDigest.bytes.end());
    return msg;
}

AJwt
AuthorizationService::issueAjwt(UserApproval const& approval,
                                std::string const& agentId,
                                core::Bytes const& popPk,
                                PaymentMandateLookup const* mandates)
{
    if (!mRegistry.has(agentId))
        fail(Errc::UnknownAgent, agentId);
    if (!mRegistry.verifyManifest(agentId))
        fail(Errc::ManifestTampered, agentId);
    if (!knownScope(approval.scope))
        fail(Errc::InvalidScope, approval.scope);
    if (approval.scope == "payment:escrow" &&
        (mandates == nullptr ||
         !mandates->paymentMandateExists(approval.mandateHash)))
        fail(Errc::ScopeMandateMismatch,
             "no stored Payment Mandate with hash " +
                 approval.mandateHash.hex());
    if (approval.ttlTicks == 0)
        fail(Errc::ConfigInvalid, "ttl_ticks must be positive");

    auto chain = approval.delegationChain;
    if (chain.empty())
        chain.push_back(agentId);
    std::set<std::string> seen(chain.begin(), chain.end());
    if (seen.size() != chain.size())
        fail(Errc::ConfigInvalid, "delegation_chain must be acyclic");

    std::string jti;
    do
    {
        jti = core::hexEncode(mRng.bytes(16));
    } while (mIssuedJtis.contains(jti));
    mIssuedJtis.insert(jti);

    AJwt token;
    token.header = core::Json{{"alg", "EdDSA"}, {"typ", "A-JWT"}};
    token.claims = core::Json{
        {"iss", "authorization-service"},
        {"sub", agentId},
        {"aud", "vtp"},
        {"scope", approval.scope},
        {"nbf", mClock.tick},
        {"exp", mClock.tick + approval.ttlTicks},
        {"jti", jti},
        {"cnf", core::hexEncode(popPk)},
        {"agent_checksum", agentChecksum(mRegistry.manifest(agentId)).hex()},
        {"delegation_chain", chain},
        {"mandate_hash", approval.mandateHash.hex()}};
    token.signature =
        core::sign(mKeys.secretKey, core::view(token.signingInput()));

    mAudit.append("ajwt_issued", "", "",
                  core::Json{{"jti", jti},
                             {"sub", agentId},
                             {"scope", approval.scope},
                             {"mandate_hash", approval.mandateHash.hex()}});
    return token;
}

core::Json
AuthorizationService::verifyAjwt(AJwt const& token, PopProof const& pop,
                                 core::Tick now)
{
    core::Tick nbf, exp;
    std::string sub, jti, cnfHex, checksumHex;
    try
    {
        nbf = token.claims.at("nbf").get<core::Tick>();
        exp = token.claims.at("exp").get<core::Tick>();
        sub = token.claims.at("sub").get<std::string>();
        jti = token.claims.at("jti").get<std::string>();
        cnfHex = token.claims.at("cnf").get<std::string>();
        checksumHex = token.claims.at("agent_checksum").get<std::string>();
    }
    catch (core::Json::exception const&)
    {
        fail(Errc::BadToken, "missing claim");
    }

    if (!core::verify(mKeys.publicKey, core::view(token.signingInput()),
                      token.signature))
        fail(Errc::BadIssuerSig, jti);
    if (now < nbf)
        fail(Errc::NotYetValid, jti);
    if (now >= exp)
        fail(Errc::Expired, jti);

    // re-verified at every use, not only at issuance
    if (!mRegistry.has(sub))
        fail(Errc::ChecksumDrift, "subject agent no longer registered");
    auto live = agentChecksum(mRegistry.manifest(sub));
    if (live.hex() != checksumHex)
        fail(Errc::ChecksumDrift, sub);

    if (pop.jti != jti)
        fail(Errc::BadPoP, "proof jti does not match token");
    if (!core::verify(core::hexDecode(cnfHex),
                      popMessage(jti, pop.requestDigest), pop.signature))
        fail(Errc::BadPoP, jti);

    core::Bytes replayKey = core::to_bytes(jti);
    replayKey.insert(replayKey.end(), pop.requestDigest.bytes.begin(),
                     pop.requestDigest.bytes.end());
    auto consumed = core::sha256(core::BytesView(replayKey));
    if (mConsumed.contains(consumed))
        fail(Errc::Replayed, jti);
    mConsumed.insert(consumed);

    return token.claims;
}

}
