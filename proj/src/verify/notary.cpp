// Copyright 2026 vtp developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#include "vtp/verify/notary.hpp"
#include "vtp/core/errors.hpp"
#include "vtp/core/sha256.hpp"

namespace vtp::verify
{

NotaryPool::NotaryPool(core::Rng& rng, std::uint32_t count)
{
    for (std::uint32_t i = 1; i <= count; ++i)
    {
        char buf[24];
        std::snprintf(buf, sizeof(buf), "notary-%02u", i);
        mNotaries.push_back(Notary{buf, core::keygen(rng)});
    }
}

NotaryReceipt
NotaryPool::notarize(ReceiptKind kind, std::string const& sessionId,
                     std::string const& workflowId,
                     core::BytesView requestBytes,
                     core::BytesView responseBytes,
                     std::vector<std::string> const& notaryIds,
                     core::Tick tick) const
{
    if (notaryIds.empty())
        fail(Errc::NoNotary, "at least one notary witness required");

    NotaryReceipt receipt;
    receipt.kind = kind;
    receipt.sessionId = sessionId;
    receipt.workflowId = workflowId;
    receipt.requestCommitment = core::sha256(requestBytes);
    receipt.responseCommitment = core::sha256(responseBytes);
    receipt.tick = tick;

    auto body = core::canonicalSerialize(receipt.bodyJson());
    for (auto const& id : notaryIds)
    {
        Notary const* notary = nullptr;
        for (auto const& n : mNotaries)
            if (n.id == id)
            {
                notary = &n;
                break;
            }
        if (notary == nullptr)
            fail(Errc::NoNotary, "unknown notary: " + id);
        receipt.witnesses.push_back(WitnessSignature{
            id, core::sign(notary->keys.secretKey, core::view(body))});
    }
    return receipt;
}

std::vector<std::string>
NotaryPool::firstIds(std::uint32_t count) const
{
    std::vector<std::string> ids;
    for (std::uint32_t i = 0; i < count && i < mNotaries.size(); ++i)
        ids.push_back(mNotaries[i].id);
    return ids;
}

std::map<std::string, core::Bytes>
NotaryPool::publicKeys() const
{
    std::map<std::string, core::Bytes> keys;
    for (auto const& n : mNotaries)
        keys[n.id] = n.keys.publicKey;
    return keys;
}

void
NotaryPool::collectSecretMaterial(std::vector<core::Bytes>& out) const
{
    for (auto const& n : mNotaries)
        out.push_back(n.keys.secretKey);
}

TeeAttestation
AttestationAuthority::attest(std::string const& agentId,
                             core::BytesView codeBytes, core::Tick tick) const
{
    if (!mRegistry.has(agentId))
        fail(Errc::UnknownAgent, agentId);
    TeeAttestation report;
    report.agentId = agentId;
    report.enclaveMeasurement = core::sha256(codeBytes);
    report.tick = tick;
    report.reportSignature =
        core::sign(mKeys.secretKey,
                   core::view(core::canonicalSerialize(report.bodyJson())));
    return report;
}

bool
AttestationAuthority::verifyReport(TeeAttestation const& report) const
{
    return core::verify(mKeys.publicKey,
                        core::view(core::canonicalSerialize(report.bodyJson())),
                        report.reportSignature);
}

}
