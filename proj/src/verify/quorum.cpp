// Copyright 2026 vtp developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#include "vtp/verify/quorum.hpp"
#include "vtp/core/errors.hpp"
#include "vtp/core/sha256.hpp"

namespace vtp::verify
{

ValidatorSet::ValidatorSet(core::Rng& rng, std::uint32_t f) : mF(f)
{
    if (f == 0)
        fail(Errc::ConfigInvalid, "f must be positive");
    std::uint32_t const n = 3 * f + 1;
    for (std::uint32_t i = 1; i <= n; ++i)
    {
        char buf[24];
        std::snprintf(buf, sizeof(buf), "validator-%02u", i);
        mValidators.push_back(Validator{buf, core::keygen(rng)});
    }
}

std::optional<QuorumCertificate>
ValidatorSet::validate(core::Digest const& subjectDigest,
                       std::set<std::uint32_t> const& byzantineMask) const
{
    QuorumCertificate cert;
    cert.subjectDigest = subjectDigest;
    cert.nValidators = n();
    cert.fTolerated = mF;

    // corrupted digest a byzantine voter signs instead
    core::Bytes corrupted(subjectDigest.bytes.begin(),
                          subjectDigest.bytes.end());
    corrupted.push_back(0xff);
    auto wrongDigest = core::sha256(core::BytesView(corrupted));

    for (std::uint32_t i = 0; i < mValidators.size(); ++i)
    {
        auto const& v = mValidators[i];
        if (byzantineMask.contains(i))
        {
            if (i % 2 == 1)
                continue; // abstains
            // equivocating vote; never matches the honest subject
            (void)core::sign(v.keys.secretKey, wrongDigest.view());
            continue;
        }
        cert.votes.push_back(QuorumVote{
            v.id, core::sign(v.keys.secretKey, subjectDigest.view())});
    }

    if (cert.votes.size() < 2 * mF + 1)
        return std::nullopt;
    return cert;
}

std::map<std::string, core::Bytes>
ValidatorSet::publicKeys() const
{
    std::map<std::string, core::Bytes> keys;
    for (auto const& v : mValidators)
        keys[v.id] = v.keys.publicKey;
    return keys;
}

void
ValidatorSet::collectSecretMaterial(std::vector<core::Bytes>& out) const
{
    for (auto const& v : mValidators)
        out.push_back(v.keys.secretKey);
}

bool
verifyCertificate(QuorumCertificate const& cert,
                  std::map<std::string, core::Bytes> const& validatorKeys)
{
    std::set<std::string> distinct;
    for (auto const& vote : cert.votes)
    {
        auto it = validatorKeys.find(vote.validatorId);
        if (it == validatorKeys.end())
            return false;
        if (!core::verify(it->second, cert.subjectDigest.view(),
                          vote.signature))
            return false;
        if (!distinct.insert(vote.validatorId).second)
            return false;
    }
    return distinct.size() >= 2 * cert.fTolerated + 1;
}

}
