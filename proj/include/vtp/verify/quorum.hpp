// Copyright 2026 vtp developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include "vtp/core/rng.hpp"
#include "vtp/core/signature.hpp"
#include "vtp/verify/evidence.hpp"

#include <optional>
#include <set>

namespace vtp::verify
{

// In-process BFT validator set, n = 3f+1. Byzantine behaviour is masked
// in: masked validators vote for a corrupted digest (even index) or
// abstain (odd index). A certificate exists iff matching honest votes
// reach the 2f+1 quorum.
class ValidatorSet
{
  public:
    ValidatorSet(core::Rng& rng, std::uint32_t f);

    // NoQuorum is a value outcome, not an exception.
    std::optional<QuorumCertificate>
    validate(core::Digest const& subjectDigest,
             std::set<std::uint32_t> const& byzantineMask) const;

    std::uint32_t
    n() const
    {
        return static_cast<std::uint32_t>(mValidators.size());
    }

    std::uint32_t
    f() const
    {
        return mF;
    }

    std::map<std::string, core::Bytes> publicKeys() const;
    void collectSecretMaterial(std::vector<core::Bytes>& out) const;

  private:
    struct Validator
    {
        std::string id;
        core::KeyPair keys;
    };
    std::uint32_t mF;
    std::vector<Validator> mValidators;
};

// Signature-level certificate check against trusted validator keys.
bool verifyCertificate(QuorumCertificate const& cert,
                       std::map<std::string, core::Bytes> const& validatorKeys);

}
