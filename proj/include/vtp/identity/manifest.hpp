// Copyright 2026 vtp developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include "vtp/core/amount.hpp"
#include "vtp/core/canonical.hpp"
#include "vtp/core/digest.hpp"
#include "vtp/core/ids.hpp"

#include <string>
#include <vector>

namespace vtp::identity
{

// Off-chain agent card. Success rate is basis points (0..10000) so the
// record stays inside the canonical integer-only profile.
struct AgentManifest
{
    std::string agentId;
    std::string domainName;
    core::Bytes ownerPk;
    std::vector<std::string> capabilities;
    std::string endpointRef;
    core::Amount declaredCost;
    std::uint32_t declaredSuccessRateBp{0};
    std::string systemPrompt;
    std::vector<std::string> toolConfig;
    std::string version;

    core::Json toJson() const;
    static AgentManifest fromJson(core::Json const& j);

    bool hasCapability(std::string const& capability) const;
};

// Commitment anchored on-chain: hash of the full canonical manifest.
core::Digest manifestCommitment(AgentManifest const& m);

// Live identity checksum over exactly {system_prompt, tool_config,
// version}; metadata edits (cost, capabilities) must not invalidate
// outstanding tokens.
core::Digest agentChecksum(AgentManifest const& m);

struct OnChainAnchor
{
    std::string agentId;
    core::Bytes ownerRef;
    core::Digest manifestCommitment;
    core::Tick anchoredAt{0};

    core::Json toJson() const;
};

}
