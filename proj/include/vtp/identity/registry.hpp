// Copyright 2026 vtp developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include "vtp/identity/manifest.hpp"
#include "vtp/verify/audit.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace vtp::identity
{

// Off-chain registry + naming service + append-only anchor log (the local
// stand-in for the chain-side registry). Reads are safe concurrently;
// mutations are serialized by the owning runner.
class Registry
{
  public:
    Registry(verify::AuditLedger& audit, core::Clock const& clock)
        : mAudit(audit), mClock(clock)
    {
    }

    // Fresh registration; agent_id and domain_name must be unused.
    OnChainAnchor registerAgent(AgentManifest manifest);

    // Re-registration of an existing agent: stores the new manifest and
    // appends a new anchor (anchors never mutate).
    OnChainAnchor updateAgent(AgentManifest manifest);

    std::string resolveName(std::string const& domainName) const;

    // True iff the stored manifest still hashes to the latest anchor.
    bool verifyManifest(std::string const& agentId) const;

    bool has(std::string const& agentId) const;
    AgentManifest const& manifest(std::string const& agentId) const;

    // Out-of-band mutation hook: bypasses the register flow on purpose,
    // modelling off-chain tampering. Anchors are left untouched.
    AgentManifest& mutableManifest(std::string const& agentId);

    OnChainAnchor const& latestAnchor(std::string const& agentId) const;
    std::vector<OnChainAnchor> const&
    anchorLog() const
    {
        return mAnchors;
    }

    std::vector<std::string> agentIds() const;

    void exportAnchorsJsonl(std::ostream& out) const;

    // Public control-plane state; never contains key material beyond
    // public keys.
    core::Json toJson() const;

  private:
    OnChainAnchor appendAnchor(AgentManifest const& m);

    verify::AuditLedger& mAudit;
    core::Clock const& mClock;
    std::map<std::string, AgentManifest> mManifests;
    std::map<std::string, std::string> mNames; // domain -> agent_id
    std::vector<OnChainAnchor> mAnchors;
};

}
