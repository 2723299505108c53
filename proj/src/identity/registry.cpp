// Copyright 2026 vtp developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#include "vtp/identity/registry.hpp"
#include "vtp/core/errors.hpp"

#include <algorithm>
#include <ostream>

namespace vtp::identity
{

core::Json
AgentManifest::toJson() const
{
    return core::Json{{"agent_id", agentId},
                      {"domain_name", domainName},
                      {"owner_pk", core::hexEncode(ownerPk)},
                      {"capabilities", capabilities},
                      {"endpoint_ref", endpointRef},
                      {"declared_cost", declaredCost.toJson()},
                      {"declared_success_rate_bp", declaredSuccessRateBp},
                      {"system_prompt", systemPrompt},
                      {"tool_config", toolConfig},
                      {"version", version}};
}

AgentManifest
AgentManifest::fromJson(core::Json const& j)
{
    AgentManifest m;
    m.agentId = j.at("agent_id").get<std::string>();
    m.domainName = j.at("domain_name").get<std::string>();
    m.ownerPk = core::hexDecode(j.at("owner_pk").get<std::string>());
    m.capabilities = j.at("capabilities").get<std::vector<std::string>>();
    m.endpointRef = j.at("endpoint_ref").get<std::string>();
    m.declaredCost = core::Amount::fromJson(j.at("declared_cost"));
    m.declaredSuccessRateBp =
        j.at("declared_success_rate_bp").get<std::uint32_t>();
    if (m.declaredSuccessRateBp > 10000)
        fail(Errc::ConfigInvalid, "declared_success_rate_bp > 10000");
    m.systemPrompt = j.at("system_prompt").get<std::string>();
    m.toolConfig = j.at("tool_config").get<std::vector<std::string>>();
    m.version = j.at("version").get<std::string>();
    return m;
}

bool
AgentManifest::hasCapability(std::string const& capability) const
{
    return std::find(capabilities.begin(), capabilities.end(), capability) !=
           capabilities.end();
}

core::Digest
manifestCommitment(AgentManifest const& m)
{
    return core::hashOfJson(m.toJson());
}

core::Digest
agentChecksum(AgentManifest const& m)
{
    return core::hashOfJson(core::Json{{"system_prompt", m.systemPrompt},
                                       {"tool_config", m.toolConfig},
                                       {"version", m.version}});
}

core::Json
OnChainAnchor::toJson() const
{
    return core::Json{{"agent_id", agentId},
                      {"owner_ref", core::hexEncode(ownerRef)},
                      {"manifest_commitment", manifestCommitment.hex()},
                      {"anchored_at", anchoredAt}};
}

OnChainAnchor
Registry::appendAnchor(AgentManifest const& m)
{
    OnChainAnchor anchor{m.agentId, m.ownerPk, manifestCommitment(m),
                         mClock.tick};
    mAnchors.push_back(anchor);
    return anchor;
}

OnChainAnchor
Registry::registerAgent(AgentManifest manifest)
{
    if (mManifests.contains(manifest.agentId))
        fail(Errc::DuplicateAgentId, manifest.agentId);
    if (mNames.contains(manifest.domainName))
        fail(Errc::DuplicateDomainName, manifest.domainName);
    if (manifest.declaredSuccessRateBp > 10000)
        fail(Errc::ConfigInvalid, "declared_success_rate_bp > 10000");

    mNames[manifest.domainName] = manifest.agentId;
    auto anchor = appendAnchor(manifest);
    mAudit.append("agent_registered", "", "",
                  core::Json{{"agent_id", manifest.agentId},
                             {"domain_name", manifest.domainName},
                             {"manifest_commitment",
                              anchor.manifestCommitment.hex()}});
    mManifests.emplace(manifest.agentId, std::move(manifest));
    return anchor;
}

OnChainAnchor
Registry::updateAgent(AgentManifest manifest)
{
    auto it = mManifests.find(manifest.agentId);
    if (it == mManifests.end())
        fail(Errc::UnknownAgent, manifest.agentId);
    if (manifest.domainName != it->second.domainName)
    {
        auto nameIt = mNames.find(manifest.domainName);
        if (nameIt != mNames.end() && nameIt->second != manifest.agentId)
            fail(Errc::DuplicateDomainName, manifest.domainName);
        mNames.erase(it->second.domainName);
        mNames[manifest.domainName] = manifest.agentId;
    }
    auto anchor = appendAnchor(manifest);
    mAudit.append("agent_updated", "", "",
                  core::Json{{"agent_id", manifest.agentId},
                             {"manifest_commitment",
                              anchor.manifestCommitment.hex()}});
    it->second = std::move(manifest);
    return anchor;
}

std::string
Registry::resolveName(std::string const& domainName) const
{
    auto it = mNames.find(domainName);
    if (it == mNames.end())
        fail(Errc::NotFound, "domain not registered: " + domainName);
    return it->second;
}

bool
Registry::verifyManifest(std::string const& agentId) const
{
    auto it = mManifests.find(agentId);
    if (it == mManifests.end())
        fail(Errc::NotFound, "agent not registered: " + agentId);
    return manifestCommitment(it->second) ==
           latestAnchor(agentId).manifestCommitment;
}

bool
Registry::has(std::string const& agentId) const
{
    return mManifests.contains(agentId);
}

AgentManifest const&
Registry::manifest(std::string const& agentId) const
{
    auto it = mManifests.find(agentId);
    if (it == mManifests.end())
        fail(Errc::UnknownAgent, agentId);
    return it->second;
}

AgentManifest&
Registry::mutableManifest(std::string const& agentId)
{
    auto it = mManifests.find(agentId);
    if (it == mManifests.end())
        fail(Errc::UnknownAgent, agentId);
    return it->second;
}

OnChainAnchor const&
Registry::latestAnchor(std::string const& agentId) const
{
    for (auto it = mAnchors.rbegin(); it != mAnchors.rend(); ++it)
        if (it->agentId == agentId)
            return *it;
    fail(Errc::NotFound, "no anchor for agent: " + agentId);
}

std::vector<std::string>
Registry::agentIds() const
{
    std::vector<std::string> ids;
    ids.reserve(mManifests.size());
    for (auto const& [id, m] : mManifests)
        ids.push_back(id);
    return ids;
}

void
Registry::exportAnchorsJsonl(std::ostream& out) const
{
    for (auto const& a : mAnchors)
        out << core::canonicalSerialize(a.toJson()) << "\n";
}

core::Json
Registry::toJson() const
{
    auto manifests = core::Json::array();
    for (auto const& [id, m] : mManifests)
        manifests.push_back(m.toJson());
    auto anchors = core::Json::array();
    for (auto const& a : mAnchors)
        anchors.push_back(a.toJson());
    return core::Json{{"manifests", std::move(manifests)},
                      {"names", mNames},
                      {"anchors", std::move(anchors)}};
}

}
