// Copyright 2026 vtp developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#include "vtp/gateway/config.hpp"
#include "vtp/core/errors.hpp"

#include <fstream>
#include <sstream>

namespace vtp::gateway
{

core::Json
RunConfig::toJson() const
{
    auto railsJson = core::Json::array();
    for (auto const& r : rails)
        railsJson.push_back(r.toJson());

    auto agentsJson = core::Json::array();
    for (auto const& a : agents)
        agentsJson.push_back(core::Json{
            {"manifest", a.manifest.toJson()},
            {"behavior", std::string(orch::agentBehaviorName(a.behavior))},
            {"contract", a.contract.toJson()}});

    auto itemsJson = core::Json::array();
    for (auto const& item : merchantQuote.items)
        itemsJson.push_back(item.toJson());

    auto maskJson = core::Json::array();
    for (auto i : validators.byzantineMask)
        maskJson.push_back(i);

    core::Json j{
        {"seed", seed},
        {"rails", std::move(railsJson)},
        {"agents", std::move(agentsJson)},
        {"merchant_quote",
         core::Json{{"merchant_agent_id", merchantQuote.merchantAgentId},
                    {"items", std::move(itemsJson)}}},
        {"task", task.toJson()},
        {"validators", core::Json{{"n", validators.n},
                                  {"f", validators.f},
                                  {"byzantine_mask", std::move(maskJson)}}},
        {"notaries", notaryCount},
        {"user_approves", userApproves},
        {"raise_challenge", raiseChallenge},
        {"challenge_window_ticks", challengeWindowTicks}};
    if (tierOverride)
        j["tier_override"] = std::string(settle::tierName(*tierOverride));
    return j;
}

RunConfig
RunConfig::fromJson(core::Json const& j)
{
    try
    {
        RunConfig c;
        c.seed = j.at("seed").get<std::uint64_t>();

        for (auto const& r : j.at("rails"))
            c.rails.push_back(settle::RailConfig::fromJson(r));
        if (c.rails.empty())
            fail(Errc::ConfigInvalid, "at least one rail required");

        for (auto const& a : j.at("agents"))
        {
            AgentConfig ac;
            ac.manifest = identity::AgentManifest::fromJson(a.at("manifest"));
            ac.behavior = orch::agentBehaviorFromName(
                a.at("behavior").get<std::string>());
            ac.contract =
                identity::AgentContract::fromJson(a.at("contract"));
            if (ac.contract.agentId != ac.manifest.agentId)
                fail(Errc::ConfigInvalid,
                     "contract agent_id mismatch for " + ac.manifest.agentId);
            c.agents.push_back(std::move(ac));
        }
        if (c.agents.empty())
            fail(Errc::ConfigInvalid, "at least one agent required");

        auto const& q = j.at("merchant_quote");
        c.merchantQuote.merchantAgentId =
            q.at("merchant_agent_id").get<std::string>();
        for (auto const& item : q.at("items"))
            c.merchantQuote.items.push_back(orch::CartItem::fromJson(item));
        if (c.merchantQuote.items.empty())
            fail(Errc::ConfigInvalid, "merchant quote needs items");

        c.task = orch::TaskRequest::fromJson(j.at("task"));

        auto const& v = j.at("validators");
        c.validators.n = v.at("n").get<std::uint32_t>();
        c.validators.f = v.at("f").get<std::uint32_t>();
        if (c.validators.n != 3 * c.validators.f + 1)
            fail(Errc::ConfigInvalid, "validators must satisfy n = 3f+1");
        if (v.contains("byzantine_mask"))
            for (auto const& idx : v.at("byzantine_mask"))
            {
                auto i = idx.get<std::uint32_t>();
                if (i >= c.validators.n)
                    fail(Errc::ConfigInvalid, "byzantine index out of range");
                c.validators.byzantineMask.insert(i);
            }

        if (j.contains("notaries"))
            c.notaryCount = j.at("notaries").get<std::uint32_t>();
        if (c.notaryCount == 0)
            fail(Errc::ConfigInvalid, "at least one notary required");
        if (j.contains("user_approves"))
            c.userApproves = j.at("user_approves").get<bool>();
        if (j.contains("raise_challenge"))
            c.raiseChallenge = j.at("raise_challenge").get<bool>();
        if (j.contains("challenge_window_ticks"))
            c.challengeWindowTicks =
                j.at("challenge_window_ticks").get<core::Tick>();
        if (j.contains("tier_override") && !j.at("tier_override").is_null())
            c.tierOverride = settle::tierFromName(
                j.at("tier_override").get<std::string>());
        return c;
    }
    catch (core::Json::exception const& e)
    {
        fail(Errc::ConfigInvalid, e.what());
    }
}

RunConfig
RunConfig::fromFile(std::string const& path)
{
    std::ifstream in(path);
    if (!in)
        fail(Errc::IoError, "cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    try
    {
        return fromJson(core::Json::parse(buf.str()));
    }
    catch (core::Json::exception const& e)
    {
        fail(Errc::ConfigInvalid, std::string("bad config JSON: ") + e.what());
    }
}

}
