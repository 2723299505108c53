// Copyright 2026 vtp developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0

// Runs the two shipped scenario configs end to end.

#include <doctest.h>

#include "vtp/gateway/runner.hpp"

#ifndef VTP_CONFIG_DIR
#define VTP_CONFIG_DIR "configs"
#endif

using namespace vtp;
using namespace vtp::gateway;

namespace
{
std::string
configPath(char const* name)
{
    return std::string(VTP_CONFIG_DIR) + "/" + name;
}
}

TEST_CASE("the e-commerce scenario settles and reconciles")
{
    auto cfg = RunConfig::fromFile(configPath("ecommerce.json"));
    Runner runner(cfg);
    auto result = runner.runFlow();
    CHECK(result.finalEscrowStatus == "SETTLED");

    auto& w = runner.world();
    auto records =
        w.explorer.query(settle::ExplorerFilter{{}, {}, result.escrowId, {}});
    REQUIRE(records.size() == 1);
    CHECK(records[0].verdict == "match");

    // the storefront is the mandated payee; the shopper executed
    auto const& rec = w.escrows.get(result.escrowId);
    CHECK(rec.payeeAgentId == "agent-storefront");
    CHECK(w.facilitator.workflow(result.workflowId).chosenAgentId ==
          "agent-shopper");
    auto payee = w.wallets.addressOf("agent:agent-storefront@sim:alpha");
    CHECK(w.rails.rail("sim:alpha").balance(payee) == 9998 - 10);
}

TEST_CASE("the portfolio scenario settles through the Tier-3 path")
{
    auto cfg = RunConfig::fromFile(configPath("portfolio.json"));
    Runner runner(cfg);
    auto result = runner.runFlow();
    CHECK(result.finalEscrowStatus == "SETTLED");

    bool sawTier3 = false;
    bool sawChallengeWindow = false;
    for (auto const& e : result.transcript.at("entries"))
    {
        if (e.at("event_type") == "verification_requirements")
            sawTier3 = e.at("refs").at("tier") == "Tier3";
        if (e.at("event_type") == "challenge_window_elapsed")
            sawChallengeWindow = true;
    }
    CHECK(sawTier3);
    CHECK(sawChallengeWindow);

    // two distinct witnesses on every receipt
    auto const& session = runner.world().hub.session(result.workflowId);
    for (auto const& receipt : session.receipts)
        CHECK(receipt.witnesses.size() >= 2);
}

TEST_CASE("an over-budget rebalancer is refunded")
{
    auto cfg = RunConfig::fromFile(configPath("portfolio.json"));
    cfg.agents[0].behavior = orch::AgentBehavior::OverBudget;
    Runner runner(cfg);
    auto result = runner.runFlow();
    CHECK(result.outcome == "refunded");
    CHECK(result.finalEscrowStatus == "REFUNDED");
}
