// Copyright 2026 vtp developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#include <doctest.h>

#include "test_util.hpp"

#include "vtp/gateway/attacks.hpp"
#include "vtp/gateway/runner.hpp"

using namespace vtp;
using namespace vtp::gateway;

namespace
{

RunConfig
baseConfig(std::uint64_t seed, std::uint64_t amount = 5'000)
{
    auto cfg = defaultAttackConfig(seed);
    cfg.merchantQuote.items[0].price = core::Amount{amount, "USD"};
    cfg.task.budgetCap = core::Amount{std::max<std::uint64_t>(amount, 1'000),
                                      "USD"};
    return cfg;
}

}

TEST_CASE("honest flow settles and reconciles")
{
    Runner runner(baseConfig(42));
    auto result = runner.runFlow();
    CHECK(result.success);
    CHECK(result.finalEscrowStatus == "SETTLED");
    CHECK(result.outcome == "settled");

    auto& w = runner.world();
    CHECK(verify::AuditLedger::verifyChain(w.audit.events()));
    auto records = w.explorer.query(
        settle::ExplorerFilter{{}, {}, result.escrowId, {}});
    REQUIRE(records.size() == 1);
    CHECK(records[0].verdict == "match");

    // payee received amount minus the flat fee
    auto payee = w.wallets.addressOf("agent:agent-worker@sim:alpha");
    CHECK(w.rails.rail("sim:alpha").balance(payee) == 5'000 - 10);
    CHECK(w.rails.rail("sim:alpha").conservationHolds());
}

TEST_CASE("transcripts are a pure function of the config")
{
    auto r1 = Runner(baseConfig(7)).runFlow();
    auto r2 = Runner(baseConfig(7)).runFlow();
    CHECK(core::canonicalSerialize(r1.transcript) ==
          core::canonicalSerialize(r2.transcript));
    CHECK(r1.transcriptDigest == r2.transcriptDigest);

    auto r3 = Runner(baseConfig(8)).runFlow();
    CHECK(r3.transcriptDigest != r1.transcriptDigest);
}

TEST_CASE("misbehaving agents end refunded with the payer made whole")
{
    for (auto behavior :
         {orch::AgentBehavior::WrongOutput, orch::AgentBehavior::OverBudget,
          orch::AgentBehavior::NonResponsive,
          orch::AgentBehavior::InjectionCompromised})
    {
        CAPTURE(orch::agentBehaviorName(behavior));
        auto cfg = baseConfig(11);
        cfg.agents[0].behavior = behavior;
        if (behavior == orch::AgentBehavior::InjectionCompromised)
            cfg.agents[0].contract.requiredProofKinds.insert(
                verify::ProofKind::TeeAttestation);

        Runner runner(cfg);
        auto result = runner.runFlow();
        CHECK(result.outcome == "refunded");
        CHECK(result.finalEscrowStatus == "REFUNDED");

        auto& w = runner.world();
        auto payer = w.wallets.addressOf("user:user-1@sim:alpha");
        // genesis 10m minus deposit fee minus refund fee
        CHECK(w.rails.rail("sim:alpha").balance(payer) ==
              10'000'000 - 10 - 10);
        CHECK(w.rails.rail("sim:alpha").conservationHolds());
    }
}

TEST_CASE("rejected carts abort before funding")
{
    auto cfg = baseConfig(3);
    cfg.userApproves = false;
    Runner runner(cfg);
    auto result = runner.runFlow();
    CHECK(result.outcome == "aborted");
    CHECK_FALSE(runner.world().mandates.has(result.workflowId));
}

TEST_CASE("tier dispatch selects the verification path")
{
    struct Case
    {
        std::uint64_t amount;
        char const* tier;
        bool expectTee;
        bool expectFullNotary;
    };
    for (auto c : {Case{999, "Tier1", false, false},
                   Case{1'000, "Tier2", false, true},
                   Case{100'000, "Tier2", false, true},
                   Case{100'001, "Tier3", true, true}})
    {
        CAPTURE(c.amount);
        auto cfg = baseConfig(19, c.amount);
        cfg.challengeWindowTicks = 5;
        Runner runner(cfg);
        auto result = runner.runFlow();
        CHECK(result.success);

        auto const& transcript = result.transcript;
        bool sawTier = false;
        for (auto const& e : transcript.at("entries"))
        {
            if (e.at("event_type") != "verification_requirements")
                continue;
            sawTier = true;
            CHECK(e.at("refs").at("tier").get<std::string>() == c.tier);
            auto const& kinds = e.at("refs").at("required_proofs");
            auto hasKind = [&](std::string const& name) {
                for (auto const& k : kinds)
                    if (k.get<std::string>() == name)
                        return true;
                return false;
            };
            CHECK(hasKind("TeeAttestation") == c.expectTee);
            CHECK(hasKind("NotaryReceiptModel") == c.expectFullNotary);
            if (!c.expectFullNotary)
                CHECK(hasKind("ApiReceipt"));
        }
        CHECK(sawTier);
    }
}

TEST_CASE("tier 3 challenges reroute to refund")
{
    auto cfg = baseConfig(23, 200'000);
    cfg.raiseChallenge = true;
    cfg.challengeWindowTicks = 5;
    Runner runner(cfg);
    auto result = runner.runFlow();
    CHECK(result.outcome == "refunded");
    CHECK(result.finalEscrowStatus == "REFUNDED");
}

TEST_CASE("all four attack scenarios are blocked")
{
    for (auto const* scenario :
         {"phantom_deposit", "unverified_payout", "key_exfiltration",
          "cross_rail_replay"})
    {
        CAPTURE(scenario);
        auto report = runAttack(scenario, defaultAttackConfig(99));
        CHECK(report.blocked);
    }
    CHECK(test::errcOf([] {
              runAttack("nonsense", defaultAttackConfig(1));
          }) == Errc::ConfigInvalid);
}

TEST_CASE("run config round trips through JSON")
{
    auto cfg = defaultAttackConfig(5);
    cfg.validators.byzantineMask = {1};
    cfg.tierOverride = settle::Tier::Tier2;
    auto back = RunConfig::fromJson(cfg.toJson());
    CHECK(core::canonicalSerialize(back.toJson()) ==
          core::canonicalSerialize(cfg.toJson()));

    SUBCASE("n must equal 3f+1")
    {
        auto j = cfg.toJson();
        j["validators"]["n"] = 5;
        CHECK(test::errcOf([&] { RunConfig::fromJson(j); }) ==
              Errc::ConfigInvalid);
    }
    SUBCASE("behavior names are a closed set")
    {
        auto j = cfg.toJson();
        j["agents"][0]["behavior"] = "creative";
        CHECK(test::errcOf([&] { RunConfig::fromJson(j); }) ==
              Errc::ConfigInvalid);
    }
}

TEST_CASE("byzantine masks within f still settle")
{
    auto cfg = baseConfig(31);
    cfg.validators.byzantineMask = {2};
    Runner runner(cfg);
    auto result = runner.runFlow();
    CHECK(result.success);

    // beyond f the quorum fails and the flow refunds
    auto cfg2 = baseConfig(31);
    cfg2.validators.byzantineMask = {0, 2};
    Runner runner2(cfg2);
    auto result2 = runner2.runFlow();
    CHECK(result2.outcome == "refunded");
}
