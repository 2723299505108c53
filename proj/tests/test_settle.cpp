// Copyright 2026 vtp developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#include <doctest.h>

#include "test_util.hpp"

#include "vtp/core/sha256.hpp"
#include "vtp/settle/adapter.hpp"
#include "vtp/verify/pote.hpp"

using namespace vtp;
using namespace vtp::settle;

namespace
{

RailConfig
alphaConfig()
{
    RailConfig c;
    c.railId = "sim:alpha";
    c.chainId = 101;
    c.finalityConfirmations = 3;
    c.extendedFinalityConfirmations = 12;
    c.flatFee = core::Amount{10, "USD"};
    return c;
}

RailConfig
betaConfig()
{
    RailConfig c;
    c.railId = "sim:beta";
    c.chainId = 102;
    c.finalityConfirmations = 3;
    c.extendedFinalityConfirmations = 12;
    c.flatFee = core::Amount{10, "USD"};
    return c;
}

struct SettleRig
{
    core::Clock clock;
    core::Rng rng{0xBEEF};
    verify::AuditLedger audit{clock};
    RailHub rails;
    WalletStore wallets{rails, rng};
    EscrowTable escrows{audit};
    verify::PoTEAnchorLog anchors;
    ExplorerIndex explorer;
    RailAdapter alpha{"sim:alpha", rails, wallets, escrows,
                      anchors,     audit, explorer};
    RailAdapter beta{"sim:beta", rails, wallets, escrows,
                     anchors,    audit, explorer};

    std::string payerRef = "user:payer@sim:alpha";

    SettleRig()
    {
        rails.addRail(alphaConfig());
        rails.addRail(betaConfig());
        wallets.createWallet(payerRef, "sim:alpha");
        wallets.createWallet("agent:worker@sim:alpha", "sim:alpha");
        wallets.createWallet("user:payer@sim:beta", "sim:beta");
        wallets.createWallet("agent:worker@sim:beta", "sim:beta");
        rails.rail("sim:alpha").fund(wallets.addressOf(payerRef), 1'000'000);
        rails.rail("sim:beta")
            .fund(wallets.addressOf("user:payer@sim:beta"), 1'000'000);
    }

    EscrowParams
    params(std::uint64_t amount, Tier tier = Tier::Tier2)
    {
        EscrowParams p;
        p.amount = core::Amount{amount, "USD"};
        p.payerRef = payerRef;
        p.payeeAgentId = "worker";
        p.timeoutTick = 1000;
        p.tier = tier;
        p.workflowId = "wf-1";
        return p;
    }

    // Deposit the exact amount and run the rail to standard finality.
    void
    fundToOpen(std::string const& escrowId)
    {
        auto const& rec = escrows.get(escrowId);
        auto stx = wallets.signTransfer(payerRef, rec.escrowAddress,
                                        rec.amount.minorUnits, false);
        rails.rail("sim:alpha").submit(std::move(stx));
        rails.rail("sim:alpha").tick(3);
        alpha.observeDeposit(escrowId);
    }
};

}

TEST_CASE("tier classification at the documented boundaries")
{
    CHECK(classifyTier(core::Amount{999, "USD"}) == Tier::Tier1);
    CHECK(classifyTier(core::Amount{1'000, "USD"}) == Tier::Tier2);
    CHECK(classifyTier(core::Amount{100'000, "USD"}) == Tier::Tier2);
    CHECK(classifyTier(core::Amount{100'001, "USD"}) == Tier::Tier3);
    CHECK(test::errcOf([] { classifyTier(core::Amount{0, "USD"}); }) ==
          Errc::ZeroAmount);
}

TEST_CASE("escrow provisioning")
{
    SettleRig rig;
    auto address = rig.alpha.provisionEscrow("esc-1", rig.params(5'000));
    CHECK(rig.rails.rail("sim:alpha").balance(address) == 0);
    CHECK(rig.escrows.get("esc-1").status == EscrowStatus::Created);

    CHECK(test::errcOf([&] {
              rig.alpha.provisionEscrow("esc-1", rig.params(5'000));
          }) == Errc::DuplicateEscrow);
    CHECK(test::errcOf([&] {
              rig.rails.rail("sim:gamma");
          }) == Errc::UnknownRail);
}

TEST_CASE("deposit observation follows the rail's own ledger")
{
    SettleRig rig;
    rig.alpha.provisionEscrow("esc-1", rig.params(5'000));
    auto const& rec = rig.escrows.get("esc-1");

    SUBCASE("finality threshold opens the escrow")
    {
        auto stx = rig.wallets.signTransfer(rig.payerRef, rec.escrowAddress,
                                            5'000, false);
        rig.rails.rail("sim:alpha").submit(std::move(stx));
        rig.rails.rail("sim:alpha").tick(2); // confirmations = 2 < 3
        auto obs = rig.alpha.observeDeposit("esc-1");
        CHECK(obs.seen);
        CHECK_FALSE(obs.final);
        CHECK(rig.escrows.get("esc-1").status == EscrowStatus::FundingPending);

        rig.rails.rail("sim:alpha").tick(1); // confirmations = 3
        obs = rig.alpha.observeDeposit("esc-1");
        CHECK(obs.final);
        CHECK(rig.escrows.get("esc-1").status == EscrowStatus::Open);
        CHECK(rig.escrows.get("esc-1").depositTxId.has_value());
    }
    SUBCASE("a reverted deposit is seen but never funds")
    {
        auto stx = rig.wallets.signTransfer(rig.payerRef, rec.escrowAddress,
                                            5'000, true);
        rig.rails.rail("sim:alpha").submit(std::move(stx));
        rig.rails.rail("sim:alpha").tick(10);
        auto obs = rig.alpha.observeDeposit("esc-1");
        CHECK(obs.seen);
        CHECK_FALSE(obs.final);
        CHECK_FALSE(obs.depositTxId.has_value());
        CHECK(rig.escrows.get("esc-1").status == EscrowStatus::Created);
        // and a forged claimed tx id fails the cross-check
        CHECK_FALSE(rig.alpha.checkClaimedDeposit("esc-1", "tx-forged"));
    }
    SUBCASE("a short deposit never funds")
    {
        auto stx = rig.wallets.signTransfer(rig.payerRef, rec.escrowAddress,
                                            4'999, false);
        rig.rails.rail("sim:alpha").submit(std::move(stx));
        rig.rails.rail("sim:alpha").tick(10);
        auto obs = rig.alpha.observeDeposit("esc-1");
        CHECK(obs.seen);
        CHECK_FALSE(obs.final);
        CHECK(rig.escrows.get("esc-1").status == EscrowStatus::Created);
    }
}

TEST_CASE("escrow machine accepts documented transitions only")
{
    SettleRig rig;
    rig.alpha.provisionEscrow("esc-1", rig.params(5'000));

    CHECK(test::errcOf([&] {
              rig.escrows.transition(
                  "esc-1", EscrowEvent{EscrowEventType::FinalityReached, {}});
          }) == Errc::IllegalTransition);
    CHECK(rig.escrows.transition(
              "esc-1", EscrowEvent{EscrowEventType::DepositObserved, {}}) ==
          EscrowStatus::FundingPending);
    CHECK(rig.escrows.transition(
              "esc-1", EscrowEvent{EscrowEventType::FinalityReached, {}}) ==
          EscrowStatus::Open);
    auto root = core::sha256(std::string_view("root"));
    CHECK(rig.escrows.transition(
              "esc-1", EscrowEvent{EscrowEventType::PoTEAnchored, root}) ==
          EscrowStatus::SettlementPending);
    CHECK(rig.escrows.transition(
              "esc-1",
              EscrowEvent{EscrowEventType::SettlementConfirmed, {}}) ==
          EscrowStatus::Settled);
    // terminal
    for (auto ev : {EscrowEventType::DepositObserved, EscrowEventType::Timeout,
                    EscrowEventType::RefundConfirmed})
        CHECK(test::errcOf([&] {
                  rig.escrows.transition("esc-1", EscrowEvent{ev, {}});
              }) == Errc::IllegalTransition);

    SUBCASE("challenge events are Tier 3 only")
    {
        rig.alpha.provisionEscrow("esc-2", rig.params(5'000, Tier::Tier2));
        rig.escrows.get("esc-2").status = EscrowStatus::SettlementPending;
        CHECK(test::errcOf([&] {
                  rig.escrows.transition(
                      "esc-2",
                      EscrowEvent{EscrowEventType::ChallengeRaised, {}});
              }) == Errc::IllegalTransition);

        rig.alpha.provisionEscrow("esc-3", rig.params(200'000, Tier::Tier3));
        rig.escrows.get("esc-3").status = EscrowStatus::SettlementPending;
        CHECK(rig.escrows.transition(
                  "esc-3",
                  EscrowEvent{EscrowEventType::ChallengeWindowElapsed, {}}) ==
              EscrowStatus::SettlementPending);
        CHECK(rig.escrows.get("esc-3").challengeWindowElapsed);
        CHECK(rig.escrows.transition(
                  "esc-3", EscrowEvent{EscrowEventType::ChallengeRaised, {}}) ==
              EscrowStatus::RefundPending);
    }
}

TEST_CASE("settlement is PoTE-gated and reconciles")
{
    SettleRig rig;
    rig.alpha.provisionEscrow("esc-1", rig.params(5'000));
    rig.fundToOpen("esc-1");
    REQUIRE(rig.escrows.get("esc-1").status == EscrowStatus::Open);

    SUBCASE("direct settle without an anchor reports PoTEMissing")
    {
        CHECK(test::errcOf([&] { rig.alpha.settle("esc-1"); }) ==
              Errc::PoTEMissing);
    }
    SUBCASE("anchored root settles, confirms, reconciles")
    {
        auto root = core::sha256(std::string_view("pote root"));
        rig.anchors.anchor("wf-1", "esc-1", root, rig.clock.tick);
        rig.escrows.transition("esc-1",
                               EscrowEvent{EscrowEventType::PoTEAnchored, root});

        auto payeeAddress =
            rig.wallets.addressOf("agent:worker@sim:alpha");
        auto payeeBefore = rig.rails.rail("sim:alpha").balance(payeeAddress);

        auto txId = rig.alpha.settle("esc-1");
        rig.rails.rail("sim:alpha").tick(3);
        rig.alpha.pollOutcome("esc-1");
        CHECK(rig.escrows.get("esc-1").status == EscrowStatus::Settled);
        CHECK(rig.rails.rail("sim:alpha").balance(payeeAddress) ==
              payeeBefore + 5'000 - 10);
        CHECK(rig.escrows.get("esc-1").settlementTxIds ==
              std::vector<std::string>{txId});

        auto verdict = rig.alpha.reconcile("esc-1");
        CHECK(verdict.match);
        CHECK(rig.explorer
                  .query(ExplorerFilter{{}, {}, std::string("esc-1"), {}})
                  .size() == 1);

        // settle on a settled escrow is a wrong state
        CHECK(test::errcOf([&] { rig.alpha.settle("esc-1"); }) ==
              Errc::WrongState);
        // refund on SETTLED is a wrong state
        CHECK(test::errcOf([&] { rig.alpha.refund("esc-1", "x"); }) ==
              Errc::WrongState);
        // unknown tx ids produce empty explorer results
        CHECK(rig.explorer
                  .query(ExplorerFilter{{}, std::string("tx-nope"), {}, {}})
                  .empty());
    }
    SUBCASE("an adversarially substituted payee reconciles as a mismatch")
    {
        rig.wallets.createWallet("agent:mallory@sim:alpha", "sim:alpha");
        auto root = core::sha256(std::string_view("pote root"));
        rig.anchors.anchor("wf-1", "esc-1", root, rig.clock.tick);
        rig.escrows.transition("esc-1",
                               EscrowEvent{EscrowEventType::PoTEAnchored, root});
        rig.alpha.settle("esc-1");
        rig.rails.rail("sim:alpha").tick(3);
        rig.alpha.pollOutcome("esc-1");

        // inject the fault: the control-plane record now claims another
        // payee, so the on-chain "to" field no longer matches
        rig.escrows.get("esc-1").payeeAgentId = "mallory";
        auto verdict = rig.alpha.reconcile("esc-1");
        CHECK_FALSE(verdict.match);
        CHECK(verdict.mismatchedFields ==
              std::vector<std::string>{"to"});
    }
    SUBCASE("reconcile before settlement is a wrong state")
    {
        CHECK(test::errcOf([&] { rig.alpha.reconcile("esc-1"); }) ==
              Errc::WrongState);
    }
    SUBCASE("anchored but still OPEN reports WrongState")
    {
        auto root = core::sha256(std::string_view("pote root"));
        rig.anchors.anchor("wf-1", "esc-1", root, rig.clock.tick);
        CHECK(test::errcOf([&] { rig.alpha.settle("esc-1"); }) ==
              Errc::WrongState);
    }
    SUBCASE("unknown escrow reported before anything else")
    {
        CHECK(test::errcOf([&] { rig.alpha.settle("esc-nope"); }) ==
              Errc::UnknownEscrow);
    }
}

TEST_CASE("tier 3 settlement waits out the challenge window")
{
    SettleRig rig;
    rig.alpha.provisionEscrow("esc-3", rig.params(200'000, Tier::Tier3));
    auto const& rec = rig.escrows.get("esc-3");
    auto stx = rig.wallets.signTransfer(rig.payerRef, rec.escrowAddress,
                                        200'000, false);
    rig.rails.rail("sim:alpha").submit(std::move(stx));
    rig.rails.rail("sim:alpha").tick(12); // extended finality
    rig.alpha.observeDeposit("esc-3");
    REQUIRE(rig.escrows.get("esc-3").status == EscrowStatus::Open);

    auto root = core::sha256(std::string_view("t3 root"));
    rig.anchors.anchor("wf-1", "esc-3", root, rig.clock.tick);
    rig.escrows.transition("esc-3",
                           EscrowEvent{EscrowEventType::PoTEAnchored, root});

    CHECK(test::errcOf([&] { rig.alpha.settle("esc-3"); }) ==
          Errc::WrongState); // window still open
    rig.escrows.transition(
        "esc-3", EscrowEvent{EscrowEventType::ChallengeWindowElapsed, {}});
    CHECK_NOTHROW(rig.alpha.settle("esc-3"));
}

TEST_CASE("refund path returns funds to the payer")
{
    SettleRig rig;
    rig.alpha.provisionEscrow("esc-1", rig.params(5'000));
    rig.fundToOpen("esc-1");
    auto payerAddress = rig.wallets.addressOf(rig.payerRef);
    auto before = rig.rails.rail("sim:alpha").balance(payerAddress);

    rig.escrows.transition("esc-1",
                           EscrowEvent{EscrowEventType::Timeout, {}});
    CHECK(rig.escrows.get("esc-1").status == EscrowStatus::RefundPending);
    rig.alpha.refund("esc-1", "timeout");
    rig.rails.rail("sim:alpha").tick(3);
    rig.alpha.pollOutcome("esc-1");
    CHECK(rig.escrows.get("esc-1").status == EscrowStatus::Refunded);
    CHECK(rig.rails.rail("sim:alpha").balance(payerAddress) ==
          before + 5'000 - 10);
}

TEST_CASE("cross-rail replay is rejected at inclusion, both directions")
{
    struct Direction
    {
        std::string origin, victim, payer, payee;
    };
    // exhaustive over the configured rail pairs
    for (auto const& d :
         {Direction{"sim:alpha", "sim:beta", "user:payer@sim:alpha",
                    "agent:worker@sim:alpha"},
          Direction{"sim:beta", "sim:alpha", "user:payer@sim:beta",
                    "agent:worker@sim:beta"}})
    {
        CAPTURE(d.origin);
        SettleRig rig;
        auto stx = rig.wallets.signTransfer(
            d.payer, rig.wallets.addressOf(d.payee), 100, false);
        auto replayed = stx;

        rig.rails.rail(d.origin).submit(std::move(stx));
        rig.rails.rail(d.origin).tick(1);
        CHECK(rig.rails.rail(d.origin).rejected().empty());

        auto before = rig.rails.rail(d.victim).allTxViews().size();
        rig.rails.rail(d.victim).submit(std::move(replayed));
        rig.rails.rail(d.victim).tick(1);
        REQUIRE(rig.rails.rail(d.victim).rejected().size() == 1);
        CHECK(rig.rails.rail(d.victim).rejected()[0].reason ==
              "chain_id_mismatch");
        CHECK(rig.rails.rail(d.victim).allTxViews().size() == before);
    }
}

TEST_CASE("ticking zero blocks changes nothing")
{
    SettleRig rig;
    auto h = rig.rails.rail("sim:alpha").height();
    CHECK(rig.rails.rail("sim:alpha").tick(0) == h);
}

TEST_CASE("revert-flag transactions consume only the fee")
{
    SettleRig rig;
    auto payer = rig.wallets.addressOf(rig.payerRef);
    auto payee = rig.wallets.addressOf("agent:worker@sim:alpha");
    auto before = rig.rails.rail("sim:alpha").balance(payer);

    auto stx = rig.wallets.signTransfer(rig.payerRef, payee, 500, true);
    rig.rails.rail("sim:alpha").submit(std::move(stx));
    rig.rails.rail("sim:alpha").tick(1);

    CHECK(rig.rails.rail("sim:alpha").balance(payer) == before - 10);
    CHECK(rig.rails.rail("sim:alpha").balance(payee) == 0);
    CHECK(rig.rails.rail("sim:alpha").conservationHolds());
}

TEST_CASE("invalid nonces are never included")
{
    SettleRig rig;
    auto payee = rig.wallets.addressOf("agent:worker@sim:alpha");
    auto stx = rig.wallets.signTransfer(rig.payerRef, payee, 100, false);
    stx.tx.nonce += 5; // breaks the signature too, but nonce is the point
    auto resigned = stx; // stale signature now invalid
    rig.rails.rail("sim:alpha").submit(std::move(resigned));
    rig.rails.rail("sim:alpha").tick(2);
    CHECK(rig.rails.rail("sim:alpha").allTxViews().empty());
    CHECK_FALSE(rig.rails.rail("sim:alpha").rejected().empty());
}

TEST_CASE("batch settlement moves per-payee sums in one transaction")
{
    SettleRig rig;
    rig.wallets.createWallet("agent:tipper@sim:alpha", "sim:alpha");

    EscrowParams p = rig.params(0, Tier::Tier1);
    p.amount = core::Amount{510, "USD"}; // 10 charges of 50 + fee float
    rig.alpha.provisionEscrow("esc-batch", p);
    auto const& rec = rig.escrows.get("esc-batch");
    auto stx = rig.wallets.signTransfer(rig.payerRef, rec.escrowAddress,
                                        510, false);
    rig.rails.rail("sim:alpha").submit(std::move(stx));
    rig.rails.rail("sim:alpha").tick(3);
    rig.alpha.observeDeposit("esc-batch");
    REQUIRE(rig.escrows.get("esc-batch").status == EscrowStatus::Open);

    auto root = core::sha256(std::string_view("batch root"));
    rig.anchors.anchor("wf-1", "esc-batch", root, rig.clock.tick);
    rig.escrows.transition("esc-batch",
                           EscrowEvent{EscrowEventType::PoTEAnchored, root});

    std::vector<BatchCharge> charges;
    for (int i = 0; i < 6; ++i)
        charges.push_back(
            BatchCharge{"worker", core::Amount{50, "USD"}, "sim:alpha"});
    for (int i = 0; i < 4; ++i)
        charges.push_back(
            BatchCharge{"tipper", core::Amount{50, "USD"}, "sim:alpha"});

    auto txId = rig.alpha.batchSettle("esc-batch", charges);
    rig.rails.rail("sim:alpha").tick(3);
    rig.alpha.pollOutcome("esc-batch");

    auto views = rig.rails.rail("sim:alpha").lookupTx(txId);
    REQUIRE(views.size() == 2); // one output per payee
    std::uint64_t total = 0;
    for (auto const& v : views)
        total += v.amount;
    CHECK(total == 500);
    CHECK(rig.rails.rail("sim:alpha").balance(
              rig.wallets.addressOf("agent:worker@sim:alpha")) == 300);
    CHECK(rig.rails.rail("sim:alpha").balance(
              rig.wallets.addressOf("agent:tipper@sim:alpha")) == 200);
    CHECK(rig.rails.rail("sim:alpha").conservationHolds());

    SUBCASE("a Tier-2 charge poisons the batch")
    {
        charges.push_back(
            BatchCharge{"worker", core::Amount{2'000, "USD"}, "sim:alpha"});
        CHECK(test::errcOf([&] {
                  rig.alpha.batchSettle("esc-batch", charges);
              }) == Errc::MixedTier);
    }
    SUBCASE("charges from another rail poison the batch")
    {
        charges.push_back(
            BatchCharge{"worker", core::Amount{50, "USD"}, "sim:beta"});
        CHECK(test::errcOf([&] {
                  rig.alpha.batchSettle("esc-batch", charges);
              }) == Errc::MixedRail);
    }
}

TEST_CASE("batch totals equal the charge sums (property)")
{
    core::Rng rng(77);
    for (int trial = 0; trial < 10; ++trial)
    {
        SettleRig rig;
        std::vector<BatchCharge> charges;
        std::uint64_t total = 0;
        auto n = 1 + rng.nextBelow(12);
        for (std::uint64_t i = 0; i < n; ++i)
        {
            std::uint64_t amt = 1 + rng.nextBelow(999);
            charges.push_back(
                BatchCharge{"worker", core::Amount{amt, "USD"}, "sim:alpha"});
            total += amt;
        }
        EscrowParams p = rig.params(0, Tier::Tier1);
        p.amount = core::Amount{total + 10, "USD"};
        rig.alpha.provisionEscrow("esc-b", p);
        auto const& rec = rig.escrows.get("esc-b");
        rig.rails.rail("sim:alpha")
            .submit(rig.wallets.signTransfer(rig.payerRef, rec.escrowAddress,
                                             total + 10, false));
        rig.rails.rail("sim:alpha").tick(3);
        rig.alpha.observeDeposit("esc-b");
        auto root = core::sha256(std::string_view("r"));
        rig.anchors.anchor("wf-1", "esc-b", root, rig.clock.tick);
        rig.escrows.transition(
            "esc-b", EscrowEvent{EscrowEventType::PoTEAnchored, root});

        auto txId = rig.alpha.batchSettle("esc-b", charges);
        rig.rails.rail("sim:alpha").tick(1);
        std::uint64_t moved = 0;
        for (auto const& v : rig.rails.rail("sim:alpha").lookupTx(txId))
            moved += v.amount;
        CHECK(moved == total);
        CHECK(rig.rails.rail("sim:alpha").conservationHolds());
    }
}

TEST_CASE("conservation holds across arbitrary activity")
{
    SettleRig rig;
    core::Rng rng(13);
    auto payee = rig.wallets.addressOf("agent:worker@sim:alpha");
    for (int i = 0; i < 30; ++i)
    {
        auto amt = 1 + rng.nextBelow(500);
        bool revert = rng.nextBelow(4) == 0;
        rig.rails.rail("sim:alpha")
            .submit(rig.wallets.signTransfer(rig.payerRef, payee, amt,
                                             revert));
        rig.rails.rail("sim:alpha").tick(1 + rng.nextBelow(2));
        CHECK(rig.rails.rail("sim:alpha").conservationHolds());
    }
}

TEST_CASE("wallet directory serializes without key material")
{
    SettleRig rig;
    auto dump = core::canonicalSerialize(rig.wallets.toJson());
    std::vector<core::Bytes> secrets;
    rig.wallets.collectSecretMaterial(secrets);
    for (auto const& sk : secrets)
    {
        auto hex = core::hexEncode(sk);
        CHECK(dump.find(hex) == std::string::npos);
        // seed half of the key as well
        CHECK(dump.find(hex.substr(0, 64)) == std::string::npos);
    }
}
