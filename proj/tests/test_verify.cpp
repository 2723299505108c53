// Copyright 2026 vtp developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#include <doctest.h>

#include "test_fixtures.hpp"
#include "test_util.hpp"

#include "vtp/core/merkle.hpp"
#include "vtp/core/sha256.hpp"

#include <sodium.h>
#include <sstream>

using namespace vtp;
using namespace vtp::verify;

TEST_CASE("notarized receipts commit to the exchange bytes")
{
    test::EvidenceRig rig;
    std::string request = "GET /quote sku-1";
    std::string response = "{\"price\":4999}";

    auto one = rig.notaries.notarize(ReceiptKind::Model, "sess-1", "wf-1",
                                     core::view(request), core::view(response),
                                     rig.notaries.firstIds(1), 3);
    CHECK(one.witnesses.size() == 1);
    CHECK(one.requestCommitment == core::sha256(std::string_view(request)));
    CHECK(one.responseCommitment == core::sha256(std::string_view(response)));

    auto two = rig.notaries.notarize(ReceiptKind::Model, "sess-1", "wf-1",
                                     core::view(request), core::view(response),
                                     rig.notaries.firstIds(2), 3);
    CHECK(two.witnesses.size() == 2);
    CHECK(two.requestCommitment == one.requestCommitment);
    CHECK(two.responseCommitment == one.responseCommitment);

    SUBCASE("post-hoc response alteration is detectable by rehashing")
    {
        std::string altered = "{\"price\":1}";
        CHECK(core::sha256(std::string_view(altered)) !=
              one.responseCommitment);
    }
    SUBCASE("no notaries means no receipt")
    {
        CHECK(test::errcOf([&] {
                  rig.notaries.notarize(ReceiptKind::Model, "s", "w",
                                        core::view(request),
                                        core::view(response), {}, 3);
              }) == Errc::NoNotary);
    }
    SUBCASE("witness signatures verify over the canonical body")
    {
        auto body = core::canonicalSerialize(one.bodyJson());
        CHECK(core::verify(rig.anchors.notaryKeys.at(one.witnesses[0].notaryId),
                           core::view(body), one.witnesses[0].signature));
    }
}

TEST_CASE("tee attestation measures the agent code")
{
    test::EvidenceRig rig;
    auto report = rig.authority.attest(rig.manifest.agentId,
                                       core::BytesView(rig.agentCode), 5);
    CHECK(report.enclaveMeasurement ==
          core::sha256(core::BytesView(rig.agentCode)));
    CHECK(rig.authority.verifyReport(report));
    CHECK(report.enclaveMeasurement ==
          rig.anchors.expectedMeasurements.at(rig.manifest.agentId));

    SUBCASE("tampered code produces a different measurement")
    {
        auto tampered = rig.agentCode;
        tampered.push_back(0x90);
        auto bad = rig.authority.attest(rig.manifest.agentId,
                                        core::BytesView(tampered), 5);
        CHECK(bad.enclaveMeasurement !=
              rig.anchors.expectedMeasurements.at(rig.manifest.agentId));
    }
    SUBCASE("forged authority signature fails verification")
    {
        auto forged = report;
        forged.reportSignature[5] ^= 0x01;
        CHECK_FALSE(rig.authority.verifyReport(forged));
    }
    SUBCASE("unknown agent cannot be attested")
    {
        CHECK(test::errcOf([&] {
                  rig.authority.attest("agent-ghost",
                                       core::BytesView(rig.agentCode), 5);
              }) == Errc::UnknownAgent);
    }
}

TEST_CASE("quorum arithmetic at n=4, f=1")
{
    test::EvidenceRig rig;
    auto subject = core::sha256(std::string_view("receipt set root"));

    auto full = rig.validators.validate(subject, {});
    REQUIRE(full);
    CHECK(full->votes.size() == 4);
    CHECK(verifyCertificate(*full, rig.anchors.validatorKeys));

    auto oneByz = rig.validators.validate(subject, {2});
    REQUIRE(oneByz);
    CHECK(oneByz->votes.size() == 3);
    CHECK(verifyCertificate(*oneByz, rig.anchors.validatorKeys));

    CHECK_FALSE(rig.validators.validate(subject, {0, 1}));
    CHECK_FALSE(rig.validators.validate(subject, {0, 1, 2, 3}));

    SUBCASE("certificates with forged votes fail verification")
    {
        auto cert = *full;
        cert.votes[1].signature[3] ^= 0x01;
        CHECK_FALSE(verifyCertificate(cert, rig.anchors.validatorKeys));
    }
}

TEST_CASE("verification sessions gate on workflow state")
{
    test::EvidenceRig rig;
    CHECK(test::errcOf([&] {
              rig.hub.openSession("wf-x", "esc-x", false);
          }) == Errc::WrongState);
    rig.hub.openSession("wf-x", "esc-x", true);
    CHECK(test::errcOf([&] {
              rig.hub.openSession("wf-x", "esc-x", true);
          }) == Errc::WrongState);
}

TEST_CASE("pote bundle root matches an independent recomputation")
{
    test::EvidenceRig rig;
    auto built = rig.buildBundle(settle::Tier::Tier2, 1);

    // brute-force oracle over the canonical leaf bytes, using libsodium
    REQUIRE(sodium_init() >= 0);
    auto leaves = built.bundle.evidenceLeaves();
    std::vector<core::Digest> level;
    for (auto const& leaf : leaves)
    {
        core::Bytes pre{0x00};
        pre.insert(pre.end(), leaf.begin(), leaf.end());
        core::Digest d;
        crypto_hash_sha256(d.bytes.data(), pre.data(), pre.size());
        level.push_back(d);
    }
    while (level.size() > 1)
    {
        std::vector<core::Digest> next;
        for (std::size_t i = 0; i + 1 < level.size(); i += 2)
        {
            core::Bytes pre{0x01};
            pre.insert(pre.end(), level[i].bytes.begin(),
                       level[i].bytes.end());
            pre.insert(pre.end(), level[i + 1].bytes.begin(),
                       level[i + 1].bytes.end());
            core::Digest d;
            crypto_hash_sha256(d.bytes.data(), pre.data(), pre.size());
            next.push_back(d);
        }
        if (level.size() % 2 != 0)
            next.push_back(level.back());
        level = next;
    }
    CHECK(built.bundle.merkleRoot == level.front());
    CHECK(built.bundle.quorum.subjectDigest == built.bundle.merkleRoot);
}

TEST_CASE("pote assembly demands the required proof objects")
{
    test::EvidenceRig rig;
    auto& sess = rig.hub.openSession("wf-y", "esc-y", true);
    auto ids = rig.notaries.firstIds(1);
    sess.receipts.push_back(rig.notaries.notarize(
        ReceiptKind::Executor, "s", "wf-y", core::view(std::string("a")),
        core::view(std::string("b")), ids, 1));
    // no model/tool receipts recorded
    CHECK(test::errcOf([&] {
              rig.hub.assemblePote(
                  "wf-y", core::Digest::zero(), core::Digest::zero(),
                  identity::tierRequiredProofs(settle::Tier::Tier2),
                  rig.validators, {});
          }) == Errc::MissingProofObject);
}

TEST_CASE("pote assembly fails without quorum")
{
    test::EvidenceRig rig;
    CHECK(test::errcOf([&] {
              rig.buildBundle(settle::Tier::Tier2, 1, {0, 1});
          }) == Errc::NoQuorum);
}

TEST_CASE("anchoring is verdict-gated, idempotent, and conflict-checked")
{
    test::EvidenceRig rig;
    auto built = rig.buildBundle(settle::Tier::Tier2, 1);

    CHECK(test::errcOf([&] { rig.hub.anchorPote(built.bundle, false); }) ==
          Errc::ContractFailed);
    CHECK_FALSE(rig.hub.anchors().latestFor("esc-test"));

    rig.hub.anchorPote(built.bundle, true);
    auto anchored = rig.hub.anchors().latestFor("esc-test");
    REQUIRE(anchored);
    CHECK(anchored->merkleRoot == built.bundle.merkleRoot);

    // idempotent on the same root
    rig.hub.anchorPote(built.bundle, true);
    CHECK(rig.hub.anchors().entries().size() == 1);

    auto conflicting = built.bundle;
    conflicting.merkleRoot = core::sha256(std::string_view("swapped root"));
    CHECK(test::errcOf([&] { rig.hub.anchorPote(conflicting, true); }) ==
          Errc::Conflict);
}

TEST_CASE("audit chain verifies and breaks on tampering")
{
    core::Clock clock;
    AuditLedger ledger(clock);
    for (int i = 0; i < 5; ++i)
    {
        clock.advance();
        ledger.append("event_" + std::to_string(i), "wf-1", "esc-1",
                      core::Json{{"n", i}});
    }
    CHECK(AuditLedger::verifyChain(ledger.events()));

    SUBCASE("payload hash mutation in the middle breaks the chain")
    {
        auto events = ledger.events();
        events[2].payloadHash.bytes[0] ^= 0x01;
        CHECK_FALSE(AuditLedger::verifyChain(events));
    }
    SUBCASE("empty ledger is vacuously valid")
    {
        CHECK(AuditLedger::verifyChain({}));
    }
    SUBCASE("jsonl export round trips and rejects mutations")
    {
        std::ostringstream out;
        ledger.exportJsonl(out);
        auto text = out.str();
        {
            std::istringstream in(text);
            CHECK(AuditLedger::verifyJsonl(in));
        }
        core::Rng rng(3);
        for (int trial = 0; trial < 40; ++trial)
        {
            auto mutated = text;
            auto pos = rng.nextBelow(mutated.size());
            char replacement =
                static_cast<char>('!' + rng.nextBelow(90));
            if (mutated[pos] == replacement)
                replacement = replacement == '!' ? '"' : '!';
            mutated[pos] = replacement;
            std::istringstream in(mutated);
            CHECK_FALSE(AuditLedger::verifyJsonl(in));
        }
    }
    SUBCASE("empty file is vacuously valid")
    {
        std::istringstream in("");
        CHECK(AuditLedger::verifyJsonl(in));
    }
}

TEST_CASE("pote anchor log exports as json lines")
{
    test::EvidenceRig rig;
    auto built = rig.buildBundle(settle::Tier::Tier2, 1);
    rig.hub.anchorPote(built.bundle, true);

    std::ostringstream out;
    rig.hub.anchors().exportJsonl(out);
    std::istringstream in(out.str());
    std::string line;
    REQUIRE(std::getline(in, line));
    auto j = core::Json::parse(line);
    CHECK(j.at("workflow_id") == "wf-test");
    CHECK(j.at("escrow_id") == "esc-test");
    CHECK(j.at("merkle_root") == built.bundle.merkleRoot.hex());
    CHECK(j.contains("tick"));
}

TEST_CASE("telemetry session hashes are order- and content-sensitive")
{
    TelemetryStore store;
    CHECK(store.sessionHash("wf-none") ==
          core::hashOfJson(core::Json::array()));

    TelemetrySample s1{"wf-1", "model", 20, 900, core::Amount{12, "USD"}, 4};
    TelemetrySample s2{"wf-1", "tool", 9, 0, core::Amount{3, "USD"}, 5};
    store.record(s1);
    store.record(s2);

    TelemetryStore replay;
    replay.record(s1);
    replay.record(s2);
    CHECK(store.sessionHash("wf-1") == replay.sessionHash("wf-1"));
    CHECK(store.totalCost("wf-1", "USD").minorUnits == 15);

    TelemetryStore altered;
    auto s1b = s1;
    s1b.latencyMs += 1;
    altered.record(s1b);
    altered.record(s2);
    CHECK(store.sessionHash("wf-1") != altered.sessionHash("wf-1"));
}

TEST_CASE("pote recomputation holds over randomized evidence sets")
{
    core::Rng rng(555);
    for (int trial = 0; trial < 25; ++trial)
    {
        test::EvidenceRig rig(1000 + trial);
        auto built = rig.buildBundle(settle::Tier::Tier2, 1);
        CHECK(core::merkleRoot(built.bundle.evidenceLeaves()) ==
              built.bundle.merkleRoot);

        // single-leaf mutation must change the root
        auto leaves = built.bundle.evidenceLeaves();
        auto victim = rng.nextBelow(leaves.size());
        leaves[victim][rng.nextBelow(leaves[victim].size())] ^= 0x01;
        CHECK(core::merkleRoot(leaves) != built.bundle.merkleRoot);
    }
}
