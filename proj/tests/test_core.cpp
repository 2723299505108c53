// Copyright 2026 vtp developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#include <doctest.h>

#include "test_util.hpp"

#include "vtp/core/amount.hpp"
#include "vtp/core/base64url.hpp"
#include "vtp/core/canonical.hpp"
#include "vtp/core/ids.hpp"
#include "vtp/core/merkle.hpp"
#include "vtp/core/sha256.hpp"
#include "vtp/core/signature.hpp"

#include <sodium.h>

#include <set>

using namespace vtp;
using namespace vtp::core;

namespace
{

// Independent oracle: libsodium's SHA-256, a separate implementation from
// the one under test.
Digest
oracleSha256(BytesView data)
{
    Digest d;
    crypto_hash_sha256(d.bytes.data(), data.data(), data.size());
    return d;
}

// Brute-force Merkle oracle built directly on the oracle hash; shares no
// code with core::merkleRoot.
Digest
oracleMerkle(std::vector<Bytes> const& leaves)
{
    REQUIRE(!leaves.empty());
    std::vector<Digest> level;
    for (auto const& leaf : leaves)
    {
        Bytes pre;
        pre.push_back(0x00);
        pre.insert(pre.end(), leaf.begin(), leaf.end());
        level.push_back(oracleSha256(pre));
    }
    while (level.size() > 1)
    {
        std::vector<Digest> next;
        for (std::size_t i = 0; i + 1 < level.size(); i += 2)
        {
            Bytes pre;
            pre.push_back(0x01);
            pre.insert(pre.end(), level[i].bytes.begin(),
                       level[i].bytes.end());
            pre.insert(pre.end(), level[i + 1].bytes.begin(),
                       level[i + 1].bytes.end());
            next.push_back(oracleSha256(pre));
        }
        if (level.size() % 2 != 0)
            next.push_back(level.back());
        level = next;
    }
    return level.front();
}

}

TEST_CASE("sha256 matches published test vectors")
{
    CHECK(sha256(std::string_view("")).hex() ==
          "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(sha256(std::string_view("abc")).hex() ==
          "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    CHECK(sha256(std::string_view(
                     "abcdbcdecdefdefgefghfghighijhijkijkljklmklmnlmnomnopnopq"))
              .hex() ==
          "248d6a61d20638b8e5c026930c3e6039a33ce45964ff2167f6ecedd419db06c1");
    // one million 'a'
    std::string million(1000000, 'a');
    CHECK(sha256(std::string_view(million)).hex() ==
          "cdc76e5c9914fb9281a1c7e284d73e67f1809a48a497200e046d39ccc7112cd0");
}

TEST_CASE("sha256 agrees with an independent oracle on random inputs")
{
    REQUIRE(sodium_init() >= 0);
    Rng rng(0xC0FFEE);
    for (int i = 0; i < 300; ++i)
    {
        auto len = rng.nextBelow(600);
        Bytes msg = rng.bytes(len);
        CHECK(sha256(BytesView(msg)) == oracleSha256(BytesView(msg)));
    }
    // streaming with odd chunk boundaries
    Bytes msg = rng.bytes(10000);
    Sha256 h;
    std::size_t off = 0;
    std::size_t step = 1;
    while (off < msg.size())
    {
        std::size_t take = std::min(step, msg.size() - off);
        h.update(BytesView(msg.data() + off, take));
        off += take;
        step = (step * 7 + 3) % 257 + 1;
    }
    CHECK(h.finish() == oracleSha256(BytesView(msg)));
}

TEST_CASE("sha256 determinism")
{
    Bytes msg = to_bytes("same input twice");
    CHECK(sha256(BytesView(msg)) == sha256(BytesView(msg)));
}

TEST_CASE("canonical serialization sorts keys and strips whitespace")
{
    Json j;
    j["b"] = 1;
    j["a"] = 2;
    CHECK(canonicalSerialize(j) == "{\"a\":2,\"b\":1}");
    CHECK(canonicalSerialize(Json::object()) == "{}");
    CHECK(canonicalSerialize(Json::array()) == "[]");
    CHECK(canonicalSerialize(Json(nullptr)) == "null");
    CHECK(canonicalSerialize(Json(-17)) == "-17");
}

TEST_CASE("canonical serialization rejects floating point anywhere")
{
    CHECK(test::errcOf([] { canonicalSerialize(Json(1.5)); }) ==
          Errc::NonCanonicalValue);
    Json nested = {{"ok", 1}, {"bad", Json::array({1, 2, Json(0.25)})}};
    CHECK(test::errcOf([&] { canonicalSerialize(nested); }) ==
          Errc::NonCanonicalValue);
}

TEST_CASE("canonical serialization is injective on a generated corpus")
{
    Rng rng(42);
    std::set<Json> values;
    std::set<std::string> bytes;
    int guard = 0;
    while (values.size() < 1100 && ++guard < 100000)
    {
        Json v = test::randomRecord(rng);
        values.insert(v);
        bytes.insert(canonicalSerialize(v));
    }
    CHECK(values.size() == bytes.size());
    CHECK(values.size() >= 1100);
}

TEST_CASE("canonical bytes survive a parse round trip")
{
    Rng rng(91);
    for (int i = 0; i < 300; ++i)
    {
        auto v = test::randomRecord(rng);
        auto bytes = canonicalSerialize(v);
        CHECK(canonicalSerialize(Json::parse(bytes)) == bytes);
    }
    // escaping-heavy strings
    Json tricky = {{"s", "quote \" slash \\ newline \n tab \t unicode é"},
                   {"empty", ""}};
    auto bytes = canonicalSerialize(tricky);
    CHECK(canonicalSerialize(Json::parse(bytes)) == bytes);
}

TEST_CASE("merkle root matches the brute-force oracle for 1..16 leaves")
{
    Rng rng(7);
    for (int n = 1; n <= 16; ++n)
    {
        for (int rep = 0; rep < 8; ++rep)
        {
            std::vector<Bytes> leaves;
            for (int i = 0; i < n; ++i)
                leaves.push_back(rng.bytes(1 + rng.nextBelow(80)));
            CHECK(merkleRoot(leaves) == oracleMerkle(leaves));
        }
    }
}

TEST_CASE("merkle single leaf root is the leaf digest, not re-hashed")
{
    Bytes leaf = to_bytes("b");
    std::vector<Bytes> leaves{leaf};
    Bytes pre;
    pre.push_back(0x00);
    pre.insert(pre.end(), leaf.begin(), leaf.end());
    CHECK(merkleRoot(leaves) == sha256(BytesView(pre)));
}

TEST_CASE("merkle two-leaf formula")
{
    Bytes b1 = to_bytes("left leaf");
    Bytes b2 = to_bytes("right leaf");
    std::vector<Bytes> leaves{b1, b2};
    auto l1 = merkleLeafDigest(BytesView(b1));
    auto l2 = merkleLeafDigest(BytesView(b2));
    CHECK(merkleRoot(leaves) == merkleNodeDigest(l1, l2));
}

TEST_CASE("merkle rejects an empty leaf set")
{
    std::vector<Bytes> none;
    CHECK(test::errcOf([&] { merkleRoot(none); }) == Errc::EmptyLeafSet);
}

TEST_CASE("changing any single leaf changes the merkle root")
{
    Rng rng(11);
    for (int n = 1; n <= 16; ++n)
    {
        std::vector<Bytes> leaves;
        for (int i = 0; i < n; ++i)
            leaves.push_back(rng.bytes(16));
        auto root = merkleRoot(leaves);
        for (int i = 0; i < n; ++i)
        {
            auto mutated = leaves;
            mutated[i][rng.nextBelow(16)] ^= 0x01;
            CHECK(merkleRoot(mutated) != root);
        }
    }
}

TEST_CASE("signature round trip and tamper detection")
{
    Rng rng(99);
    auto kp = keygen(rng);
    CHECK(kp.publicKey.size() == 32);

    Bytes msg = to_bytes("release escrow esc-000001");
    auto sig = sign(kp.secretKey, msg);
    CHECK(verify(kp.publicKey, msg, sig));

    SUBCASE("flipping one message bit fails verification")
    {
        auto bad = msg;
        bad[3] ^= 0x10;
        CHECK_FALSE(verify(kp.publicKey, bad, sig));
    }
    SUBCASE("flipping one signature bit fails verification")
    {
        auto bad = sig;
        bad[10] ^= 0x01;
        CHECK_FALSE(verify(kp.publicKey, msg, bad));
    }
    SUBCASE("malformed signature verifies false without throwing")
    {
        CHECK_FALSE(verify(kp.publicKey, msg, Bytes{1, 2, 3}));
        CHECK_FALSE(verify(Bytes{1}, msg, sig));
    }
}

TEST_CASE("keygen is reproducible under a fixed seed")
{
    Rng a(1234), b(1234);
    auto k1 = keygen(a);
    auto k2 = keygen(b);
    CHECK(k1.publicKey == k2.publicKey);
    CHECK(k1.secretKey == k2.secretKey);
}

TEST_CASE("base64url round trips random payloads")
{
    Rng rng(5);
    for (int i = 0; i < 200; ++i)
    {
        Bytes data = rng.bytes(rng.nextBelow(100));
        auto text = base64urlEncode(data);
        CHECK(text.find('=') == std::string::npos);
        CHECK(base64urlDecode(text) == data);
    }
    CHECK(test::errcOf([] { base64urlDecode("a$b"); }) == Errc::BadEncoding);
}

TEST_CASE("amount arithmetic is checked")
{
    Amount a{4999, "USD"};
    Amount b{1, "USD"};
    CHECK(a.plus(b).minorUnits == 5000);
    CHECK(a.minus(b).minorUnits == 4998);
    Amount huge{~0ull, "USD"};
    CHECK(test::errcOf([&] { huge.plus(b); }) == Errc::Overflow);
    CHECK(test::errcOf([&] { b.minus(a); }) == Errc::Overflow);
    Amount eur{1, "EUR"};
    CHECK(test::errcOf([&] { a.plus(eur); }) == Errc::Overflow);
}

TEST_CASE("rail ids parse with exactly one separator")
{
    auto r = RailId::parse("sim:alpha");
    CHECK(r.family == "sim");
    CHECK(r.network == "alpha");
    CHECK(r.str() == "sim:alpha");
    for (auto bad : {"simalpha", "sim:al:pha", ":alpha", "sim:"})
        CHECK(test::errcOf([&] { RailId::parse(bad); }) == Errc::BadEncoding);
}

TEST_CASE("id generator mints unique sequential ids")
{
    IdGen ids;
    CHECK(ids.next("wf") == "wf-000001");
    CHECK(ids.next("wf") == "wf-000002");
    CHECK(ids.next("esc") == "esc-000001");
}

TEST_CASE("digest hex rendering is 64 lowercase characters")
{
    auto d = sha256(std::string_view("abc"));
    CHECK(isLowerHex(d.hex(), 64));
    CHECK(Digest::fromHex(d.hex()) == d);
    CHECK(Digest::zero().hex() == std::string(64, '0'));
}
