// Copyright 2026 vtp developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0

// Equivalence tests between the scalar reference transform and the SIMD
// backends selected at runtime. Every backend available on this CPU must
// produce byte-identical output on the same inputs.

#include <doctest.h>

#include "vtp/core/merkle.hpp"
#include "vtp/core/rng.hpp"
#include "vtp/core/sha256.hpp"

#include <string>
#include <vector>

using namespace vtp::core;

namespace
{

std::vector<std::string>
availableBackends()
{
    std::vector<std::string> names{"scalar"};
    if (sha256CpuHasShaNi())
        names.push_back("sha-ni");
    if (sha256CpuHasAvx2())
        names.push_back("scalar+avx2x8");
    if (sha256CpuHasShaNi() && sha256CpuHasAvx2())
        names.push_back("sha-ni+avx2x8");
    return names;
}

struct BackendGuard
{
    ~BackendGuard()
    {
        sha256SelectBackend("auto");
    }
};

}

TEST_CASE("all runtime backends agree with the scalar reference")
{
    BackendGuard guard;
    Rng rng(2024);

    std::vector<Bytes> inputs;
    for (int i = 0; i < 200; ++i)
        inputs.push_back(rng.bytes(rng.nextBelow(300)));
    // block-boundary lengths are the usual trouble spots
    for (std::size_t len : {0u, 1u, 55u, 56u, 63u, 64u, 65u, 127u, 128u})
        inputs.push_back(rng.bytes(len));

    REQUIRE(sha256SelectBackend("scalar"));
    std::vector<Digest> reference;
    for (auto const& in : inputs)
        reference.push_back(sha256(BytesView(in)));

    for (auto const& name : availableBackends())
    {
        CAPTURE(name);
        REQUIRE(sha256SelectBackend(name));
        for (std::size_t i = 0; i < inputs.size(); ++i)
            CHECK(sha256(BytesView(inputs[i])) == reference[i]);
    }
}

TEST_CASE("batch hashing matches the single-stream path lane for lane")
{
    BackendGuard guard;
    Rng rng(77);

    for (std::size_t count : {1u, 7u, 8u, 9u, 16u, 23u, 64u})
    {
        for (std::size_t len : {0u, 1u, 32u, 65u, 64u, 200u})
        {
            std::vector<Bytes> msgs;
            std::vector<std::uint8_t const*> ptrs;
            for (std::size_t i = 0; i < count; ++i)
                msgs.push_back(rng.bytes(len));
            for (auto const& m : msgs)
                ptrs.push_back(m.data());

            REQUIRE(sha256SelectBackend("scalar"));
            std::vector<Digest> expected(count);
            for (std::size_t i = 0; i < count; ++i)
                expected[i] = sha256(BytesView(msgs[i]));

            for (auto const& name : availableBackends())
            {
                CAPTURE(name);
                CAPTURE(count);
                CAPTURE(len);
                REQUIRE(sha256SelectBackend(name));
                std::vector<Digest> got(count);
                sha256Batch(ptrs.data(), len, count, got.data());
                for (std::size_t i = 0; i < count; ++i)
                    CHECK(got[i] == expected[i]);
            }
        }
    }
}

TEST_CASE("merkle roots are identical across backends")
{
    BackendGuard guard;
    Rng rng(31337);

    for (int rep = 0; rep < 20; ++rep)
    {
        std::vector<Bytes> leaves;
        auto n = 1 + rng.nextBelow(40);
        for (std::uint64_t i = 0; i < n; ++i)
            leaves.push_back(rng.bytes(rng.nextBelow(120)));

        REQUIRE(sha256SelectBackend("scalar"));
        auto reference = merkleRoot(leaves);
        for (auto const& name : availableBackends())
        {
            CAPTURE(name);
            REQUIRE(sha256SelectBackend(name));
            CHECK(merkleRoot(leaves) == reference);
        }
    }
}

TEST_CASE("backend selection reports what the CPU supports")
{
    BackendGuard guard;
    CHECK(sha256SelectBackend("auto"));
    auto name = sha256BackendName();
    CHECK(!name.empty());
    CHECK_FALSE(sha256SelectBackend("not-a-backend"));
}
