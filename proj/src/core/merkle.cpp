// Copyright 2026 vtp developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#include "vtp/core/merkle.hpp"
#include "vtp/core/errors.hpp"
#include "vtp/core/sha256.hpp"

#include <cstring>

namespace vtp::core
{

Digest
merkleLeafDigest(BytesView leaf)
{
    Sha256 h;
    std::uint8_t const tag = 0x00;
    h.update(BytesView(&tag, 1));
    h.update(leaf);
    return h.finish();
}

Digest
merkleNodeDigest(Digest const& left, Digest const& right)
{
    std::uint8_t buf[65];
    buf[0] = 0x01;
    std::memcpy(buf + 1, left.bytes.data(), 32);
    std::memcpy(buf + 33, right.bytes.data(), 32);
    return sha256(BytesView(buf, sizeof(buf)));
}

Digest
merkleRootOfDigests(std::vector<Digest> level)
{
    if (level.empty())
        fail(Errc::EmptyLeafSet, "merkle tree needs at least one leaf");

    std::vector<std::uint8_t> preimages;
    std::vector<std::uint8_t const*> ptrs;
    std::vector<Digest> next;
    while (level.size() > 1)
    {
        std::size_t const pairs = level.size() / 2;
        preimages.assign(pairs * 65, 0);
        ptrs.resize(pairs);
        for (std::size_t i = 0; i < pairs; ++i)
        {
            std::uint8_t* p = preimages.data() + i * 65;
            p[0] = 0x01;
            std::memcpy(p + 1, level[2 * i].bytes.data(), 32);
            std::memcpy(p + 33, level[2 * i + 1].bytes.data(), 32);
            ptrs[i] = p;
        }
        next.resize(pairs);
        sha256Batch(ptrs.data(), 65, pairs, next.data());
        if (level.size() % 2 != 0)
            next.push_back(level.back()); // odd node promotes unchanged
        level.swap(next);
    }
    return level.front();
}

Digest
merkleRoot(std::span<Bytes const> leaves)
{
    if (leaves.empty())
        fail(Errc::EmptyLeafSet, "merkle tree needs at least one leaf");
    std::vector<Digest> level;
    level.reserve(leaves.size());
    for (auto const& leaf : leaves)
        level.push_back(merkleLeafDigest(leaf));
    return merkleRootOfDigests(std::move(level));
}

}
