// Copyright 2026 vtp developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include "vtp/core/bytes.hpp"
#include "vtp/core/digest.hpp"

#include <span>
#include <vector>

namespace vtp::core
{

// Domain-separated Merkle tree:
//   leaf digest    = sha256(0x00 || leaf bytes)
//   interior node  = sha256(0x01 || left || right)
// An odd node at any level is promoted unchanged; the root of a single
// leaf is its leaf digest. Interior levels go through the batch hash
// path, so the SIMD backend covers them when present.
Digest merkleRoot(std::span<Bytes const> leaves); // throws EmptyLeafSet

Digest merkleLeafDigest(BytesView leaf);
Digest merkleNodeDigest(Digest const& left, Digest const& right);

// One reduction step over leaf digests; exposed for reuse by callers that
// already hold digests (and by the equivalence tests).
Digest merkleRootOfDigests(std::vector<Digest> level); // throws EmptyLeafSet

}
