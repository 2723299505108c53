// Copyright 2026 vtp developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include "vtp/core/bytes.hpp"
#include "vtp/core/rng.hpp"

namespace vtp::core
{

// Ed25519 (libsodium). Public keys are 32 bytes, signatures 64 bytes,
// signing is deterministic. Secret keys must never leave the owning
// store; nothing in this header serializes them.
struct KeyPair
{
    Bytes publicKey;
    Bytes secretKey;
};

// Reproducible: the key is a pure function of the rng draw sequence.
KeyPair keygen(Rng& rng);

Bytes sign(BytesView secretKey, BytesView msg);

// Never throws; any malformed input verifies false.
bool verify(BytesView publicKey, BytesView msg, BytesView sig) noexcept;

}
