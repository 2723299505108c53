// Copyright 2026 vtp developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include "vtp/core/bytes.hpp"
#include "vtp/core/digest.hpp"

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace vtp::core
{

// SHA-256 with runtime-selected backends. The scalar transform is the
// reference; SHA-NI (single stream) and an AVX2 8-way batch transform are
// substituted at startup when the CPU supports them. All backends are
// equivalence-tested against the scalar path.
class Sha256
{
  public:
    Sha256();

    Sha256& update(BytesView data);
    Sha256& update(std::string_view data);

    // Finalizes and resets to a fresh state.
    Digest finish();

  private:
    std::uint32_t mState[8];
    std::uint64_t mTotalLen;
    std::uint8_t mBuf[64];
    std::size_t mBufLen;
};

Digest sha256(BytesView data);
Digest sha256(std::string_view data);

// Hashes `count` messages of identical length `len`. Runs 8 lanes at a
// time through the AVX2 transform when available, otherwise falls back to
// the single-stream path. Output digests land in `out[0..count)`.
void sha256Batch(std::uint8_t const* const* msgs, std::size_t len,
                 std::size_t count, Digest* out);

// Backend control, used by the equivalence tests and the CLI.
// Names: "scalar", "sha-ni", "scalar+avx2x8", "sha-ni+avx2x8".
std::string_view sha256BackendName();
bool sha256SelectBackend(std::string_view name); // "auto" re-detects
bool sha256CpuHasShaNi();
bool sha256CpuHasAvx2();

namespace detail
{
void sha256TransformScalar(std::uint32_t state[8], std::uint8_t const* data,
                           std::size_t nblocks);
#if defined(__x86_64__) || defined(_M_X64)
void sha256TransformShaNi(std::uint32_t state[8], std::uint8_t const* data,
                          std::size_t nblocks);
// 8 independent states, 8 independent 64-byte blocks.
void sha256TransformAvx2x8(std::uint32_t states[8][8],
                           std::uint8_t const* const blocks[8]);
#endif
}

}
