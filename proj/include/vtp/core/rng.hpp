// Copyright 2026 vtp developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include "vtp/core/bytes.hpp"

#include <cstdint>
#include <random>

namespace vtp::core
{

// The single deterministic randomness source of a run. Callers own the
// instance and serialize access; every draw is a pure function of the
// seed and draw order.
class Rng
{
  public:
    explicit Rng(std::uint64_t seed) : mEngine(seed)
    {
    }

    std::uint64_t
    nextU64()
    {
        return mEngine();
    }

    // Uniform-ish draw in [0, n); n must be positive. Modulo bias is
    // irrelevant at simulation scale.
    std::uint64_t
    nextBelow(std::uint64_t n)
    {
        return mEngine() % n;
    }

    Bytes
    bytes(std::size_t n)
    {
        Bytes out(n);
        std::size_t i = 0;
        while (i < n)
        {
            std::uint64_t v = mEngine();
            for (int k = 0; k < 8 && i < n; ++k, ++i)
                out[i] = static_cast<std::uint8_t>(v >> (8 * k));
        }
        return out;
    }

  private:
    std::mt19937_64 mEngine;
};

}
