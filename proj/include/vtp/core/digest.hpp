// Copyright 2026 vtp developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include "vtp/core/bytes.hpp"

#include <array>
#include <compare>
#include <cstdint>

namespace vtp::core
{

// 32-byte SHA-256 output. Rendered as 64 lowercase hex characters in
// every external format.
struct Digest
{
    std::array<std::uint8_t, 32> bytes{};

    static Digest zero();
    static Digest fromHex(std::string_view hex);

    std::string hex() const;

    BytesView
    view() const
    {
        return BytesView(bytes.data(), bytes.size());
    }

    auto operator<=>(Digest const&) const = default;
};

}
