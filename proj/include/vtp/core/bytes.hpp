// Copyright 2026 vtp developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vtp::core
{

using Bytes = std::vector<std::uint8_t>;
using BytesView = std::span<std::uint8_t const>;

inline Bytes
to_bytes(std::string_view s)
{
    return Bytes(s.begin(), s.end());
}

inline std::string
to_string(BytesView b)
{
    return std::string(b.begin(), b.end());
}

inline BytesView
view(std::string_view s)
{
    return BytesView(reinterpret_cast<std::uint8_t const*>(s.data()),
                     s.size());
}

std::string hexEncode(BytesView b);

// Throws Error{Errc::BadEncoding} on odd length or non-hex characters.
Bytes hexDecode(std::string_view hex);

bool isLowerHex(std::string_view s, std::size_t expectedLen);

}
