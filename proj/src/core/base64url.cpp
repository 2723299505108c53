// Copyright 2026 vtp developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#include "vtp/core/base64url.hpp"
#include "vtp/core/errors.hpp"

#include <array>

namespace vtp::core
{

namespace
{
constexpr char ALPHABET[] =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789-_";

std::array<std::int8_t, 256>
buildReverse()
{
    std::array<std::int8_t, 256> rev;
    rev.fill(-1);
    for (int i = 0; i < 64; ++i)
        rev[static_cast<unsigned char>(ALPHABET[i])] =
            static_cast<std::int8_t>(i);
    return rev;
}
}

std::string
base64urlEncode(BytesView data)
{
    std::string out;
    out.reserve((data.size() * 4 + 2) / 3);
    std::size_t i = 0;
    while (i + 3 <= data.size())
    {
        std::uint32_t v = (static_cast<std::uint32_t>(data[i]) << 16) |
                          (static_cast<std::uint32_t>(data[i + 1]) << 8) |
                          data[i + 2];
        out.push_back(ALPHABET[(v >> 18) & 0x3f]);
        out.push_back(ALPHABET[(v >> 12) & 0x3f]);
        out.push_back(ALPHABET[(v >> 6) & 0x3f]);
        out.push_back(ALPHABET[v & 0x3f]);
        i += 3;
    }
    std::size_t rem = data.size() - i;
    if (rem == 1)
    {
        std::uint32_t v = static_cast<std::uint32_t>(data[i]) << 16;
        out.push_back(ALPHABET[(v >> 18) & 0x3f]);
        out.push_back(ALPHABET[(v >> 12) & 0x3f]);
    }
    else if (rem == 2)
    {
        std::uint32_t v = (static_cast<std::uint32_t>(data[i]) << 16) |
                          (static_cast<std::uint32_t>(data[i + 1]) << 8);
        out.push_back(ALPHABET[(v >> 18) & 0x3f]);
        out.push_back(ALPHABET[(v >> 12) & 0x3f]);
        out.push_back(ALPHABET[(v >> 6) & 0x3f]);
    }
    return out;
}

Bytes
base64urlDecode(std::string_view text)
{
    static auto const REV = buildReverse();
    if (text.size() % 4 == 1)
        fail(Errc::BadEncoding, "truncated base64url input");
    Bytes out;
    out.reserve(text.size() * 3 / 4);
    std::uint32_t acc = 0;
    int bits = 0;
    for (char c : text)
    {
        std::int8_t v = REV[static_cast<unsigned char>(c)];
        if (v < 0)
            fail(Errc::BadEncoding, "invalid base64url character");
        acc = (acc << 6) | static_cast<std::uint32_t>(v);
        bits += 6;
        if (bits >= 8)
        {
            bits -= 8;
            out.push_back(static_cast<std::uint8_t>((acc >> bits) & 0xff));
        }
    }
    return out;
}

}
