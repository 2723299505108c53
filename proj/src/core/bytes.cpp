// Copyright 2026 vtp developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#include "vtp/core/bytes.hpp"
#include "vtp/core/errors.hpp"

namespace vtp::core
{

namespace
{
constexpr char HEX[] = "0123456789abcdef";

int
nibble(char c)
{
    if (c >= '0' && c <= '9')
        return c - '0';
    if (c >= 'a' && c <= 'f')
        return c - 'a' + 10;
    if (c >= 'A' && c <= 'F')
        return c - 'A' + 10;
    return -1;
}
}

std::string
hexEncode(BytesView b)
{
    std::string out;
    out.reserve(b.size() * 2);
    for (auto byte : b)
    {
        out.push_back(HEX[byte >> 4]);
        out.push_back(HEX[byte & 0x0f]);
    }
    return out;
}

Bytes
hexDecode(std::string_view hex)
{
    if (hex.size() % 2 != 0)
        fail(Errc::BadEncoding, "odd-length hex string");
    Bytes out;
    out.reserve(hex.size() / 2);
    for (std::size_t i = 0; i < hex.size(); i += 2)
    {
        int hi = nibble(hex[i]);
        int lo = nibble(hex[i + 1]);
        if (hi < 0 || lo < 0)
            fail(Errc::BadEncoding, "non-hex character");
        out.push_back(static_cast<std::uint8_t>((hi << 4) | lo));
    }
    return out;
}

bool
isLowerHex(std::string_view s, std::size_t expectedLen)
{
    if (s.size() != expectedLen)
        return false;
    for (char c : s)
        if (!((c >= '0' && c <= '9') || (c >= 'a' && c <= 'f')))
            return false;
    return true;
}

}
