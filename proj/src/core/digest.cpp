// Copyright 2026 vtp developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#include "vtp/core/digest.hpp"
#include "vtp/core/errors.hpp"

#include <algorithm>

namespace vtp::core
{

Digest
Digest::zero()
{
    return Digest{};
}

Digest
Digest::fromHex(std::string_view hex)
{
    if (hex.size() != 64)
        fail(Errc::BadEncoding, "digest hex must be 64 characters");
    Bytes raw = hexDecode(hex);
    Digest d;
    std::copy(raw.begin(), raw.end(), d.bytes.begin());
    return d;
}

std::string
Digest::hex() const
{
    return hexEncode(view());
}

}
