// Copyright 2026 vtp developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include "vtp/core/bytes.hpp"

#include <string>

namespace vtp::core
{

// Unpadded base64url, the token wire alphabet.
std::string base64urlEncode(BytesView data);

// Throws Error{BadEncoding} on characters outside the alphabet.
Bytes base64urlDecode(std::string_view text);

}
