// Copyright 2026 vtp developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include "vtp/core/digest.hpp"

#include <json.hpp>

#include <string>

namespace vtp::core
{

// Structured records are nlohmann values restricted to a canonical profile:
// objects (string keys), arrays, strings, integers, booleans, null.
// Digests enter as their 64-char lowercase hex rendering.
using Json = nlohmann::json;

// Deterministic byte form: keys sorted bytewise, no insignificant
// whitespace, integers in shortest decimal form. Equal values always
// serialize to identical bytes. Throws Error{NonCanonicalValue} on
// floating-point or binary content.
std::string canonicalSerialize(Json const& value);

// sha256(canonicalSerialize(value)); the commitment used everywhere.
Digest hashOfJson(Json const& value);

inline Json
jsonOf(Digest const& d)
{
    return Json(d.hex());
}

}
