// Copyright 2026 vtp developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#include "vtp/core/canonical.hpp"
#include "vtp/core/errors.hpp"
#include "vtp/core/sha256.hpp"

namespace vtp::core
{

namespace
{

void
checkCanonical(Json const& v)
{
    switch (v.type())
    {
    case Json::value_t::null:
    case Json::value_t::string:
    case Json::value_t::boolean:
    case Json::value_t::number_integer:
    case Json::value_t::number_unsigned:
        return;
    case Json::value_t::number_float:
        fail(Errc::NonCanonicalValue, "floating-point value");
    case Json::value_t::binary:
        fail(Errc::NonCanonicalValue, "binary value");
    case Json::value_t::discarded:
        fail(Errc::NonCanonicalValue, "discarded value");
    case Json::value_t::object:
        for (auto const& [key, item] : v.items())
        {
            (void)key; // std::map keeps keys in bytewise order
            checkCanonical(item);
        }
        return;
    case Json::value_t::array:
        for (auto const& item : v)
            checkCanonical(item);
        return;
    }
}

}

std::string
canonicalSerialize(Json const& value)
{
    checkCanonical(value);
    // nlohmann objects are std::map-backed: keys already sorted bytewise.
    return value.dump();
}

Digest
hashOfJson(Json const& value)
{
    return sha256(canonicalSerialize(value));
}

}
