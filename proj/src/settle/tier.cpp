// Copyright 2026 vtp developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#include "vtp/settle/tier.hpp"
#include "vtp/core/errors.hpp"

namespace vtp::settle
{

Tier
classifyTier(core::Amount const& amount)
{
    if (amount.minorUnits == 0)
        fail(Errc::ZeroAmount, "tier classification needs a positive amount");
    if (amount.minorUnits < 1'000)
        return Tier::Tier1;
    if (amount.minorUnits <= 100'000)
        return Tier::Tier2;
    return Tier::Tier3;
}

std::string_view
tierName(Tier t)
{
    switch (t)
    {
    case Tier::Tier1:
        return "Tier1";
    case Tier::Tier2:
        return "Tier2";
    case Tier::Tier3:
        return "Tier3";
    }
    return "?";
}

Tier
tierFromName(std::string_view name)
{
    if (name == "Tier1")
        return Tier::Tier1;
    if (name == "Tier2")
        return Tier::Tier2;
    if (name == "Tier3")
        return Tier::Tier3;
    fail(Errc::BadEncoding, "unknown tier: " + std::string(name));
}

}
