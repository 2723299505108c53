// Copyright 2026 vtp developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include "vtp/core/amount.hpp"

#include <string_view>

namespace vtp::settle
{

// Risk-adaptive verification rigor by transaction value:
//   Tier1  < $10        (amount < 1_000 minor units)
//   Tier2  $10..$1,000  (1_000 <= amount <= 100_000)
//   Tier3  > $1,000     (amount > 100_000)
enum class Tier
{
    Tier1 = 1,
    Tier2 = 2,
    Tier3 = 3,
};

Tier classifyTier(core::Amount const& amount); // throws ZeroAmount

std::string_view tierName(Tier t);
Tier tierFromName(std::string_view name);

}
