// Copyright 2026 vtp developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include "vtp/gateway/config.hpp"

#include <string>

namespace vtp::gateway
{

struct AttackReport
{
    std::string scenario;
    bool blocked{false};
    std::string mechanism;
    core::Json evidence;

    core::Json toJson() const;
};

// phantom_deposit | unverified_payout | key_exfiltration |
// cross_rail_replay. Each drives the attack against a live run built
// from `base` and reports whether the defense held.
AttackReport runAttack(std::string const& scenario, RunConfig base);

// Two-rail Tier-2 scenario used by `attack` and the threat tests.
RunConfig defaultAttackConfig(std::uint64_t seed);

}
