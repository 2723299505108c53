// Copyright 2026 vtp developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include "vtp/identity/contract.hpp"
#include "vtp/identity/manifest.hpp"
#include "vtp/orch/agent.hpp"
#include "vtp/orch/pipeline.hpp"
#include "vtp/settle/chain.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace vtp::gateway
{

struct AgentConfig
{
    identity::AgentManifest manifest;
    orch::AgentBehavior behavior{orch::AgentBehavior::Honest};
    identity::AgentContract contract;
};

struct ValidatorConfig
{
    std::uint32_t n{4};
    std::uint32_t f{1};
    std::set<std::uint32_t> byzantineMask;
};

// One scenario: rails, agent roster with misbehaviour knobs, the task,
// and validator parameters. Deterministic given the seed.
struct RunConfig
{
    std::uint64_t seed{1};
    std::vector<settle::RailConfig> rails;
    std::vector<AgentConfig> agents;
    orch::Quote merchantQuote;
    orch::TaskRequest task;
    ValidatorConfig validators;
    std::uint32_t notaryCount{3};
    bool userApproves{true};
    bool raiseChallenge{false};
    core::Tick challengeWindowTicks{10};
    std::optional<settle::Tier> tierOverride;

    core::Json toJson() const;
    static RunConfig fromJson(core::Json const& j); // ConfigInvalid
    static RunConfig fromFile(std::string const& path); // IoError
};

}
