// Copyright 2026 vtp developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include "vtp/core/amount.hpp"
#include "vtp/core/canonical.hpp"
#include "vtp/core/digest.hpp"
#include "vtp/core/ids.hpp"
#include "vtp/identity/ajwt.hpp"

#include <optional>
#include <string>

namespace vtp::orch
{

struct TickRange
{
    core::Tick start{0};
    core::Tick end{0}; // exclusive

    bool
    empty() const
    {
        return end <= start;
    }
};

struct TaskRequest
{
    std::string userId;
    std::string intentText;
    std::string requiredCapability;
    core::Amount budgetCap;
    std::optional<std::string> railPreference;
    TickRange validityWindow;

    core::Json toJson() const;
    static TaskRequest fromJson(core::Json const& j);
};

// What the executor hands the chosen service agent.
struct ExecutionEnvelope
{
    std::string taskId;
    std::string workflowId;
    std::string agentId;
    core::Json scopeSummary; // budget, capability, validity
    identity::AJwt ajwt;
    core::Digest intentHash;

    core::Json toJson() const;
    core::Digest digest() const;
};

}
