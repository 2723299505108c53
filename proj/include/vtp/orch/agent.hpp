// Copyright 2026 vtp developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include "vtp/identity/manifest.hpp"
#include "vtp/orch/mandate.hpp"
#include "vtp/orch/task.hpp"
#include "vtp/verify/telemetry.hpp"

#include <string>
#include <vector>

namespace vtp::orch
{

enum class AgentBehavior
{
    Honest,
    WrongOutput,
    OverBudget,
    NonResponsive,
    InjectionCompromised,
};

std::string_view agentBehaviorName(AgentBehavior b);
AgentBehavior agentBehaviorFromName(std::string_view name);

// What the cart commits the agent to produce; the facilitator derives the
// same value independently when checking the output.
std::string expectedOrderConfirmation(CartMandate const& cart);

// Everything one scripted execution emits.
struct AgentWorkProduct
{
    bool responded{false};
    std::string modelRequest, modelResponse;
    std::string toolRequest, toolResponse;
    std::string apiRequest, apiResponse;
    std::string output;
    std::vector<verify::TelemetrySample> samples;
    core::Bytes runtimeCodeBytes; // what the enclave actually measured
};

// Deterministic scripted worker; behaviour is a config knob so that
// misbehaviour is reproducible in threat tests.
class ScriptedAgent
{
  public:
    ScriptedAgent(identity::AgentManifest manifest, AgentBehavior behavior,
                  core::Bytes codeBytes)
        : mManifest(std::move(manifest))
        , mBehavior(behavior)
        , mCodeBytes(std::move(codeBytes))
    {
    }

    identity::AgentManifest const&
    manifest() const
    {
        return mManifest;
    }

    AgentBehavior
    behavior() const
    {
        return mBehavior;
    }

    core::Bytes const&
    registeredCodeBytes() const
    {
        return mCodeBytes;
    }

    AgentWorkProduct execute(ExecutionEnvelope const& envelope,
                             CartMandate const& cart,
                             core::Amount const& budgetCap,
                             core::Tick tick) const;

  private:
    identity::AgentManifest mManifest;
    AgentBehavior mBehavior;
    core::Bytes mCodeBytes;
};

}
