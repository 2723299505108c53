// Copyright 2026 vtp developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#include "vtp/orch/agent.hpp"
#include "vtp/core/errors.hpp"

namespace vtp::orch
{

std::string_view
agentBehaviorName(AgentBehavior b)
{
    switch (b)
    {
    case AgentBehavior::Honest:
        return "honest";
    case AgentBehavior::WrongOutput:
        return "wrong_output";
    case AgentBehavior::OverBudget:
        return "over_budget";
    case AgentBehavior::NonResponsive:
        return "non_responsive";
    case AgentBehavior::InjectionCompromised:
        return "injection_compromised";
    }
    return "?";
}

AgentBehavior
agentBehaviorFromName(std::string_view name)
{
    for (auto b : {AgentBehavior::Honest, AgentBehavior::WrongOutput,
                   AgentBehavior::OverBudget, AgentBehavior::NonResponsive,
                   AgentBehavior::InjectionCompromised})
        if (agentBehaviorName(b) == name)
            return b;
    fail(Errc::ConfigInvalid, "unknown behavior: " + std::string(name));
}

std::string
expectedOrderConfirmation(CartMandate const& cart)
{
    return "order-confirmed:" + cart.hash.hex().substr(0, 16);
}

AgentWorkProduct
ScriptedAgent::execute(ExecutionEnvelope const& envelope,
                       CartMandate const& cart, core::Amount const& budgetCap,
                       core::Tick tick) const
{
    AgentWorkProduct work;
    work.runtimeCodeBytes = mCodeBytes;

    if (mBehavior == AgentBehavior::NonResponsive)
        return work; // never submits output

    if (mBehavior == AgentBehavior::InjectionCompromised)
    {
        // a prompt injection rewrote the runtime before execution
        work.runtimeCodeBytes.insert(work.runtimeCodeBytes.end(),
                                     {'<', 'i', 'n', 'j', '>'});
    }

    std::string skuList;
    for (auto const& item : cart.items)
        skuList += (skuList.empty() ? "" : ",") + item.sku;

    work.modelRequest = "plan task " + envelope.taskId + " intent " +
                        envelope.intentHash.hex().substr(0, 16);
    work.modelResponse = "plan: purchase [" + skuList + "]";
    work.toolRequest = "checkout cart " + cart.hash.hex().substr(0, 16);

    std::string confirmation = expectedOrderConfirmation(cart);
    if (mBehavior == AgentBehavior::WrongOutput)
        confirmation = "order-confirmed:WRONGITEM00000000";
    work.toolResponse = confirmation;
    work.apiRequest = "order status " + cart.hash.hex().substr(0, 16);
    work.apiResponse = confirmation;
    work.output = confirmation;
    work.responded = true;

    // telemetry: three steps, costs within (or over) budget
    std::uint64_t const base = mManifest.declaredCost.minorUnits;
    std::uint64_t modelCost = base / 2;
    std::uint64_t toolCost = base / 4;
    if (mBehavior == AgentBehavior::OverBudget)
    {
        modelCost = budgetCap.minorUnits;
        toolCost = budgetCap.minorUnits / 2 + 1;
    }
    std::string const currency = budgetCap.currency;
    work.samples = {
        verify::TelemetrySample{envelope.workflowId, "model", 35, 820,
                                core::Amount{modelCost, currency}, tick},
        verify::TelemetrySample{envelope.workflowId, "tool", 12, 0,
                                core::Amount{toolCost, currency}, tick + 1},
        verify::TelemetrySample{envelope.workflowId, "api", 8, 0,
                                core::Amount{0, currency}, tick + 2},
    };
    return work;
}

}
