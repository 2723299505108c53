// Copyright 2026 vtp developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#include "vtp/orch/mandate.hpp"
#include "vtp/core/errors.hpp"

namespace vtp::orch
{

core::Json
TaskRequest::toJson() const
{
    return core::Json{
        {"user_id", userId},
        {"intent_text", intentText},
        {"required_capability", requiredCapability},
        {"budget_cap", budgetCap.toJson()},
        {"rail_preference",
         railPreference ? core::Json(*railPreference) : core::Json(nullptr)},
        {"validity_window", core::Json{{"start", validityWindow.start},
                                       {"end", validityWindow.end}}}};
}

TaskRequest
TaskRequest::fromJson(core::Json const& j)
{
    TaskRequest r;
    r.userId = j.at("user_id").get<std::string>();
    r.intentText = j.at("intent_text").get<std::string>();
    r.requiredCapability = j.at("required_capability").get<std::string>();
    r.budgetCap = core::Amount::fromJson(j.at("budget_cap"));
    if (j.contains("rail_preference") && !j.at("rail_preference").is_null())
        r.railPreference = j.at("rail_preference").get<std::string>();
    r.validityWindow.start =
        j.at("validity_window").at("start").get<core::Tick>();
    r.validityWindow.end = j.at("validity_window").at("end").get<core::Tick>();
    if (r.budgetCap.minorUnits == 0)
        fail(Errc::ConfigInvalid, "budget_cap must be positive");
    if (r.validityWindow.empty())
        fail(Errc::ConfigInvalid, "validity_window must be non-empty");
    return r;
}

core::Json
ExecutionEnvelope::toJson() const
{
    return core::Json{{"task_id", taskId},
                      {"workflow_id", workflowId},
                      {"agent_id", agentId},
                      {"scope_summary", scopeSummary},
                      {"ajwt", ajwt.encode()},
                      {"intent_hash", intentHash.hex()}};
}

core::Digest
ExecutionEnvelope::digest() const
{
    return core::hashOfJson(toJson());
}

core::Json
CartItem::toJson() const
{
    return core::Json{{"sku", sku},
                      {"description", description},
                      {"price", price.toJson()}};
}

CartItem
CartItem::fromJson(core::Json const& j)
{
    return CartItem{j.at("sku").get<std::string>(),
                    j.at("description").get<std::string>(),
                    core::Amount::fromJson(j.at("price"))};
}

core::Json
IntentMandate::bodyJson() const
{
    return core::Json{{"user_id", userId},
                      {"intent_text", intentText},
                      {"constraints", constraints}};
}

core::Json
IntentMandate::toJson() const
{
    auto j = bodyJson();
    j["hash"] = hash.hex();
    return j;
}

core::Amount
CartMandate::total(std::string const& currency) const
{
    core::Amount sum{0, currency};
    for (auto const& item : items)
        sum = sum.plus(item.price);
    return sum;
}

core::Json
CartMandate::bodyJson() const
{
    auto arr = core::Json::array();
    for (auto const& item : items)
        arr.push_back(item.toJson());
    return core::Json{{"items", std::move(arr)},
                      {"merchant_agent_id", merchantAgentId},
                      {"intent_hash", intentHash.hex()}};
}

core::Json
CartMandate::toJson() const
{
    auto j = bodyJson();
    j["hash"] = hash.hex();
    return j;
}

core::Json
PaymentMandate::bodyJson() const
{
    return core::Json{{"amount", amount.toJson()},
                      {"rail_id", railId},
                      {"payer_wallet_ref", payerWalletRef},
                      {"payee_agent_id", payeeAgentId},
                      {"escrow_id", escrowId},
                      {"cart_hash", cartHash.hex()}};
}

core::Json
PaymentMandate::toJson() const
{
    auto j = bodyJson();
    j["hash"] = hash.hex();
    return j;
}

core::Json
MandateSet::toJson() const
{
    return core::Json{{"intent", intent.toJson()},
                      {"cart", cart.toJson()},
                      {"payment", payment.toJson()}};
}

bool
verifyMandateChain(MandateSet const& set)
{
    if (core::hashOfJson(set.intent.bodyJson()) != set.intent.hash)
        return false;
    if (core::hashOfJson(set.cart.bodyJson()) != set.cart.hash)
        return false;
    if (core::hashOfJson(set.payment.bodyJson()) != set.payment.hash)
        return false;
    if (set.cart.intentHash != set.intent.hash)
        return false;
    if (set.payment.cartHash != set.cart.hash)
        return false;
    return set.payment.amount ==
           set.cart.total(set.payment.amount.currency);
}

void
MandateStore::put(std::string const& workflowId, MandateSet set)
{
    mByWorkflow[workflowId] = std::move(set);
}

bool
MandateStore::has(std::string const& workflowId) const
{
    return mByWorkflow.contains(workflowId);
}

MandateSet const&
MandateStore::get(std::string const& workflowId) const
{
    auto it = mByWorkflow.find(workflowId);
    if (it == mByWorkflow.end())
        fail(Errc::NotFound, "no mandates for " + workflowId);
    return it->second;
}

MandateSet&
MandateStore::mutableSet(std::string const& workflowId)
{
    auto it = mByWorkflow.find(workflowId);
    if (it == mByWorkflow.end())
        fail(Errc::NotFound, "no mandates for " + workflowId);
    return it->second;
}

bool
MandateStore::paymentMandateExists(core::Digest const& hash) const
{
    for (auto const& [wf, set] : mByWorkflow)
        if (set.payment.hash == hash)
            return true;
    return false;
}

core::Json
MandateStore::toJson() const
{
    auto j = core::Json::object();
    for (auto const& [wf, set] : mByWorkflow)
        j[wf] = set.toJson();
    return j;
}

}
