// Copyright 2026 vtp developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include "vtp/core/amount.hpp"
#include "vtp/core/canonical.hpp"
#include "vtp/core/digest.hpp"
#include "vtp/identity/ajwt.hpp"
#include "vtp/orch/task.hpp"

#include <map>
#include <string>
#include <vector>

namespace vtp::orch
{

struct CartItem
{
    std::string sku;
    std::string description;
    core::Amount price;

    core::Json toJson() const;
    static CartItem fromJson(core::Json const& j);
};

// Each mandate's hash covers its canonical record without the hash field;
// the next mandate embeds it, chaining intent -> cart -> payment.
struct IntentMandate
{
    std::string userId;
    std::string intentText;
    core::Json constraints;
    core::Digest hash;

    core::Json bodyJson() const;
    core::Json toJson() const;
};

struct CartMandate
{
    std::vector<CartItem> items;
    std::string merchantAgentId;
    core::Digest intentHash;
    core::Digest hash;

    core::Amount total(std::string const& currency) const;
    core::Json bodyJson() const;
    core::Json toJson() const;
};

struct PaymentMandate
{
    core::Amount amount;
    std::string railId;
    std::string payerWalletRef;
    std::string payeeAgentId;
    std::string escrowId;
    core::Digest cartHash;
    core::Digest hash;

    core::Json bodyJson() const;
    core::Json toJson() const;
};

struct MandateSet
{
    IntentMandate intent;
    CartMandate cart;
    PaymentMandate payment;

    core::Json toJson() const;
};

// Recompute every hash and link from stored content.
bool verifyMandateChain(MandateSet const& set);

// Audit-rail store for mandates; doubles as the authorization service's
// Payment Mandate lookup.
class MandateStore : public identity::PaymentMandateLookup
{
  public:
    void put(std::string const& workflowId, MandateSet set);
    bool has(std::string const& workflowId) const;
    MandateSet const& get(std::string const& workflowId) const;
    MandateSet& mutableSet(std::string const& workflowId); // tamper hook

    bool paymentMandateExists(core::Digest const& hash) const override;

    core::Json toJson() const;

  private:
    std::map<std::string, MandateSet> mByWorkflow;
};

}
