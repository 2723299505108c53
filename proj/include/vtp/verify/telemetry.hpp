// Copyright 2026 vtp developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include "vtp/core/amount.hpp"
#include "vtp/core/canonical.hpp"
#include "vtp/core/digest.hpp"
#include "vtp/core/ids.hpp"

#include <map>
#include <string>
#include <vector>

namespace vtp::verify
{

struct TelemetrySample
{
    std::string workflowId;
    std::string stepLabel;
    std::uint64_t latencyMs{0};
    std::uint64_t tokens{0};
    core::Amount cost;
    core::Tick tick{0};

    core::Json toJson() const;
};

// Raw samples stay off-chain; only the session hash is anchored.
class TelemetryStore
{
  public:
    void record(TelemetrySample sample);

    std::vector<TelemetrySample> const&
    samples(std::string const& workflowId) const;

    // Hash of the canonical sample list in arrival order; defined for
    // zero samples too (hash of the empty list).
    core::Digest sessionHash(std::string const& workflowId) const;

    core::Amount totalCost(std::string const& workflowId,
                           std::string const& currency) const;

    core::Json toJson() const;

  private:
    std::map<std::string, std::vector<TelemetrySample>> mByWorkflow;
    static std::vector<TelemetrySample> const sEmpty;
};

}
