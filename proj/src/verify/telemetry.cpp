// Copyright 2026 vtp developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#include "vtp/verify/telemetry.hpp"

namespace vtp::verify
{

std::vector<TelemetrySample> const TelemetryStore::sEmpty;

core::Json
TelemetrySample::toJson() const
{
    return core::Json{{"workflow_id", workflowId}, {"step_label", stepLabel},
                      {"latency_ms", latencyMs},   {"tokens", tokens},
                      {"cost", cost.toJson()},     {"tick", tick}};
}

void
TelemetryStore::record(TelemetrySample sample)
{
    mByWorkflow[sample.workflowId].push_back(std::move(sample));
}

std::vector<TelemetrySample> const&
TelemetryStore::samples(std::string const& workflowId) const
{
    auto it = mByWorkflow.find(workflowId);
    return it == mByWorkflow.end() ? sEmpty : it->second;
}

core::Digest
TelemetryStore::sessionHash(std::string const& workflowId) const
{
    auto list = core::Json::array();
    for (auto const& s : samples(workflowId))
        list.push_back(s.toJson());
    return core::hashOfJson(list);
}

core::Amount
TelemetryStore::totalCost(std::string const& workflowId,
                          std::string const& currency) const
{
    core::Amount total{0, currency};
    for (auto const& s : samples(workflowId))
        total = total.plus(s.cost);
    return total;
}

core::Json
TelemetryStore::toJson() const
{
    auto j = core::Json::object();
    for (auto const& [wf, list] : mByWorkflow)
    {
        auto arr = core::Json::array();
        for (auto const& s : list)
            arr.push_back(s.toJson());
        j[wf] = std::move(arr);
    }
    return j;
}

}
