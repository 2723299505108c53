// Copyright 2026 vtp developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#include "vtp/verify/audit.hpp"
#include "vtp/core/errors.hpp"
#include "vtp/core/sha256.hpp"

#include <istream>
#include <ostream>

namespace vtp::verify
{

core::Json
AuditEvent::toJson() const
{
    return core::Json{{"seq", seq},
                      {"event_type", eventType},
                      {"workflow_id", workflowId},
                      {"escrow_id", escrowId},
                      {"payload_hash", payloadHash.hex()},
                      {"prev_hash", prevHash.hex()},
                      {"tick", tick}};
}

AuditEvent
AuditEvent::fromJson(core::Json const& j)
{
    AuditEvent e;
    e.seq = j.at("seq").get<std::uint64_t>();
    e.eventType = j.at("event_type").get<std::string>();
    e.workflowId = j.at("workflow_id").get<std::string>();
    e.escrowId = j.at("escrow_id").get<std::string>();
    e.payloadHash =
        core::Digest::fromHex(j.at("payload_hash").get<std::string>());
    e.prevHash = core::Digest::fromHex(j.at("prev_hash").get<std::string>());
    e.tick = j.at("tick").get<core::Tick>();
    return e;
}

AuditEvent const&
AuditLedger::append(std::string const& eventType, std::string const& workflowId,
                    std::string const& escrowId, core::Json const& payload)
{
    AuditEvent e;
    e.seq = mEvents.size() + 1;
    e.eventType = eventType;
    e.workflowId = workflowId;
    e.escrowId = escrowId;
    e.payloadHash = core::hashOfJson(payload);
    e.prevHash = headHash();
    e.tick = mClock.tick;
    mEvents.push_back(std::move(e));
    return mEvents.back();
}

core::Digest
AuditLedger::headHash() const
{
    if (mEvents.empty())
        return core::Digest::zero();
    return core::hashOfJson(mEvents.back().toJson());
}

bool
AuditLedger::verifyChain(std::vector<AuditEvent> const& events)
{
    core::Digest prev = core::Digest::zero();
    std::uint64_t seq = 0;
    for (auto const& e : events)
    {
        if (e.seq != ++seq)
            return false;
        if (e.prevHash != prev)
            return false;
        prev = core::hashOfJson(e.toJson());
    }
    return true;
}

void
AuditLedger::exportJsonl(std::ostream& out) const
{
    for (auto const& e : mEvents)
        out << core::canonicalSerialize(e.toJson()) << "\n";
    out << core::canonicalSerialize(
               core::Json{{"chain_head", headHash().hex()}})
        << "\n";
}

bool
AuditLedger::verifyJsonl(std::istream& in)
{
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line))
    {
        if (!line.empty())
            lines.push_back(line);
    }
    if (lines.empty())
        return true; // vacuously valid

    try
    {
        core::Json headRecord = core::Json::parse(lines.back());
        if (!headRecord.is_object() || !headRecord.contains("chain_head"))
            return false;
        auto head = core::Digest::fromHex(
            headRecord.at("chain_head").get<std::string>());

        std::vector<AuditEvent> events;
        for (std::size_t i = 0; i + 1 < lines.size(); ++i)
        {
            auto j = core::Json::parse(lines[i]);
            // the chain covers the exact bytes on disk
            if (core::canonicalSerialize(j) != lines[i])
                return false;
            events.push_back(AuditEvent::fromJson(j));
        }
        if (!verifyChain(events))
            return false;
        core::Digest expected = events.empty()
                                    ? core::Digest::zero()
                                    : core::hashOfJson(events.back().toJson());
        return head == expected;
    }
    catch (...)
    {
        return false;
    }
}

}
