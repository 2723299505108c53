// Copyright 2026 vtp developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include "vtp/core/canonical.hpp"
#include "vtp/core/digest.hpp"
#include "vtp/core/ids.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace vtp::verify
{

// One hash-chained lifecycle event. prev_hash of event k is the hash of
// the canonical serialization of event k-1; the genesis prev_hash is 32
// zero bytes.
struct AuditEvent
{
    std::uint64_t seq{0};
    std::string eventType;
    std::string workflowId;
    std::string escrowId;
    core::Digest payloadHash;
    core::Digest prevHash;
    core::Tick tick{0};

    core::Json toJson() const;
    static AuditEvent fromJson(core::Json const& j);
};

// Append-only receipt ledger; single appender, concurrent reads.
class AuditLedger
{
  public:
    explicit AuditLedger(core::Clock const& clock) : mClock(clock)
    {
    }

    AuditEvent const& append(std::string const& eventType,
                             std::string const& workflowId,
                             std::string const& escrowId,
                             core::Json const& payload);

    std::vector<AuditEvent> const&
    events() const
    {
        return mEvents;
    }

    // Hash of the canonical form of the last event; zero when empty.
    core::Digest headHash() const;

    // Walks the chain recomputing every link.
    static bool verifyChain(std::vector<AuditEvent> const& events);

    // JSON Lines: one canonical event per line, then one trailing
    // {"chain_head": <hex>} line pinning the final event. Without the head
    // line a mutation confined to the last event would be undetectable
    // from the file alone.
    void exportJsonl(std::ostream& out) const;
    static bool verifyJsonl(std::istream& in);

  private:
    core::Clock const& mClock;
    std::vector<AuditEvent> mEvents;
};

}
