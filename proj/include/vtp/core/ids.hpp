// Copyright 2026 vtp developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include "vtp/core/errors.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace vtp::core
{

using Tick = std::uint64_t;

// Logical time; the simulation has no wall clock.
struct Clock
{
    Tick tick{0};

    Tick
    advance(Tick n = 1)
    {
        tick += n;
        return tick;
    }
};

// "<family>:<network>", exactly one separator.
struct RailId
{
    std::string family;
    std::string network;

    static RailId
    parse(std::string const& s)
    {
        auto pos = s.find(':');
        if (pos == std::string::npos || pos == 0 || pos + 1 == s.size() ||
            s.find(':', pos + 1) != std::string::npos)
            fail(Errc::BadEncoding,
                 "rail_id must be '<family>:<network>': " + s);
        return RailId{s.substr(0, pos), s.substr(pos + 1)};
    }

    std::string
    str() const
    {
        return family + ":" + network;
    }
};

// Deterministic per-run identifier mint: "<prefix>-000001", ...
class IdGen
{
  public:
    std::string
    next(std::string_view prefix)
    {
        auto n = ++mCounters[std::string(prefix)];
        char buf[16];
        std::snprintf(buf, sizeof(buf), "%06llu",
                      static_cast<unsigned long long>(n));
        return std::string(prefix) + "-" + buf;
    }

  private:
    std::map<std::string, std::uint64_t> mCounters;
};

}
