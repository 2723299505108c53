// Copyright 2026 vtp developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include "vtp/core/canonical.hpp"
#include "vtp/core/digest.hpp"
#include "vtp/core/errors.hpp"
#include "vtp/core/rng.hpp"

#include <optional>
#include <string>

namespace vtp::test
{

template <typename F>
std::optional<Errc>
errcOf(F&& f)
{
    try
    {
        f();
    }
    catch (Error const& e)
    {
        return e.code();
    }
    return std::nullopt;
}

// Random record within the canonical profile (no floats, string keys).
inline core::Json
randomRecord(core::Rng& rng, int depth = 0)
{
    using core::Json;
    auto randomString = [&rng]() {
        static char const* words[] = {"alpha", "beta",  "gamma", "delta",
                                      "cart",  "rail",  "proof", "escrow",
                                      "tick",  "agent", "root",  "scope"};
        std::string s = words[rng.nextBelow(12)];
        s += std::to_string(rng.nextBelow(1000));
        return s;
    };
    std::uint64_t kind = rng.nextBelow(depth >= 3 ? 4 : 6);
    switch (kind)
    {
    case 0:
        return Json(nullptr);
    case 1:
        return Json(rng.nextBelow(2) == 0);
    case 2:
        return Json(static_cast<std::int64_t>(rng.nextU64() >> 16) -
                    100000000);
    case 3:
        return Json(randomString());
    case 4:
    {
        Json arr = Json::array();
        auto n = rng.nextBelow(4);
        for (std::uint64_t i = 0; i < n; ++i)
            arr.push_back(randomRecord(rng, depth + 1));
        return arr;
    }
    default:
    {
        Json obj = Json::object();
        auto n = rng.nextBelow(4) + 1;
        for (std::uint64_t i = 0; i < n; ++i)
            obj[randomString()] = randomRecord(rng, depth + 1);
        return obj;
    }
    }
}

}
