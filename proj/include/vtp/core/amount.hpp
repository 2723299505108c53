// Copyright 2026 vtp developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include "vtp/core/canonical.hpp"
#include "vtp/core/errors.hpp"

#include <cstdint>
#include <string>

namespace vtp::core
{

// Integer minor units plus a currency code; no fractional representation
// anywhere. $1 maps to 100 minor units. All arithmetic is checked.
struct Amount
{
    std::uint64_t minorUnits{0};
    std::string currency{"USD"};

    Amount
    plus(Amount const& other) const
    {
        requireSameCurrency(other);
        std::uint64_t sum;
        if (__builtin_add_overflow(minorUnits, other.minorUnits, &sum))
            fail(Errc::Overflow, "amount addition overflow");
        return Amount{sum, currency};
    }

    Amount
    minus(Amount const& other) const
    {
        requireSameCurrency(other);
        if (other.minorUnits > minorUnits)
            fail(Errc::Overflow, "amount subtraction underflow");
        return Amount{minorUnits - other.minorUnits, currency};
    }

    bool
    operator==(Amount const& other) const
    {
        return minorUnits == other.minorUnits && currency == other.currency;
    }

    Json
    toJson() const
    {
        return Json{{"minor_units", minorUnits}, {"currency", currency}};
    }

    static Amount
    fromJson(Json const& j)
    {
        return Amount{j.at("minor_units").get<std::uint64_t>(),
                      j.at("currency").get<std::string>()};
    }

  private:
    void
    requireSameCurrency(Amount const& other) const
    {
        if (currency != other.currency)
            fail(Errc::Overflow,
                 "currency mismatch: " + currency + " vs " + other.currency);
    }
};

}
