// Copyright 2026 vtp developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vtp
{

enum class Errc
{
    // core
    NonCanonicalValue,
    EmptyLeafSet,
    BadEncoding,
    Overflow,
    // identity / authorization
    DuplicateAgentId,
    DuplicateDomainName,
    NotFound,
    UnknownAgent,
    ManifestTampered,
    ScopeMandateMismatch,
    InvalidScope,
    Expired,
    NotYetValid,
    BadIssuerSig,
    BadPoP,
    Replayed,
    ChecksumDrift,
    // orchestration
    WindowExpired,
    BudgetExceeded,
    UnknownMerchant,
    NoAgentFound,
    EscrowNotOpen,
    BadToken,
    NoTelemetry,
    ApprovalRejected,
    // verification / audit
    NoNotary,
    WrongState,
    NoQuorum,
    MissingProofObject,
    ContractFailed,
    Conflict,
    // settlement
    ZeroAmount,
    UnknownRail,
    DuplicateEscrow,
    UnknownWallet,
    IllegalTransition,
    UnknownEscrow,
    PoTEMissing,
    MixedTier,
    MixedRail,
    TxNotFound,
    // gateway
    ConfigInvalid,
    IoError,
};

std::string_view errcName(Errc c);

class Error : public std::runtime_error
{
  public:
    Error(Errc code, std::string const& detail);

    Errc
    code() const
    {
        return mCode;
    }

  private:
    Errc mCode;
};

[[noreturn]] void fail(Errc code, std::string const& detail = "");

}
