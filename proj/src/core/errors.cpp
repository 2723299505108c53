// Copyright 2026 vtp developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#include "vtp/core/errors.hpp"

namespace vtp
{

std::string_view
errcName(Errc c)
{
    switch (c)
    {
    case Errc::NonCanonicalValue:
        return "NonCanonicalValue";
    case Errc::EmptyLeafSet:
        return "EmptyLeafSet";
    case Errc::BadEncoding:
        return "BadEncoding";
    case Errc::Overflow:
        return "Overflow";
    case Errc::DuplicateAgentId:
        return "DuplicateAgentId";
    case Errc::DuplicateDomainName:
        return "DuplicateDomainName";
    case Errc::NotFound:
        return "NotFound";
    case Errc::UnknownAgent:
        return "UnknownAgent";
    case Errc::ManifestTampered:
        return "ManifestTampered";
    case Errc::ScopeMandateMismatch:
        return "ScopeMandateMismatch";
    case Errc::InvalidScope:
        return "InvalidScope";
    case Errc::Expired:
        return "Expired";
    case Errc::NotYetValid:
        return "NotYetValid";
    case Errc::BadIssuerSig:
        return "BadIssuerSig";
    case Errc::BadPoP:
        return "BadPoP";
    case Errc::Replayed:
        return "Replayed";
    case Errc::ChecksumDrift:
        return "ChecksumDrift";
    case Errc::WindowExpired:
        return "WindowExpired";
    case Errc::BudgetExceeded:
        return "BudgetExceeded";
    case Errc::UnknownMerchant:
        return "UnknownMerchant";
    case Errc::NoAgentFound:
        return "NoAgentFound";
    case Errc::EscrowNotOpen:
        return "EscrowNotOpen";
    case Errc::BadToken:
        return "BadToken";
    case Errc::NoTelemetry:
        return "NoTelemetry";
    case Errc::ApprovalRejected:
        return "ApprovalRejected";
    case Errc::NoNotary:
        return "NoNotary";
    case Errc::WrongState:
        return "WrongState";
    case Errc::NoQuorum:
        return "NoQuorum";
    case Errc::MissingProofObject:
        return "MissingProofObject";
    case Errc::ContractFailed:
        return "ContractFailed";
    case Errc::Conflict:
        return "Conflict";
    case Errc::ZeroAmount:
        return "ZeroAmount";
    case Errc::UnknownRail:
        return "UnknownRail";
    case Errc::DuplicateEscrow:
        return "DuplicateEscrow";
    case Errc::UnknownWallet:
        return "UnknownWallet";
    case Errc::IllegalTransition:
        return "IllegalTransition";
    case Errc::UnknownEscrow:
        return "UnknownEscrow";
    case Errc::PoTEMissing:
        return "PoTEMissing";
    case Errc::MixedTier:
        return "MixedTier";
    case Errc::MixedRail:
        return "MixedRail";
    case Errc::TxNotFound:
        return "TxNotFound";
    case Errc::ConfigInvalid:
        return "ConfigInvalid";
    case Errc::IoError:
        return "IoError";
    }
    return "UnknownError";
}

Error::Error(Errc code, std::string const& detail)
    : std::runtime_error(std::string(errcName(code)) +
                         (detail.empty() ? "" : ": " + detail))
    , mCode(code)
{
}

void
fail(Errc code, std::string const& detail)
{
    throw Error(code, detail);
}

}
