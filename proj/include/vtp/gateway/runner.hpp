// Copyright 2026 vtp developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include "vtp/gateway/config.hpp"
#include "vtp/identity/ajwt.hpp"
#include "vtp/identity/contract.hpp"
#include "vtp/identity/registry.hpp"
#include "vtp/orch/agent.hpp"
#include "vtp/orch/mandate.hpp"
#include "vtp/orch/pipeline.hpp"
#include "vtp/settle/adapter.hpp"
#include "vtp/settle/chain.hpp"
#include "vtp/settle/escrow.hpp"
#include "vtp/settle/wallet.hpp"
#include "vtp/verify/audit.hpp"
#include "vtp/verify/notary.hpp"
#include "vtp/verify/pote.hpp"
#include "vtp/verify/quorum.hpp"
#include "vtp/verify/telemetry.hpp"

#include <map>
#include <memory>
#include <string>

namespace vtp::gateway
{

// Every store and service of one run, wired together. Declaration order
// is construction order; later members may reference earlier ones.
struct World
{
    explicit World(RunConfig cfg);

    World(World const&) = delete;
    World& operator=(World const&) = delete;

    RunConfig config;
    core::Clock clock;
    core::Rng rng;
    core::IdGen ids;
    verify::AuditLedger audit;
    identity::Registry registry;
    orch::MandateStore mandates;
    verify::TelemetryStore telemetry;
    orch::Facilitator facilitator;
    identity::AuthorizationService authz;
    verify::NotaryPool notaries;
    verify::ValidatorSet validators;
    verify::AttestationAuthority teeAuthority;
    verify::VerificationHub hub;
    settle::RailHub rails;
    settle::WalletStore wallets;
    settle::EscrowTable escrows;
    settle::ExplorerIndex explorer;
    std::map<std::string, settle::RailAdapter> adapters;
    std::map<std::string, orch::ScriptedAgent> agents;
    std::map<std::string, identity::AgentContract> contracts;
    verify::TrustAnchors anchors;
    core::KeyPair userKeys; // signs cart approvals
    core::KeyPair popKeys;  // the user agent shim's PoP keys

    settle::RailAdapter& adapter(std::string const& railId);

    // Full public control-plane state: registry, mandates, workflows,
    // escrows, audit, anchors, explorer, telemetry, wallet directory.
    core::Json controlPlaneJson() const;

    // Ground truth for the key-isolation scan: every secret key in the
    // process (wallets and all service/issuer/user keys).
    std::vector<core::Bytes> allSecretMaterial() const;
};

struct RunResult
{
    core::Json transcript;
    core::Digest transcriptDigest;
    std::string workflowId;
    std::string escrowId;
    std::string sessionId;
    std::string finalEscrowStatus;
    std::string outcome; // settled | refunded | expired | aborted
    bool success{false};
};

// The deterministic scheduler: executes the full lifecycle for one task
// against one world and records the transcript.
class Runner
{
  public:
    explicit Runner(RunConfig config);

    RunResult runFlow();

    World&
    world()
    {
        return *mWorld;
    }

    World const&
    world() const
    {
        return *mWorld;
    }

  private:
    void note(std::string const& module, std::string const& eventType,
              core::Json refs);
    void advanceRail(std::string const& railId, core::Tick n);
    identity::PopProof popOver(identity::AJwt const& token,
                               core::Digest const& requestDigest) const;
    RunResult finish(orch::WorkflowRecord& wf, std::string outcome);

    std::unique_ptr<World> mWorld;
    core::Json mEntries = core::Json::array();
    core::Json mRequiredProofs = core::Json::array();
};

}
