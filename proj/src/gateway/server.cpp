// Copyright 2026 vtp developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#include "vtp/gateway/server.hpp"
#include "vtp/core/errors.hpp"
#include "vtp/gateway/attacks.hpp"

#include <httplib.h>

#include <sstream>

namespace vtp::gateway
{

namespace
{

int
statusOf(Errc code)
{
    switch (code)
    {
    case Errc::IllegalTransition:
        return 409;
    case Errc::PoTEMissing:
        return 412;
    case Errc::NotFound:
    case Errc::UnknownAgent:
    case Errc::UnknownEscrow:
    case Errc::UnknownRail:
    case Errc::UnknownWallet:
    case Errc::TxNotFound:
        return 404;
    default:
        return 400;
    }
}

void
sendJson(httplib::Response& res, int status, core::Json const& body)
{
    res.status = status;
    res.set_content(core::canonicalSerialize(body), "application/json");
}

void
sendError(httplib::Response& res, Errc code, std::string const& detail)
{
    sendJson(res, statusOf(code),
             core::Json{{"error", std::string(errcName(code))},
                        {"detail", detail}});
}

}

ApiServer::ApiServer() : mServer(std::make_unique<httplib::Server>())
{
    wireRoutes();
}

ApiServer::~ApiServer()
{
    stop();
}

void
ApiServer::stop()
{
    if (mServer)
        mServer->stop();
    if (mWorker.joinable())
        mWorker.join();
    if (mRunThread.joinable())
        mRunThread.join();
}

bool
ApiServer::listen(std::string const& host, int port)
{
    return mServer->listen(host, port);
}

int
ApiServer::listenBackground(std::string const& host)
{
    int port = mServer->bind_to_any_port(host);
    mWorker = std::thread([this] { mServer->listen_after_bind(); });
    mServer->wait_until_ready();
    return port;
}

core::Json
ApiServer::snapshotEscrow(std::string const& escrowId)
{
    std::lock_guard lock(mStateMutex);
    if (!mRunner)
        fail(Errc::UnknownEscrow, escrowId);
    return mRunner->world().escrows.get(escrowId).toJson();
}

core::Json
ApiServer::snapshotWorkflow(std::string const& workflowId)
{
    std::lock_guard lock(mStateMutex);
    if (!mRunner)
        fail(Errc::NotFound, workflowId);
    auto j = mRunner->world().facilitator.workflow(workflowId).toJson();
    if (mHaveResult && mLastResult.workflowId == workflowId)
    {
        j["final_escrow_status"] = mLastResult.finalEscrowStatus;
        j["transcript_digest"] = mLastResult.transcriptDigest.hex();
    }
    j["run_in_progress"] = mRunInProgress.load();
    return j;
}

void
ApiServer::wireRoutes()
{
    auto& server = *mServer;

    server.Post("/tasks", [this](httplib::Request const& req,
                                 httplib::Response& res) {
        try
        {
            auto cfg = RunConfig::fromJson(core::Json::parse(req.body));
            bool expected = false;
            if (!mRunInProgress.compare_exchange_strong(expected, true))
            {
                sendJson(res, 409,
                         core::Json{{"error", "run_in_progress"}});
                return;
            }
            {
                std::lock_guard lock(mStateMutex);
                if (mRunThread.joinable())
                    mRunThread.join();
                mRunner = std::make_unique<Runner>(cfg);
                mHaveResult = false;
            }
            mRunThread = std::thread([this] {
                {
                    // the run mutates the world; readers block until done
                    std::lock_guard lock(mStateMutex);
                    mLastResult = mRunner->runFlow();
                    mHaveResult = true;
                }
                mRunInProgress.store(false);
            });
            // ids are deterministic: the fresh world mints the first of
            // each series before anything else can
            sendJson(res, 202,
                     core::Json{{"session_id", "sess-000001"},
                                {"workflow_id", "wf-000001"},
                                {"escrow_id", "esc-000001"},
                                {"status", "accepted"}});
        }
        catch (Error const& e)
        {
            sendError(res, e.code(), e.what());
        }
        catch (core::Json::exception const& e)
        {
            sendError(res, Errc::ConfigInvalid, e.what());
        }
    });

    server.Get(R"(/escrows/([^/]+))", [this](httplib::Request const& req,
                                             httplib::Response& res) {
        try
        {
            sendJson(res, 200, snapshotEscrow(req.matches[1].str()));
        }
        catch (Error const& e)
        {
            sendError(res, e.code(), e.what());
        }
    });

    server.Get(R"(/workflows/([^/]+))", [this](httplib::Request const& req,
                                               httplib::Response& res) {
        try
        {
            sendJson(res, 200, snapshotWorkflow(req.matches[1].str()));
        }
        catch (Error const& e)
        {
            sendError(res, e.code(), e.what());
        }
    });

    server.Post(R"(/attacks/([^/]+))", [](httplib::Request const& req,
                                          httplib::Response& res) {
        try
        {
            std::uint64_t seed = 1;
            if (!req.body.empty())
            {
                auto j = core::Json::parse(req.body);
                if (j.contains("seed"))
                    seed = j.at("seed").get<std::uint64_t>();
            }
            auto report =
                runAttack(req.matches[1].str(), defaultAttackConfig(seed));
            sendJson(res, 200, report.toJson());
        }
        catch (Error const& e)
        {
            sendError(res, e.code(), e.what());
        }
        catch (core::Json::exception const& e)
        {
            sendError(res, Errc::ConfigInvalid, e.what());
        }
    });

    server.Get("/explorer", [this](httplib::Request const& req,
                                   httplib::Response& res) {
        std::lock_guard lock(mStateMutex);
        settle::ExplorerFilter filter;
        if (req.has_param("rail_id"))
            filter.railId = req.get_param_value("rail_id");
        if (req.has_param("tx_id"))
            filter.txId = req.get_param_value("tx_id");
        if (req.has_param("escrow_id"))
            filter.escrowId = req.get_param_value("escrow_id");
        if (req.has_param("workflow_id"))
            filter.workflowId = req.get_param_value("workflow_id");
        auto arr = core::Json::array();
        if (mRunner)
            for (auto const& r : mRunner->world().explorer.query(filter))
                arr.push_back(r.toJson());
        sendJson(res, 200, arr);
    });

    server.Get("/audit/verify", [this](httplib::Request const&,
                                       httplib::Response& res) {
        std::lock_guard lock(mStateMutex);
        bool ok = true;
        std::size_t events = 0;
        if (mRunner)
        {
            auto const& ledger = mRunner->world().audit;
            ok = verify::AuditLedger::verifyChain(ledger.events());
            events = ledger.events().size();
        }
        sendJson(res, 200, core::Json{{"ok", ok}, {"events", events}});
    });
}

}
