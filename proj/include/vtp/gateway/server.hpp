// Copyright 2026 vtp developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include "vtp/gateway/runner.hpp"

#include <atomic>
#include <memory>
#include <mutex>
#include <string>
#include <thread>

namespace httplib
{
class Server;
}

namespace vtp::gateway
{

// HTTP JSON front end. Accepts concurrent requests; all mutation funnels
// through one deterministic run at a time, and reads snapshot state under
// the same lock. No endpoint ever returns secret-key bytes.
class ApiServer
{
  public:
    ApiServer();
    ~ApiServer();

    // Blocks serving on the port until stop() is called.
    bool listen(std::string const& host, int port);
    void stop();

    // Binds to an ephemeral port and serves from a background thread;
    // returns the port. Used by tests.
    int listenBackground(std::string const& host);

  private:
    void wireRoutes();
    core::Json snapshotEscrow(std::string const& escrowId);
    core::Json snapshotWorkflow(std::string const& workflowId);

    std::unique_ptr<httplib::Server> mServer;
    std::thread mWorker;     // background listener (tests)
    std::thread mRunThread;  // active run
    std::mutex mStateMutex;
    std::unique_ptr<Runner> mRunner;
    std::atomic<bool> mRunInProgress{false};
    RunResult mLastResult;
    bool mHaveResult{false};
};

}
