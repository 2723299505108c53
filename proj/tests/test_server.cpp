// Copyright 2026 vtp developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#include <doctest.h>

#include "vtp/gateway/attacks.hpp"
#include "vtp/gateway/server.hpp"

#include <httplib.h>

#include <chrono>
#include <thread>

using namespace vtp;
using namespace vtp::gateway;

TEST_CASE("http api drives a run and serves canonical state")
{
    ApiServer server;
    int port = server.listenBackground("127.0.0.1");
    REQUIRE(port > 0);
    httplib::Client client("127.0.0.1", port);

    auto cfg = defaultAttackConfig(4242);
    auto res = client.Post("/tasks",
                           core::canonicalSerialize(cfg.toJson()),
                           "application/json");
    REQUIRE(res);
    CHECK(res->status == 202);
    auto accepted = core::Json::parse(res->body);
    std::string wfId = accepted.at("workflow_id");
    std::string escId = accepted.at("escrow_id");

    // the run is asynchronous; poll until it completes
    bool done = false;
    for (int i = 0; i < 200 && !done; ++i)
    {
        std::this_thread::sleep_for(std::chrono::milliseconds(10));
        auto wf = client.Get(("/workflows/" + wfId).c_str());
        if (!wf || wf->status != 200)
            continue;
        auto j = core::Json::parse(wf->body);
        done = !j.at("run_in_progress").get<bool>();
    }
    REQUIRE(done);

    SUBCASE("escrow endpoint reports the settled record, keys excluded")
    {
        auto esc = client.Get(("/escrows/" + escId).c_str());
        REQUIRE(esc);
        REQUIRE(esc->status == 200);
        auto j = core::Json::parse(esc->body);
        CHECK(j.at("status") == "SETTLED");
        CHECK(j.at("escrow_id") == escId);
        CHECK(esc->body.find("secret") == std::string::npos);
    }
    SUBCASE("unknown ids are 404")
    {
        auto missing = client.Get("/escrows/esc-999999");
        REQUIRE(missing);
        CHECK(missing->status == 404);
        auto missingWf = client.Get("/workflows/wf-999999");
        REQUIRE(missingWf);
        CHECK(missingWf->status == 404);
    }
    SUBCASE("explorer and audit endpoints answer")
    {
        auto ex = client.Get(("/explorer?escrow_id=" + escId).c_str());
        REQUIRE(ex);
        REQUIRE(ex->status == 200);
        auto records = core::Json::parse(ex->body);
        REQUIRE(records.is_array());
        REQUIRE(records.size() == 1);
        CHECK(records[0].at("verdict") == "match");

        auto audit = client.Get("/audit/verify");
        REQUIRE(audit);
        REQUIRE(audit->status == 200);
        CHECK(core::Json::parse(audit->body).at("ok") == true);
    }
    SUBCASE("attack endpoint reports the blocking mechanism")
    {
        auto atk = client.Post("/attacks/unverified_payout",
                               R"({"seed": 7})", "application/json");
        REQUIRE(atk);
        REQUIRE(atk->status == 200);
        auto j = core::Json::parse(atk->body);
        CHECK(j.at("blocked") == true);
        CHECK(j.at("mechanism") == "pote_gate");

        auto bad = client.Post("/attacks/not-a-scenario", "",
                               "application/json");
        REQUIRE(bad);
        CHECK(bad->status == 400);
    }

    server.stop();
}
