#include <doctest.h>

#include <httplib.h>

#include <thread>

#include "helpers.hpp"
#include "vmap/datasets.hpp"
#include "vmap/layout_document.hpp"
#include "vmap/pipeline.hpp"
#include "vmap/service.hpp"

using namespace vmap;
using nlohmann::json;

namespace {

// v0 - v1 - v2 chain, v3 - v4 pair in a separate component.
LayoutDocument two_components() {
    GraphDocument in;
    in.graph = testing::make_graph({1, 2, 1, 1, 3}, {{"v0", "v1"}, {"v1", "v2"}, {"v3", "v4"}});
    PipelineConfig cfg;
    cfg.anneal.stages = 8;
    return run_pipeline(in, cfg).document;
}

LayoutDocument blood() {
    PipelineConfig cfg;
    cfg.anneal.stages = 16;
    return run_pipeline(builtin("blood").document, cfg).document;
}

}  // namespace

TEST_CASE("query service") {
    QueryService svc(two_components());

    const auto health = json::parse(svc.get("/health").body);
    CHECK(health["status"] == "ok");
    CHECK(health["vertices"] == 5);
    CHECK(health["edges"] == 3);

    const auto layout = svc.get("/layout");
    CHECK(layout.status == 200);
    CHECK(validate_layout_document(json::parse(layout.body)).empty());

    const auto ego = json::parse(svc.get("/ego/v1").body);
    CHECK(ego["channels"].size() == 2);
    for (const auto& ch : ego["channels"]) {
        CHECK(ch["source"] == "v1");
        CHECK(ch["points"].size() >= 2);
    }

    const auto path = svc.get("/path/v0/v2");
    CHECK(path.status == 200);
    const auto p = json::parse(path.body);
    CHECK(p["hops"] == json::array({"v0", "v1", "v2"}));
    CHECK(p["highlighted"] == json::array({"v1"}));
    CHECK(p["channels"].size() == 2);
    CHECK(p["mode"] == "hop");

    const auto geo = json::parse(svc.get("/path/v0/v2?mode=geometric").body);
    CHECK(geo["mode"] == "geometric");
    CHECK(geo["channels"].size() == 1);

    const auto cut = svc.get("/path/v0/v4");
    CHECK(cut.status == 409);
    CHECK(json::parse(cut.body)["error"] == "disconnected");

    CHECK(svc.get("/ego/nobody").status == 404);
    CHECK(json::parse(svc.get("/ego/nobody").body)["error"] == "not found");
    CHECK(svc.get("/path/v0/nobody").status == 404);
    CHECK(svc.get("/path/v0/v0").status == 400);
    CHECK(svc.get("/nothing").status == 404);
}

TEST_CASE("ids are url-decoded") {
    GraphDocument in;
    in.graph = Graph({{"a b", "a b", 1.0, 0}, {"c/d", "c/d", 1.0, 0}}, {"k"}, {{"a b", "c/d"}});
    PipelineConfig cfg;
    cfg.anneal.stages = 4;
    QueryService svc(run_pipeline(in, cfg).document);
    CHECK(json::parse(svc.get("/ego/a%20b").body)["channels"].size() == 1);
    CHECK(svc.get("/path/a%20b/c%2Fd").status == 200);
}

TEST_CASE("http endpoints") {
    QueryService svc(blood());
    httplib::Server server;
    mount(server, svc);
    const int port = server.bind_to_any_port("127.0.0.1");
    REQUIRE(port > 0);
    std::thread worker([&] { server.listen_after_bind(); });
    server.wait_until_ready();

    httplib::Client client("127.0.0.1", port);
    auto res = client.Get("/health");
    REQUIRE(res);
    CHECK(res->status == 200);
    CHECK(res->get_header_value("Access-Control-Allow-Origin") == "*");

    res = client.Get("/layout");
    REQUIRE(res);
    const auto doc = json::parse(res->body);
    CHECK(validate_layout_document(doc).empty());
    CHECK(doc["vertices"].size() == 8);

    const auto g = svc.graph();
    for (const auto& v : g.vertices()) {
        res = client.Get("/ego/" + httplib::detail::encode_url(v.id));
        REQUIRE(res);
        CHECK(res->status == 200);
        CHECK(json::parse(res->body)["channels"].size() == g.degree(g.index_of(v.id)));
    }

    // A- and B+ are not adjacent; the hop path goes through a common neighbour.
    res = client.Get("/path/A-/B%2B");
    REQUIRE(res);
    CHECK(res->status == 200);
    const auto p = json::parse(res->body);
    CHECK(p["hops"].size() == 3);
    CHECK(p["hops"][0] == "A-");
    CHECK(p["hops"][2] == "B+");
    CHECK(p["highlighted"].size() == 1);

    res = client.Get("/ego/Z");
    REQUIRE(res);
    CHECK(res->status == 404);
    res = client.Get("/unknown");
    REQUIRE(res);
    CHECK(res->status == 404);

    server.stop();
    worker.join();
}
