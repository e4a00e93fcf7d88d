#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "vmap/border.hpp"
#include "vmap/router.hpp"

using namespace vmap;

namespace {

PartitionTree adjusted_layout(std::size_t n, std::mt19937_64& g, double d = 8.0) {
    const auto raw = dar_partition({0, 0, 1200, 800}, testing::random_items(n, g), 1.5);
    return adjust_fixed_width(raw, std::min(d, max_feasible_border(raw)));
}


}  // namespace

TEST_CASE("two-leaf network") {
    PartitionTree raw;
    raw.nodes.push_back({{0, 0, 100, 50}, kNoItem, Cut::Horizontal, 50, 1, 2});
    raw.nodes.push_back({{0, 0, 50, 50}, 0});
    raw.nodes.push_back({{50, 0, 50, 50}, 1});
    const auto adj = adjust_fixed_width(raw, 2.0);
    const auto net = build_corridor_network(adj);
    std::size_t sides = 0;
    for (const auto& n : net.nodes) sides += n.kind == CorridorKind::RectSide;
    CHECK(sides == 8);
    CHECK(net.components() == 1);
    const auto ch = route_channel(net, 0, 1);
    // Right side of v0 to the left side of v1 across the band: two stubs of length d.
    CHECK(ch.length == doctest::Approx(4.0));
    CHECK(ch.polyline.front().x == doctest::Approx(adj.leaf_rects()[0].right()));
    CHECK(ch.polyline.back().x == doctest::Approx(adj.leaf_rects()[1].x));
}

TEST_CASE("2x2 grid has a degree-4 crossing") {
    PartitionTree raw;
    raw.nodes.push_back({{0, 0, 100, 100}, kNoItem, Cut::Horizontal, 50, 1, 2});
    raw.nodes.push_back({{0, 0, 50, 100}, kNoItem, Cut::Vertical, 50, 3, 4});
    raw.nodes.push_back({{50, 0, 50, 100}, kNoItem, Cut::Vertical, 50, 5, 6});
    raw.nodes.push_back({{0, 0, 50, 50}, 0});
    raw.nodes.push_back({{0, 50, 50, 50}, 1});
    raw.nodes.push_back({{50, 0, 50, 50}, 2});
    raw.nodes.push_back({{50, 50, 50, 50}, 3});
    const auto net = build_corridor_network(adjust_fixed_width(raw, 2.0));
    std::vector<std::size_t> degree(net.nodes.size(), 0);
    for (const auto& e : net.edges) ++degree[e.a], ++degree[e.b];
    std::size_t centre = kNoItem;
    for (std::size_t i = 0; i < net.nodes.size(); ++i)
        if (std::abs(net.nodes[i].p.x - 50) < 1e-9 && std::abs(net.nodes[i].p.y - 50) < 1e-9) centre = i;
    REQUIRE(centre != kNoItem);
    CHECK(net.nodes[centre].kind == CorridorKind::Junction);
    CHECK(degree[centre] == 4);
    CHECK(net.components() == 1);
}

TEST_CASE("channels are shortest, unobstructed and complete") {
    std::mt19937_64 g(53);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = 2 + g() % 63;
        const auto adj = adjusted_layout(n, g);
        const auto graph = testing::random_graph(n, 3.0 / static_cast<double>(n), g);
        const auto net = build_corridor_network(adj);
        CHECK(net.components() == 1);
        const auto rects = adj.leaf_rects();
        for (std::size_t v = 0; v < n; ++v) {
            const auto channels = ego_network(net, graph, v);
            CHECK(channels.size() == graph.degree(v));
            const auto oracle = testing::bellman_ford(net, net.ports[v]);
            for (const auto& ch : channels) {
                double best = std::numeric_limits<double>::infinity();
                for (auto p : net.ports[ch.target]) best = std::min(best, oracle[p]);
                CHECK(ch.length == doctest::Approx(best).epsilon(1e-12));
                CHECK(testing::polyline_length(ch.polyline) == doctest::Approx(ch.length).epsilon(1e-9));
                CHECK(testing::occlusions(ch, rects) == 0);
            }
        }
    }
}

TEST_CASE("network edges stay in border space") {
    std::mt19937_64 g(59);
    const auto adj = adjusted_layout(40, g);
    const auto net = build_corridor_network(adj);
    const auto rects = adj.leaf_rects();
    for (const auto& e : net.edges) {
        const Point a = net.nodes[e.a].p, b = net.nodes[e.b].p;
        CHECK((std::abs(a.x - b.x) < 1e-6 || std::abs(a.y - b.y) < 1e-6));
        const Point mid{0.5 * (a.x + b.x), 0.5 * (a.y + b.y)};
        for (const auto& r : rects) CHECK(!r.contains_interior(mid));
    }
}

TEST_CASE("route queries") {
    std::mt19937_64 g(61);
    const auto adj = adjusted_layout(4, g);
    const auto net = build_corridor_network(adj);
    const auto chain = testing::make_graph({1, 1, 1, 1}, {{"v0", "v1"}, {"v1", "v2"}});

    const auto direct = route_query(net, chain, 0, 1);
    CHECK(direct.channels.size() == 1);
    CHECK(direct.highlighted.empty());

    const auto two = route_query(net, chain, 0, 2);
    CHECK(two.hops == std::vector<std::size_t>{0, 1, 2});
    CHECK(two.channels.size() == 2);
    CHECK(two.highlighted == std::vector<std::size_t>{1});
    CHECK(two.channels[0].source == 0);
    CHECK(two.channels[1].target == 2);

    CHECK_THROWS_AS(route_query(net, chain, 0, 3), DisconnectedError);
    CHECK_THROWS_AS(route_query(net, chain, 0, 0), std::invalid_argument);

    const auto geo = route_query(net, chain, 0, 3, RouteMode::Geometric);
    CHECK(geo.channels.size() == 1);
    CHECK(geo.hops == std::vector<std::size_t>{0, 3});

    CHECK(ego_network(net, chain, 3).empty());
}
