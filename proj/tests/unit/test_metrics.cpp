#include <doctest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "vmap/metrics.hpp"
#include "vmap/partition.hpp"

using namespace vmap;

namespace {


std::vector<Edge> edges_of(std::initializer_list<std::pair<int, int>> list) {
    std::vector<Edge> out;
    for (auto [a, b] : list) out.push_back(make_edge(a, b));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("contacts of simple configurations") {
    std::vector<Rect> shared{{0, 0, 1, 1}, {1, 0, 1, 1}};
    CHECK(contacts(shared, 1e-9) == std::vector<Edge>{{0, 1}});
    std::vector<Rect> corner{{0, 0, 1, 1}, {1, 1, 1, 1}};
    CHECK(contacts(corner, 1e-9) == std::vector<Edge>{{0, 1}});
    std::vector<Rect> apart{{0, 0, 1, 1}, {1.1, 0, 1, 1}};
    CHECK(contacts(apart, 1e-9).empty());
    CHECK(contact_tolerance({0, 0, 1200, 800}) == doctest::Approx(1.2e-6));
}

TEST_CASE("contacts match the pairwise test") {
    std::mt19937_64 g(31);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 1 + g() % 64;
        const Rect display{0, 0, 1200, 800};
        const auto tree = dar_partition(display, testing::random_items(n, g), 1.0 + (g() % 8) / 4.0);
        const auto rects = tree.leaf_rects();
        const double eps = contact_tolerance(display);
        CHECK(contacts(rects, eps) == testing::pairwise_contacts(rects, eps));
    }
    // Loose, overlapping and separated rectangles too.
    std::uniform_real_distribution<double> u(0.0, 10.0);
    for (int t = 0; t < 200; ++t) {
        std::vector<Rect> rects(1 + g() % 40);
        for (auto& r : rects) r = {std::floor(u(g)), std::floor(u(g)), 1 + std::floor(u(g) / 3), 1 + std::floor(u(g) / 3)};
        CHECK(contacts(rects, 1e-9) == testing::pairwise_contacts(rects, 1e-9));
    }
}

TEST_CASE("areal error") {
    std::vector<double> alpha{0.4, 0.6};
    std::vector<Rect> exact{{0, 0, 0.4, 1}, {0.4, 0, 0.6, 1}};
    CHECK(areal_error(alpha, exact) == doctest::Approx(0.0));
    std::vector<Rect> even{{0, 0, 0.5, 1}, {0.5, 0, 0.5, 1}};
    CHECK(areal_error(alpha, even) == doctest::Approx(0.2));
    std::vector<Rect> scaled{{0, 0, 50, 100}, {50, 0, 50, 100}};
    CHECK(areal_error(alpha, scaled) == doctest::Approx(0.2));
}

TEST_CASE("topological error") {
    const auto e = edges_of({{0, 1}, {1, 2}});
    auto same = topological_error(e, e);
    CHECK(same.error == 0.0);
    CHECK(same.lost == 0);

    std::vector<Edge> none;
    CHECK(topological_error(none, none).error == 0.0);

    // 22 edges, one lost and one fake
    std::vector<Edge> graph_edges, layout_edges;
    for (std::size_t i = 0; i < 22; ++i) graph_edges.push_back({i, i + 1});
    layout_edges.assign(graph_edges.begin() + 1, graph_edges.end());
    layout_edges.push_back({0, 30});
    std::sort(layout_edges.begin(), layout_edges.end());
    auto nl = topological_error(graph_edges, layout_edges);
    CHECK(nl.lost == 1);
    CHECK(nl.fake == 1);
    CHECK(nl.error == doctest::Approx(2.0 / 23.0));
    CHECK(nl.error * 100 == doctest::Approx(8.70).epsilon(1e-3));

    // 19 edges, two lost
    graph_edges.resize(19);
    layout_edges.assign(graph_edges.begin() + 2, graph_edges.end());
    auto blood = topological_error(graph_edges, layout_edges);
    CHECK(blood.error * 100 == doctest::Approx(10.53).epsilon(1e-3));
    CHECK(*amended_topological_error(graph_edges, layout_edges) == doctest::Approx(2.0 / 19.0));
    layout_edges.assign(graph_edges.begin() + 3, graph_edges.end());
    CHECK(*amended_topological_error(graph_edges, layout_edges) * 100 == doctest::Approx(15.79).epsilon(1e-3));
    CHECK(*amended_topological_error(graph_edges, graph_edges) == 0.0);
    CHECK(!amended_topological_error(none, layout_edges));

    // error is in [0, 1] and zero iff the sets agree
    std::mt19937_64 g(37);
    for (int t = 0; t < 300; ++t) {
        std::vector<Edge> a, b;
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = i + 1; j < 6; ++j) {
                if (g() % 3 == 0) a.push_back({i, j});
                if (g() % 3 == 0) b.push_back({i, j});
            }
        const auto r = topological_error(a, b);
        CHECK(r.error >= 0.0);
        CHECK(r.error <= 1.0);
        CHECK((r.error == 0.0) == (a == b));
    }
}

TEST_CASE("cost weights and total cost") {
    CostWeights w{0.5, 0.5, 0.0};
    CHECK_NOTHROW(w.validate());
    MetricsReport m;
    m.areal_error = 0.1;
    m.topological_error = 0.2;
    m.aspect_ratio_loss = 5.0;
    CHECK(total_cost(m, w) == doctest::Approx(0.15));
    CHECK(total_cost(MetricsReport{}, w) == 0.0);
    CHECK(total_cost(m, {1, 0, 0}) == m.areal_error);
    CHECK_THROWS_AS((CostWeights{0.5, 0.6, 0.0}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((CostWeights{1.5, -0.5, 0.0}.validate()), std::invalid_argument);

    // monotone in each component
    MetricsReport worse = m;
    worse.topological_error += 0.1;
    CHECK(total_cost(worse, {0.2, 0.3, 0.5}) >= total_cost(m, {0.2, 0.3, 0.5}));
}

TEST_CASE("measure combines the metrics") {
    const auto g = testing::make_graph({1, 1, 2}, {{"v0", "v1"}, {"v0", "v2"}});
    const auto alpha = normalize_weights(g);
    // v0 | v1 on top, v2 below spanning both: contacts 0-1, 0-2, 1-2
    std::vector<Rect> rects{{0, 0, 1, 1}, {1, 0, 1, 1}, {0, 1, 2, 1}};
    std::vector<Edge> found;
    const auto m = measure(g, alpha, rects, 1.0, {0.4, 0.4, 0.2}, 1e-9, &found);
    CHECK(found == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(m.lost_edges == 0);
    CHECK(m.fake_edges == 1);
    CHECK(m.topological_error == doctest::Approx(1.0 / 3.0));
    CHECK(m.amended_topological_error == 0.0);
    CHECK(m.areal_error == doctest::Approx(0.0));
    CHECK(m.aspect_ratio_loss == doctest::Approx(1.0 / 3.0));
    CHECK(m.total_cost == doctest::Approx(0.4 / 3.0 + 0.2 / 3.0));

    const auto back = metrics_from_json(to_json(m));
    CHECK(back.total_cost == m.total_cost);
    CHECK(back.fake_edges == m.fake_edges);
}
