#include <doctest.h>

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "vmap/metrics.hpp"
#include "vmap/partition.hpp"

using namespace vmap;

namespace {


void check_tiling(const PartitionTree& t) {
    for (const auto& n : t.nodes) {
        if (n.leaf()) continue;
        const auto& a = t.nodes[n.left].rect;
        const auto& b = t.nodes[n.right].rect;
        CHECK(std::abs(a.area() + b.area() - n.rect.area()) <= 1e-9 * n.rect.area());
        if (n.cut == Cut::Horizontal) {
            CHECK(a.right() == doctest::Approx(b.x).epsilon(1e-12));
            CHECK(n.split > n.rect.x);
            CHECK(n.split < n.rect.right());
        } else {
            CHECK(a.bottom() == doctest::Approx(b.y).epsilon(1e-12));
            CHECK(n.split > n.rect.y);
            CHECK(n.split < n.rect.bottom());
        }
    }
}

}  // namespace

TEST_CASE("aspect ratio") {
    CHECK(aspect_ratio({0, 0, 3, 2}) == doctest::Approx(1.5));
    CHECK(aspect_ratio({0, 0, 2, 3}) == doctest::Approx(1.5));
    CHECK(aspect_ratio({0, 0, 1, 1}) == 1.0);
}

TEST_CASE("aspect ratio loss") {
    std::vector<Rect> a{{0, 0, 1.2, 2}, {1.2, 0, 1.8, 2}};
    CHECK(aspect_ratio_loss(a, 1.5) == doctest::Approx((5.0 / 3.0 - 1.5 + 1.5 - 10.0 / 9.0) / 2.0));
    CHECK(2.0 * aspect_ratio_loss(a, 1.5) == doctest::Approx(0.5556).epsilon(1e-4));
    std::vector<Rect> b{{0, 0, 3, 0.8}, {0, 0.8, 3, 1.2}};
    CHECK(aspect_ratio_loss(b, 1.5) == doctest::Approx(1.625));
    CHECK(2.0 * aspect_ratio_loss(b, 1.5) == doctest::Approx(3.25));
    std::vector<Rect> exact{{0, 0, 3, 2}};
    CHECK(aspect_ratio_loss(exact, 1.5) == 0.0);
}

TEST_CASE("dar picks the side-by-side split in the two-item example") {
    std::vector<PartitionItem> items{{0, 0.4, {0.2, 0.5}, 0}, {1, 0.6, {0.8, 0.5}, 1}};
    const auto t = dar_partition({0, 0, 3, 2}, items, 1.5);
    CHECK(t.root().cut == Cut::Horizontal);
    const auto rects = t.leaf_rects();
    CHECK(rects[0].w == doctest::Approx(1.2));
    CHECK(rects[1].w == doctest::Approx(1.8));
    CHECK(rects[0].h == 2.0);
}

TEST_CASE("single item is one leaf") {
    std::vector<PartitionItem> items{{0, 3.0, {0.3, 0.3}, 0}};
    const Rect r{1, 2, 5, 4};
    for (const auto& t : {dar_partition(r, items, 1.5), sew_partition({0, 0, 6, 4}, items, 1.5)}) {
        REQUIRE(t.nodes.size() == 1);
        CHECK(t.root().leaf());
    }
    CHECK(dar_partition(r, items, 1.5).root().rect == r);
}

TEST_CASE("invalid partition input") {
    std::vector<PartitionItem> none;
    CHECK_THROWS_AS(dar_partition({0, 0, 1, 1}, none, 1.0), std::invalid_argument);
    std::vector<PartitionItem> zero{{0, 0.0, {0, 0}, 0}};
    CHECK_THROWS_AS(dar_partition({0, 0, 1, 1}, zero, 1.0), std::invalid_argument);
}

TEST_CASE("dar properties on random inputs") {
    std::mt19937_64 g(7);
    for (int t = 0; t < 300; ++t) {
        const std::size_t n = 1 + g() % 60;
        const auto items = testing::random_items(n, g);
        const Rect rect{0, 0, 1200, 800};
        const double r = 1.0 + (g() % 100) / 50.0;
        const auto tree = dar_partition(rect, items, r);
        CHECK(tree.leaf_count() == n);
        check_tiling(tree);
        std::vector<double> w;
        for (const auto& it : items) w.push_back(it.weight);
        const auto rects = tree.leaf_rects();
        CHECK(areal_error(normalize_weights(w), rects) < 1e-9);

        // Order preservation: every item left of a vertical line has no larger x than any item right of it.
        for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
            const auto& node = tree.nodes[i];
            if (node.leaf()) continue;
            const auto l = tree.items_below(node.left), rgt = tree.items_below(node.right);
            double lmax = -1, rmin = 2;
            for (auto k : l) lmax = std::max(lmax, node.cut == Cut::Horizontal ? items[k].pos.x : items[k].pos.y);
            for (auto k : rgt) rmin = std::min(rmin, node.cut == Cut::Horizontal ? items[k].pos.x : items[k].pos.y);
            CHECK(lmax <= rmin);
        }
    }
}

TEST_CASE("root cut matches exhaustive enumeration for small n") {
    std::mt19937_64 g(17);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 2 + g() % 4;
        const auto items = testing::random_items(n, g);
        const Rect rect{0, 0, 1.0 + (g() % 20) / 10.0, 1.0};
        const double r = 1.0 + (g() % 10) / 5.0;
        const auto expect = testing::enumerate_root(rect, items, r);
        const auto tree = dar_partition(rect, items, r);
        CHECK(tree.root().cut == expect.cut);
        CHECK(tree.root().split == doctest::Approx(expect.split).epsilon(1e-12));
    }
}

TEST_CASE("two-level partition") {
    std::mt19937_64 g(23);
    SUBCASE("single cluster equals flat") {
        const auto items = testing::random_items(30, g);
        std::vector<std::size_t> cl(30, 0);
        const auto a = dar_partition({0, 0, 3, 2}, items, 1.5);
        const auto b = two_level_partition({0, 0, 3, 2}, items, cl, 1, 1.5);
        CHECK(a.leaf_rects() == b.leaf_rects());
    }
    SUBCASE("two clusters split by weight") {
        std::vector<PartitionItem> items{{0, 0.1, {0.1, 0.1}, 0}, {1, 0.2, {0.2, 0.9}, 1},
                                         {2, 0.3, {0.9, 0.1}, 2}, {3, 0.4, {0.8, 0.8}, 3}};
        std::vector<std::size_t> cl{0, 0, 1, 1};
        const auto t = two_level_partition({0, 0, 1, 1}, items, cl, 2, 1.0);
        const auto r = t.leaf_rects();
        CHECK(r[0].area() + r[1].area() == doctest::Approx(0.3));
        CHECK(r[2].area() + r[3].area() == doctest::Approx(0.7));
    }
    SUBCASE("members stay inside their cluster rectangle") {
        for (int t = 0; t < 50; ++t) {
            const std::size_t n = 2 + g() % 80, k = 1 + g() % 6;
            const auto items = testing::random_items(n, g);
            std::vector<std::size_t> cl(n);
            for (std::size_t i = 0; i < n; ++i) cl[i] = i < k ? i : g() % k;
            const auto tree = two_level_partition({0, 0, 1200, 800}, items, cl, std::min(n, k), 1.5);
            check_tiling(tree);
            const auto rects = tree.leaf_rects();
            for (std::size_t c = 0; c < std::min(n, k); ++c) {
                double x0 = 1e9, y0 = 1e9, x1 = -1e9, y1 = -1e9, area = 0, weight = 0, total = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    total += items[i].weight;
                    if (cl[i] != c) continue;
                    x0 = std::min(x0, rects[i].x);
                    y0 = std::min(y0, rects[i].y);
                    x1 = std::max(x1, rects[i].right());
                    y1 = std::max(y1, rects[i].bottom());
                    area += rects[i].area();
                    weight += items[i].weight;
                }
                // Members tile their bounding box exactly, so the box is the cluster rectangle.
                CHECK(area == doctest::Approx((x1 - x0) * (y1 - y0)).epsilon(1e-9));
                CHECK(area / (1200.0 * 800.0) == doctest::Approx(weight / total).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("sew baseline") {
    std::vector<PartitionItem> two{{0, 1.0, {0.2, 0.5}, 0}, {1, 1.0, {0.7, 0.5}, 1}};
    const auto t = sew_partition({0, 0, 1.5, 1.0}, two, 1.5);
    const auto r = t.leaf_rects();
    CHECK(r[0].w == doctest::Approx(0.75));
    CHECK(r[1].w == doctest::Approx(0.75));
    CHECK(r[0].h == 1.0);
    CHECK(std::abs(aspect_ratio(r[0]) - 1.5) == doctest::Approx(1.0 / 6.0));
    CHECK_THROWS_AS(sew_partition({0, 0, 2.0, 1.0}, two, 1.5), std::invalid_argument);

    std::mt19937_64 g(29);
    for (int i = 0; i < 50; ++i) {
        const auto items = testing::random_items(1 + g() % 40, g);
        const auto tree = sew_partition({0, 0, 1.5, 1.0}, items, 1.5);
        check_tiling(tree);
        std::vector<double> w;
        for (const auto& it : items) w.push_back(it.weight);
        CHECK(areal_error(normalize_weights(w), tree.leaf_rects()) < 1e-9);
    }
}

TEST_CASE("tree helpers") {
    std::vector<PartitionItem> items{{0, 1, {0.1, 0.1}, 0}, {1, 1, {0.9, 0.1}, 1}, {2, 2, {0.5, 0.9}, 2}};
    const auto t = dar_partition({0, 0, 1, 1}, items, 1.0);
    CHECK(t.leaf_count() == 3);
    auto below = t.items_below(0);
    std::sort(below.begin(), below.end());
    CHECK(below == std::vector<std::size_t>{0, 1, 2});
    const auto depth = t.depths();
    CHECK(depth[0] == 0);
    const auto leaves = t.leaf_nodes();
    for (std::size_t i = 0; i < 3; ++i) CHECK(t.nodes[leaves[i]].item == i);
}
