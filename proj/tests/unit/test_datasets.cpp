#include <doctest.h>

#include <cmath>
#include <sstream>

#include "vmap/bench.hpp"
#include "vmap/datasets.hpp"

using namespace vmap;

TEST_CASE("builtin datasets") {
    CHECK(builtin_names() == std::vector<std::string>{"blood", "netherlands", "germany", "les-miserables"});
    const auto blood = builtin("blood").document.graph;
    CHECK(blood.size() == 8);
    CHECK(blood.edges().size() == 19);
    const auto o_neg = blood.index_of("O-");
    CHECK(blood.degree(o_neg) == 7);
    CHECK(blood.has_edge(blood.index_of("O+"), blood.index_of("AB+")));
    CHECK(!blood.has_edge(blood.index_of("A+"), blood.index_of("B+")));

    const auto nl = builtin("netherlands").document.graph;
    CHECK(nl.size() == 12);
    CHECK(nl.edges().size() == 22);
    const auto de = builtin("germany").document.graph;
    CHECK(de.size() == 16);
    CHECK(de.edges().size() == 28);

    const auto lm = builtin("les-miserables").document.graph;
    CHECK(lm.size() == 77);
    CHECK(lm.edges().size() == 254);
    CHECK(lm.degree(lm.index_of("Javert")) == 17);
    CHECK(lm.cluster_count() == 6);
    const auto cg = cluster_graph(lm, normalize_weights(lm));
    double total = 0;
    for (double w : cg.weights) total += w;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS(builtin("atlantis"), std::invalid_argument);
}

TEST_CASE("lognormal points") {
    Rng rng(1);
    const auto one = lognormal_points(1, rng);
    CHECK(one.size() == 1);
    CHECK(one[0].weight == 1.0);
    CHECK_THROWS_AS(lognormal_points(0, rng), std::invalid_argument);

    Rng a(77), b(77);
    const auto pa = lognormal_points(50, a), pb = lognormal_points(50, b);
    for (std::size_t i = 0; i < 50; ++i) {
        CHECK(pa[i].weight == pb[i].weight);
        CHECK(pa[i].pos == pb[i].pos);
    }

    // Raw lognormal draws: log-weights are standard normal; normalization
    // only shifts them, so the spread survives in the proportions.
    const std::size_t n = 20000;
    Rng c(5);
    const auto pts = lognormal_points(n, c);
    double sum = 0, sq = 0, total = 0, mx = 0;
    for (const auto& p : pts) {
        const double l = std::log(p.weight);
        sum += l, sq += l * l, total += p.weight, mx += p.pos.x;
        CHECK(p.pos.x >= 0.0);
        CHECK(p.pos.x < 1.0);
    }
    const double mean = sum / n;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(sq / n - mean * mean - 1.0) < 0.05);
    CHECK(std::abs(mx / n - 0.5) < 0.01);
}

TEST_CASE("aspect ratio bench") {
    const auto one = bench_aspect_ratio(5, 1, 1.7, 3, 1);
    for (std::size_t i = 0; i < 5; ++i) CHECK(one.dar[i] == one.sew[i]);

    const auto r = bench_aspect_ratio(200, 100, 1.5, 1, 2);
    CHECK(r.dar_summary().mean < r.sew_summary().mean);
    const auto serial = bench_aspect_ratio(200, 100, 1.5, 1, 1);
    CHECK(serial.dar == r.dar);
    std::ostringstream csv;
    write_csv(csv, r.rows());
    CHECK(csv.str().rfind("dataset,algorithm,metric,mean,std,best,seconds\n", 0) == 0);
    CHECK(csv.str().find("lognormal-n100-r1.5,DAR,aspect_ratio_loss,") != std::string::npos);
}

TEST_CASE("summary statistics") {
    const auto s = summarize({1.0, 2.0, 3.0}, 1.0);
    CHECK(s.mean == 2.0);
    CHECK(s.std == doctest::Approx(1.0));
    CHECK(summarize({4.0}, 4.0).std == 0.0);
}

TEST_CASE("optimize bench") {
    AnnealParams p;
    p.stages = 8;
    p.seed = 4;
    const auto blood = builtin("blood").document.graph;
    const auto a = bench_optimize("blood", blood, p, 1);
    const auto b = bench_optimize("blood", blood, p, 1);
    CHECK(a.runs[0].total_cost == b.runs[0].total_cost);
    const auto rows = a.rows();
    CHECK(rows.size() == 5);
    CHECK(rows[0].dataset == "blood");
    CHECK_THROWS_AS(bench_optimize("blood", blood, p, 0), std::invalid_argument);
}
