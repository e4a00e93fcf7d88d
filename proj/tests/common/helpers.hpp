#pragma once

#include <cmath>
#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "vmap/graph.hpp"
#include "vmap/partition.hpp"

namespace testing {

inline std::vector<vmap::PartitionItem> random_items(std::size_t n, std::mt19937_64& g) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::lognormal_distribution<double> w(0.0, 1.0);
    std::vector<vmap::PartitionItem> items(n);
    for (std::size_t i = 0; i < n; ++i) {
        items[i].id = i;
        items[i].order = i;
        items[i].weight = w(g);
        items[i].pos = {u(g), u(g)};
    }
    return items;
}

inline vmap::Graph make_graph(const std::vector<double>& weights,
                              const std::vector<std::pair<std::string, std::string>>& edges,
                              const std::vector<std::size_t>& clusters = {}) {
    std::vector<vmap::Vertex> vs;
    std::size_t cluster_count = 1;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        const std::size_t c = clusters.empty() ? 0 : clusters[i];
        cluster_count = std::max(cluster_count, c + 1);
        vs.push_back({"v" + std::to_string(i), "v" + std::to_string(i), weights[i], c});
    }
    std::vector<std::string> names;
    for (std::size_t c = 0; c < cluster_count; ++c) names.push_back("c" + std::to_string(c));
    return vmap::Graph(vs, names, edges);
}

inline std::string vid(std::size_t i) { return "v" + std::to_string(i); }

/// Random graph with independent edge probability p.
inline vmap::Graph random_graph(std::size_t n, double p, std::mt19937_64& g) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (u(g) < p) edges.emplace_back(vid(a), vid(b));
    std::vector<double> w(n);
    for (auto& x : w) x = 0.5 + u(g);
    return make_graph(w, edges);
}

inline bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace testing
