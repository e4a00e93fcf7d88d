#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <json.hpp>

#include "vmap/geometry.hpp"
#include "vmap/graph.hpp"

namespace vmap {

/// Non-negative weights of the three cost terms, summing to one.
struct CostWeights {
    double areal = 0.5;
    double topological = 0.5;
    double ratio = 0.0;

    /// Throws std::invalid_argument unless each weight >= 0 and the sum is 1 within 1e-12.
    void validate() const;
};

struct MetricsReport {
    double areal_error = 0.0;
    std::size_t lost_edges = 0;
    std::size_t fake_edges = 0;
    double topological_error = 0.0;
    double amended_topological_error = 0.0;  // 0 when the graph has no edges
    double aspect_ratio_loss = 0.0;
    double total_cost = 0.0;
};

/// Contact tolerance used by the layout pipeline: 1e-9 of the larger display side.
double contact_tolerance(const Rect& display);

/// Pairs of rectangles whose closed extents intersect (shared segment or a
/// single corner point). Rectangles are indexed by position; result is sorted.
std::vector<Edge> contacts(std::span<const Rect> rects, double eps);

/// Sum over i of |area_i / total - alpha_i|.
double areal_error(std::span<const double> alpha, std::span<const Rect> rects);

struct TopologyCount {
    std::size_t lost = 0;
    std::size_t fake = 0;
    double error = 0.0;  // (lost + fake) / |E u E^P|, 0 when both sets are empty
};

/// Both edge lists must be sorted and duplicate-free.
TopologyCount topological_error(std::span<const Edge> graph_edges, std::span<const Edge> contact_edges);

/// Lost edges over |E|; nullopt when the graph has no edges.
std::optional<double> amended_topological_error(std::span<const Edge> graph_edges,
                                                std::span<const Edge> contact_edges);

double total_cost(const MetricsReport& report, const CostWeights& weights);

/// All metrics of one layout. `alpha` are the target proportions, `rects`
/// the leaf rectangles by vertex, `r` the user's desired ratio.
MetricsReport measure(const Graph& graph, std::span<const double> alpha, std::span<const Rect> rects,
                      double r, const CostWeights& weights, double eps,
                      std::vector<Edge>* contacts_out = nullptr);

nlohmann::json to_json(const MetricsReport& report);
MetricsReport metrics_from_json(const nlohmann::json& j);

}  // namespace vmap
