#include "vmap/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "vmap/partition.hpp"

namespace vmap {

void CostWeights::validate() const {
    if (!(areal >= 0.0) || !(topological >= 0.0) || !(ratio >= 0.0))
        throw std::invalid_argument("cost weights must be non-negative");
    if (std::abs(areal + topological + ratio - 1.0) > 1e-12)
        throw std::invalid_argument("cost weights must sum to 1");
}

double contact_tolerance(const Rect& display) { return 1e-9 * std::max(display.w, display.h); }

std::vector<Edge> contacts(std::span<const Rect> rects, double eps) {
    // Sweep along x: only rectangles whose x-intervals overlap can touch.
    std::vector<std::size_t> order(rects.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return rects[a].x < rects[b].x || (rects[a].x == rects[b].x && a < b);
    });
    std::vector<Edge> out;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const Rect& a = rects[order[i]];
        for (std::size_t j = i + 1; j < order.size(); ++j) {
            const Rect& b = rects[order[j]];
            if (b.x > a.right() + eps) break;
            if (a.y <= b.bottom() + eps && b.y <= a.bottom() + eps) out.push_back(make_edge(order[i], order[j]));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

double areal_error(std::span<const double> alpha, std::span<const Rect> rects) {
    if (alpha.size() != rects.size()) throw std::invalid_argument("areal_error size mismatch");
    double total = 0.0;
    for (const auto& r : rects) total += r.area();
    double err = 0.0;
    for (std::size_t i = 0; i < rects.size(); ++i) err += std::abs(rects[i].area() / total - alpha[i]);
    return err;
}

TopologyCount topological_error(std::span<const Edge> graph_edges, std::span<const Edge> contact_edges) {
    std::vector<Edge> common;
    std::set_intersection(graph_edges.begin(), graph_edges.end(), contact_edges.begin(),
                          contact_edges.end(), std::back_inserter(common));
    TopologyCount t;
    t.lost = graph_edges.size() - common.size();
    t.fake = contact_edges.size() - common.size();
    const std::size_t uni = graph_edges.size() + t.fake;
    t.error = uni == 0 ? 0.0 : static_cast<double>(t.lost + t.fake) / static_cast<double>(uni);
    return t;
}

std::optional<double> amended_topological_error(std::span<const Edge> graph_edges,
                                                std::span<const Edge> contact_edges) {
    if (graph_edges.empty()) return std::nullopt;
    const auto t = topological_error(graph_edges, contact_edges);
    return static_cast<double>(t.lost) / static_cast<double>(graph_edges.size());
}

double total_cost(const MetricsReport& report, const CostWeights& weights) {
    return weights.areal * report.areal_error + weights.topological * report.topological_error +
           weights.ratio * report.aspect_ratio_loss;
}

MetricsReport measure(const Graph& graph, std::span<const double> alpha, std::span<const Rect> rects,
                      double r, const CostWeights& weights, double eps, std::vector<Edge>* contacts_out) {
    MetricsReport m;
    m.areal_error = areal_error(alpha, rects);
    auto touching = contacts(rects, eps);
    const auto topo = topological_error(graph.edges(), touching);
    m.lost_edges = topo.lost;
    m.fake_edges = topo.fake;
    m.topological_error = topo.error;
    m.amended_topological_error = amended_topological_error(graph.edges(), touching).value_or(0.0);
    m.aspect_ratio_loss = aspect_ratio_loss(rects, r);
    m.total_cost = total_cost(m, weights);
    if (contacts_out) *contacts_out = std::move(touching);
    return m;
}

nlohmann::json to_json(const MetricsReport& m) {
    return {{"areal_error", m.areal_error},
            {"lost_edges", m.lost_edges},
            {"fake_edges", m.fake_edges},
            {"topological_error", m.topological_error},
            {"amended_topological_error", m.amended_topological_error},
            {"aspect_ratio_loss", m.aspect_ratio_loss},
            {"total_cost", m.total_cost}};
}

MetricsReport metrics_from_json(const nlohmann::json& j) {
    MetricsReport m;
    m.areal_error = j.at("areal_error").get<double>();
    m.lost_edges = j.at("lost_edges").get<std::size_t>();
    m.fake_edges = j.at("fake_edges").get<std::size_t>();
    m.topological_error = j.at("topological_error").get<double>();
    m.amended_topological_error = j.at("amended_topological_error").get<double>();
    m.aspect_ratio_loss = j.at("aspect_ratio_loss").get<double>();
    m.total_cost = j.at("total_cost").get<double>();
    return m;
}

}  // namespace vmap
