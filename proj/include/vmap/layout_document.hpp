#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "vmap/border.hpp"
#include "vmap/geometry.hpp"
#include "vmap/graph.hpp"
#include "vmap/metrics.hpp"
#include "vmap/partition.hpp"
#include "vmap/router.hpp"

namespace vmap {

inline constexpr const char* kLayoutFormat = "vmap-layout/1";

struct LayoutVertex {
    std::string id;
    std::string label;
    std::size_t cluster = 0;
    Rect rect;
    double alpha = 0.0;    // target proportion
    double alpha_p = 0.0;  // proportion encoded by the layout
};

struct CutLine {
    Segment segment;  // band centre line
    std::size_t depth = 0;
};

/// Everything a viewer or the query service needs, in vertex order.
struct LayoutDocument {
    std::string name;
    Rect display;
    double border = 0.0;  // d
    double ratio = 1.0;   // user target ratio
    std::vector<std::string> clusters;
    std::vector<std::string> palette;  // fill per cluster
    std::vector<LayoutVertex> vertices;
    std::vector<Edge> edges;
    std::vector<Bridge> bridges;
    std::vector<CutLine> cuts;
    CorridorNetwork network;
    std::map<std::size_t, std::vector<RoutedChannel>> ego;  // optional precomputed channels
    MetricsReport metrics;
    nlohmann::json config = nlohmann::json::object();  // run parameters, informational
};

/// Qualitative 12-colour palette; indices past 12 cycle with darker variants.
std::string cluster_color(std::size_t cluster);

/// Assembles a document from one pipeline run. `alpha_p` is indexed by vertex.
LayoutDocument export_layout(const std::string& name, const Graph& graph, const std::vector<double>& alpha,
                             const std::vector<double>& alpha_p, const PartitionTree& adjusted, double ratio,
                             const std::vector<Bridge>& bridges, const CorridorNetwork& network,
                             const MetricsReport& metrics);

/// Rebuilds the graph described by a document (weights are the alphas).
Graph document_graph(const LayoutDocument& doc);

nlohmann::json channel_to_json(const RoutedChannel& channel, const LayoutDocument& doc);
nlohmann::json to_json(const LayoutDocument& doc);
/// Throws std::invalid_argument on structural problems.
LayoutDocument layout_from_json(const nlohmann::json& j);

std::string dump_layout(const LayoutDocument& doc);
LayoutDocument load_layout_file(const std::string& path);

/// Structural check of a layout JSON: required keys and types, id
/// uniqueness and references. Returns the problems found, empty when valid.
std::vector<std::string> validate_layout_document(const nlohmann::json& j);

}  // namespace vmap
