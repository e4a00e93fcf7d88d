#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "vmap/geometry.hpp"

namespace vmap {

/// Raised for malformed graph documents. The message names the offending element.
class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a path query spans two components.
class DisconnectedError : public std::runtime_error {
public:
    DisconnectedError(const std::string& a, const std::string& b)
        : std::runtime_error("disconnected: no path between '" + a + "' and '" + b + "'") {}
};

/// Unordered vertex pair stored with first < second.
using Edge = std::pair<std::size_t, std::size_t>;

inline Edge make_edge(std::size_t a, std::size_t b) { return a < b ? Edge{a, b} : Edge{b, a}; }

struct Vertex {
    std::string id;
    std::string label;
    double weight = 1.0;
    std::size_t cluster = 0;
};

/// Immutable vertex-weighted undirected graph. Vertices keep document order,
/// edges are deduplicated and sorted by (first, second) index.
class Graph {
public:
    Graph() = default;

    /// Validates and builds. `cluster_names[v.cluster]` names each vertex's cluster.
    Graph(std::vector<Vertex> vertices, std::vector<std::string> cluster_names,
          const std::vector<std::pair<std::string, std::string>>& edges);

    std::size_t size() const { return vertices_.size(); }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const Vertex& vertex(std::size_t i) const { return vertices_.at(i); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<std::string>& cluster_names() const { return cluster_names_; }
    std::size_t cluster_count() const { return cluster_names_.size(); }

    /// Neighbor indices, ascending.
    const std::vector<std::size_t>& neighbors(std::size_t i) const { return adjacency_.at(i); }
    std::size_t degree(std::size_t i) const { return adjacency_.at(i).size(); }

    std::optional<std::size_t> find(std::string_view id) const;
    std::size_t index_of(std::string_view id) const;  // throws GraphError
    bool has_edge(std::size_t a, std::size_t b) const;

private:
    std::vector<Vertex> vertices_;
    std::vector<std::string> cluster_names_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> adjacency_;
    std::unordered_map<std::string, std::size_t> index_;
};

/// A parsed graph document: the graph plus optional seed positions by vertex index.
struct GraphDocument {
    Graph graph;
    std::vector<std::optional<Point>> positions;
    std::string name;
};

GraphDocument load_graph(const nlohmann::json& document);
GraphDocument load_graph_text(std::string_view text);
GraphDocument load_graph_file(const std::string& path);

nlohmann::json graph_to_json(const Graph& graph);

/// Per-vertex weight / total weight, in vertex order.
std::vector<double> normalize_weights(const Graph& graph);
std::vector<double> normalize_weights(const std::vector<double>& weights);

/// Cluster-level graph: one node per cluster, weight = member proportion sum,
/// edge iff some member edge crosses the two clusters.
struct ClusterGraph {
    std::vector<std::string> names;
    std::vector<double> weights;
    std::vector<Edge> edges;
    std::vector<std::vector<std::size_t>> members;
};

ClusterGraph cluster_graph(const Graph& graph, const std::vector<double>& proportions);

/// Minimal-hop path from `a` to `b` (inclusive). Among all minimal paths the
/// lexicographically smallest id sequence is returned. Throws DisconnectedError.
std::vector<std::size_t> shortest_hop_path(const Graph& graph, std::size_t a, std::size_t b);

}  // namespace vmap
