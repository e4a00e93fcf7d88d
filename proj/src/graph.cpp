#include "vmap/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace vmap {

using nlohmann::json;

Graph::Graph(std::vector<Vertex> vertices, std::vector<std::string> cluster_names,
             const std::vector<std::pair<std::string, std::string>>& edges)
    : vertices_(std::move(vertices)), cluster_names_(std::move(cluster_names)) {
    if (vertices_.empty()) throw GraphError("graph has no vertices");
    if (cluster_names_.empty()) cluster_names_.push_back("all");
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        const Vertex& v = vertices_[i];
        if (!index_.emplace(v.id, i).second) throw GraphError("duplicate id '" + v.id + "'");
        if (!(v.weight > 0.0) || !std::isfinite(v.weight))
            throw GraphError("nonpositive weight for vertex '" + v.id + "'");
        if (v.cluster >= cluster_names_.size())
            throw GraphError("vertex '" + v.id + "' references an unknown cluster");
    }
    std::set<Edge> seen;
    for (const auto& [a, b] : edges) {
        auto ia = index_.find(a);
        if (ia == index_.end()) throw GraphError("dangling edge endpoint '" + a + "'");
        auto ib = index_.find(b);
        if (ib == index_.end()) throw GraphError("dangling edge endpoint '" + b + "'");
        if (ia->second == ib->second) throw GraphError("self-loop on '" + a + "'");
        if (!seen.insert(make_edge(ia->second, ib->second)).second)
            throw GraphError("duplicate edge '" + a + "'-'" + b + "'");
    }
    edges_.assign(seen.begin(), seen.end());
    adjacency_.resize(vertices_.size());
    for (const auto& [a, b] : edges_) {
        adjacency_[a].push_back(b);
        adjacency_[b].push_back(a);
    }
    for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

std::optional<std::size_t> Graph::find(std::string_view id) const {
    auto it = index_.find(std::string(id));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t Graph::index_of(std::string_view id) const {
    if (auto i = find(id)) return *i;
    throw GraphError("unknown vertex '" + std::string(id) + "'");
}

bool Graph::has_edge(std::size_t a, std::size_t b) const {
    const auto& adj = adjacency_.at(a);
    return std::binary_search(adj.begin(), adj.end(), b);
}

GraphDocument load_graph(const json& document) {
    if (!document.is_object()) throw GraphError("graph document must be a JSON object");
    if (!document.contains("vertices") || !document["vertices"].is_array())
        throw GraphError("graph document needs a 'vertices' array");

    std::vector<Vertex> vertices;
    std::vector<std::string> cluster_names;
    std::map<std::string, std::size_t> cluster_index;
    std::size_t with_cluster = 0;
    for (const auto& jv : document["vertices"]) {
        if (!jv.is_object() || !jv.contains("id") || !jv["id"].is_string())
            throw GraphError("vertex entry without a string 'id'");
        Vertex v;
        v.id = jv["id"].get<std::string>();
        v.label = jv.value("label", v.id);
        if (!jv.contains("weight") || !jv["weight"].is_number())
            throw GraphError("vertex '" + v.id + "' has no numeric weight");
        v.weight = jv["weight"].get<double>();
        if (jv.contains("cluster") && !jv["cluster"].is_null()) {
            const auto name = jv["cluster"].is_string() ? jv["cluster"].get<std::string>()
                                                        : jv["cluster"].dump();
            auto [it, inserted] = cluster_index.emplace(name, cluster_names.size());
            if (inserted) cluster_names.push_back(name);
            v.cluster = it->second;
            ++with_cluster;
        }
        vertices.push_back(std::move(v));
    }
    if (with_cluster != 0 && with_cluster != vertices.size()) {
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            const auto& jv = document["vertices"][i];
            if (!jv.contains("cluster") || jv["cluster"].is_null())
                throw GraphError("vertex '" + vertices[i].id + "' has no cluster while others do");
        }
    }

    std::vector<std::pair<std::string, std::string>> edges;
    if (document.contains("edges")) {
        for (const auto& je : document["edges"]) {
            if (!je.is_array() || je.size() != 2 || !je[0].is_string() || !je[1].is_string())
                throw GraphError("edge entry must be a pair of vertex ids: " + je.dump());
            edges.emplace_back(je[0].get<std::string>(), je[1].get<std::string>());
        }
    }

    GraphDocument out{Graph(std::move(vertices), std::move(cluster_names), edges), {}, {}};
    out.name = document.value("name", std::string{});
    out.positions.assign(out.graph.size(), std::nullopt);
    if (document.contains("positions")) {
        for (const auto& [id, jp] : document["positions"].items()) {
            const auto i = out.graph.find(id);
            if (!i) throw GraphError("position for unknown vertex '" + id + "'");
            if (!jp.is_array() || jp.size() != 2)
                throw GraphError("position of '" + id + "' must be [x, y]");
            out.positions[*i] = Point{jp[0].get<double>(), jp[1].get<double>()};
        }
    }
    return out;
}

GraphDocument load_graph_text(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw GraphError(std::string("graph document is not valid JSON: ") + e.what());
    }
    return load_graph(doc);
}

GraphDocument load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return load_graph_text(buf.str());
}

json graph_to_json(const Graph& graph) {
    json vertices = json::array();
    for (const auto& v : graph.vertices()) {
        vertices.push_back({{"id", v.id},
                            {"label", v.label},
                            {"weight", v.weight},
                            {"cluster", graph.cluster_names()[v.cluster]}});
    }
    json edges = json::array();
    for (const auto& [a, b] : graph.edges()) edges.push_back({graph.vertex(a).id, graph.vertex(b).id});
    return {{"vertices", vertices}, {"edges", edges}};
}

std::vector<double> normalize_weights(const std::vector<double>& weights) {
    double total = 0.0;
    for (double w : weights) total += w;
    std::vector<double> out;
    out.reserve(weights.size());
    for (double w : weights) out.push_back(w / total);
    return out;
}

std::vector<double> normalize_weights(const Graph& graph) {
    std::vector<double> w;
    w.reserve(graph.size());
    for (const auto& v : graph.vertices()) w.push_back(v.weight);
    return normalize_weights(w);
}

ClusterGraph cluster_graph(const Graph& graph, const std::vector<double>& proportions) {
    ClusterGraph out;
    out.names = graph.cluster_names();
    out.weights.assign(out.names.size(), 0.0);
    out.members.resize(out.names.size());
    for (std::size_t i = 0; i < graph.size(); ++i) {
        const auto c = graph.vertex(i).cluster;
        out.weights[c] += proportions.at(i);
        out.members[c].push_back(i);
    }
    std::set<Edge> cross;
    for (const auto& [a, b] : graph.edges()) {
        const auto ca = graph.vertex(a).cluster;
        const auto cb = graph.vertex(b).cluster;
        if (ca != cb) cross.insert(make_edge(ca, cb));
    }
    out.edges.assign(cross.begin(), cross.end());
    return out;
}

std::vector<std::size_t> shortest_hop_path(const Graph& graph, std::size_t a, std::size_t b) {
    if (a >= graph.size() || b >= graph.size()) throw GraphError("path endpoint out of range");
    if (a == b) throw GraphError("path endpoints must differ");

    // Distances to b, then a greedy walk from a picking the smallest id one hop closer.
    constexpr auto kInf = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> dist(graph.size(), kInf);
    std::deque<std::size_t> queue{b};
    dist[b] = 0;
    while (!queue.empty()) {
        const auto u = queue.front();
        queue.pop_front();
        for (auto v : graph.neighbors(u)) {
            if (dist[v] == kInf) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    if (dist[a] == kInf) throw DisconnectedError(graph.vertex(a).id, graph.vertex(b).id);

    std::vector<std::size_t> path{a};
    for (auto u = a; u != b;) {
        std::size_t next = kInf;
        for (auto v : graph.neighbors(u)) {
            if (dist[v] + 1 != dist[u]) continue;
            if (next == kInf || graph.vertex(v).id < graph.vertex(next).id) next = v;
        }
        path.push_back(next);
        u = next;
    }
    return path;
}

}  // namespace vmap
