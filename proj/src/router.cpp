#include "vmap/router.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>
#include <unordered_map>

namespace vmap {

namespace {

struct Line {
    bool vertical;
    double at;    // x of a vertical line, y of a horizontal one
    double from;  // extent along the line
    double to;
    std::vector<std::size_t> nodes;
};

/// Point registry merging coordinates closer than eps.
class NodeIndex {
public:
    NodeIndex(std::vector<CorridorNode>& nodes, double eps) : nodes_(nodes), eps_(eps), cell_(64.0 * eps) {}

    std::size_t get(Point p, CorridorKind kind) {
        const auto cx = key(p.x), cy = key(p.y);
        for (std::int64_t dx = -1; dx <= 1; ++dx) {
            for (std::int64_t dy = -1; dy <= 1; ++dy) {
                auto it = cells_.find(hash(cx + dx, cy + dy));
                if (it == cells_.end()) continue;
                for (auto id : it->second) {
                    const auto& q = nodes_[id].p;
                    if (std::abs(q.x - p.x) <= eps_ && std::abs(q.y - p.y) <= eps_) {
                        if (kind == CorridorKind::Junction) nodes_[id].kind = kind;
                        return id;
                    }
                }
            }
        }
        const auto id = nodes_.size();
        nodes_.push_back({p, kind, kNoItem});
        cells_[hash(cx, cy)].push_back(id);
        return id;
    }

private:
    std::int64_t key(double v) const { return static_cast<std::int64_t>(std::floor(v / cell_)); }
    static std::uint64_t hash(std::int64_t a, std::int64_t b) {
        return (static_cast<std::uint64_t>(a) * 0x9E3779B97F4A7C15ULL) ^ static_cast<std::uint64_t>(b);
    }

    std::vector<CorridorNode>& nodes_;
    double eps_;
    double cell_;
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> cells_;
};

struct Search {
    std::vector<double> dist;
    std::vector<std::size_t> prev;
};

/// Multi-source Dijkstra; ties resolved by the smaller node index.
Search dijkstra(const CorridorNetwork& net, const std::vector<std::vector<std::pair<std::size_t, double>>>& adj,
                const std::array<std::size_t, 4>& sources) {
    constexpr double kInf = std::numeric_limits<double>::infinity();
    Search s{std::vector<double>(net.nodes.size(), kInf), std::vector<std::size_t>(net.nodes.size(), kNoItem)};
    using Entry = std::pair<double, std::size_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
    for (auto src : sources) {
        s.dist[src] = 0.0;
        queue.push({0.0, src});
    }
    while (!queue.empty()) {
        const auto [d, u] = queue.top();
        queue.pop();
        if (d > s.dist[u]) continue;
        for (const auto& [v, w] : adj[u]) {
            if (d + w < s.dist[v]) {
                s.dist[v] = d + w;
                s.prev[v] = u;
                queue.push({s.dist[v], v});
            }
        }
    }
    return s;
}

RoutedChannel extract(const CorridorNetwork& net, const Search& s, std::size_t source, std::size_t target) {
    std::size_t best = kNoItem;
    for (auto port : net.ports.at(target))
        if (best == kNoItem || s.dist[port] < s.dist[best]) best = port;
    RoutedChannel ch{source, target, {}, s.dist[best]};
    if (!std::isfinite(ch.length)) throw std::runtime_error("corridor network is disconnected");
    for (auto u = best; u != kNoItem; u = s.prev[u]) ch.polyline.push_back(net.nodes[u].p);
    std::reverse(ch.polyline.begin(), ch.polyline.end());
    return ch;
}

}  // namespace

std::vector<std::vector<std::pair<std::size_t, double>>> CorridorNetwork::adjacency() const {
    std::vector<std::vector<std::pair<std::size_t, double>>> adj(nodes.size());
    for (const auto& e : edges) {
        adj[e.a].emplace_back(e.b, e.length);
        adj[e.b].emplace_back(e.a, e.length);
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());
    return adj;
}

std::size_t CorridorNetwork::components() const {
    std::vector<std::size_t> parent(nodes.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
    std::function<std::size_t(std::size_t)> root = [&](std::size_t i) {
        return parent[i] == i ? i : parent[i] = root(parent[i]);
    };
    std::size_t count = nodes.size();
    for (const auto& e : edges) {
        const auto a = root(e.a), b = root(e.b);
        if (a != b) {
            parent[a] = b;
            --count;
        }
    }
    return count;
}

CorridorNetwork build_corridor_network(const PartitionTree& adjusted) {
    if (!(adjusted.gap > 0.0)) throw std::invalid_argument("corridor network needs a bordered layout");
    const double d = 0.5 * adjusted.gap;
    const Rect display = adjusted.root().rect.inset(-d);
    const double eps = 1e-9 * std::max(display.w, display.h);

    std::vector<Line> lines;
    lines.push_back({true, display.x, display.y, display.bottom(), {}});
    lines.push_back({true, display.right(), display.y, display.bottom(), {}});
    lines.push_back({false, display.y, display.x, display.right(), {}});
    lines.push_back({false, display.bottom(), display.x, display.right(), {}});
    for (const auto& n : adjusted.nodes) {
        if (n.leaf()) continue;
        // Centre line of the band, reaching the centre lines of the enclosing bands.
        if (n.cut == Cut::Horizontal)
            lines.push_back({true, n.split, n.rect.y - d, n.rect.bottom() + d, {}});
        else
            lines.push_back({false, n.split, n.rect.x - d, n.rect.right() + d, {}});
    }

    CorridorNetwork net;
    NodeIndex index(net.nodes, eps);
    for (auto& line : lines) {
        line.nodes.push_back(index.get(line.vertical ? Point{line.at, line.from} : Point{line.from, line.at},
                                       CorridorKind::Junction));
        line.nodes.push_back(index.get(line.vertical ? Point{line.at, line.to} : Point{line.to, line.at},
                                       CorridorKind::Junction));
    }
    for (auto& v : lines) {
        if (!v.vertical) continue;
        for (auto& h : lines) {
            if (h.vertical) continue;
            if (v.at < h.from - eps || v.at > h.to + eps || h.at < v.from - eps || h.at > v.to + eps) continue;
            const auto id = index.get({v.at, h.at}, CorridorKind::Junction);
            v.nodes.push_back(id);
            h.nodes.push_back(id);
        }
    }

    const auto rects = adjusted.leaf_rects();
    net.ports.resize(rects.size());
    std::vector<CorridorEdge> stubs;
    for (std::size_t v = 0; v < rects.size(); ++v) {
        const Rect& r = rects[v];
        const Point c = r.center();
        const std::array<Point, 4> side{{{r.x, c.y}, {c.x, r.y}, {r.right(), c.y}, {c.x, r.bottom()}}};
        const std::array<Point, 4> border{{{r.x - d, c.y}, {c.x, r.y - d}, {r.right() + d, c.y}, {c.x, r.bottom() + d}}};
        for (std::size_t k = 0; k < 4; ++k) {
            const auto b = index.get(border[k], CorridorKind::BorderSide);
            bool placed = false;
            for (auto& line : lines) {
                const bool vertical_side = k % 2 == 0;
                if (line.vertical != vertical_side) continue;
                const double at = vertical_side ? border[k].x : border[k].y;
                const double along = vertical_side ? border[k].y : border[k].x;
                if (std::abs(line.at - at) <= eps && along >= line.from - eps && along <= line.to + eps) {
                    line.nodes.push_back(b);
                    placed = true;
                    break;
                }
            }
            if (!placed) throw std::logic_error("border midpoint off every corridor");
            const auto port = net.nodes.size();
            net.nodes.push_back({side[k], CorridorKind::RectSide, v});
            net.ports[v][k] = port;
            stubs.push_back({port, b, d});
        }
    }

    for (auto& line : lines) {
        auto coord = [&](std::size_t id) { return line.vertical ? net.nodes[id].p.y : net.nodes[id].p.x; };
        std::sort(line.nodes.begin(), line.nodes.end(), [&](std::size_t a, std::size_t b) {
            return coord(a) < coord(b) || (coord(a) == coord(b) && a < b);
        });
        line.nodes.erase(std::unique(line.nodes.begin(), line.nodes.end()), line.nodes.end());
        for (std::size_t i = 1; i < line.nodes.size(); ++i) {
            const auto a = line.nodes[i - 1], b = line.nodes[i];
            net.edges.push_back({std::min(a, b), std::max(a, b), coord(b) - coord(a)});
        }
    }
    net.edges.insert(net.edges.end(), stubs.begin(), stubs.end());
    return net;
}

RoutedChannel route_channel(const CorridorNetwork& network, std::size_t source, std::size_t target) {
    const auto adj = network.adjacency();
    return extract(network, dijkstra(network, adj, network.ports.at(source)), source, target);
}

std::vector<RoutedChannel> ego_network(const CorridorNetwork& network, const Graph& graph, std::size_t v) {
    std::vector<RoutedChannel> out;
    if (graph.degree(v) == 0) return out;
    const auto adj = network.adjacency();
    const auto search = dijkstra(network, adj, network.ports.at(v));
    for (auto u : graph.neighbors(v)) out.push_back(extract(network, search, v, u));
    return out;
}

RouteResult route_query(const CorridorNetwork& network, const Graph& graph, std::size_t a, std::size_t b,
                        RouteMode mode) {
    if (a == b) throw std::invalid_argument("route endpoints must differ");
    RouteResult out;
    const auto adj = network.adjacency();
    if (mode == RouteMode::Geometric) {
        out.hops = {a, b};
        out.channels.push_back(extract(network, dijkstra(network, adj, network.ports.at(a)), a, b));
        return out;
    }
    out.hops = shortest_hop_path(graph, a, b);
    for (std::size_t i = 0; i + 1 < out.hops.size(); ++i) {
        const auto s = out.hops[i], t = out.hops[i + 1];
        out.channels.push_back(extract(network, dijkstra(network, adj, network.ports.at(s)), s, t));
    }
    out.highlighted.assign(out.hops.begin() + 1, out.hops.end() - 1);
    return out;
}

}  // namespace vmap
