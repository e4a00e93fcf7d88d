#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "vmap/geometry.hpp"
#include "vmap/graph.hpp"
#include "vmap/partition.hpp"

namespace vmap {

enum class CorridorKind { RectSide, BorderSide, Junction };

struct CorridorNode {
    Point p;
    CorridorKind kind = CorridorKind::Junction;
    std::size_t owner = kNoItem;  // vertex of a RectSide node
};

struct CorridorEdge {
    std::size_t a = 0;
    std::size_t b = 0;
    double length = 0.0;
};

/// Routing graph over the border space of an adjusted layout. Nodes are the
/// midpoints of rectangle sides, the midpoints of their border sides and the
/// crossings of border centre lines; edges run along centre lines, plus one
/// stub per rectangle side crossing its own border.
struct CorridorNetwork {
    std::vector<CorridorNode> nodes;
    std::vector<CorridorEdge> edges;
    /// RectSide node ids per vertex: left, top, right, bottom.
    std::vector<std::array<std::size_t, 4>> ports;

    std::vector<std::vector<std::pair<std::size_t, double>>> adjacency() const;
    /// Number of connected components.
    std::size_t components() const;
};

/// `adjusted` must carry a gap of 2d; the display is its root rectangle grown by d.
CorridorNetwork build_corridor_network(const PartitionTree& adjusted);

struct RoutedChannel {
    std::size_t source = 0;
    std::size_t target = 0;
    std::vector<Point> polyline;
    double length = 0.0;
};

/// Shortest corridor channel between two vertices (any port to any port).
RoutedChannel route_channel(const CorridorNetwork& network, std::size_t source, std::size_t target);

/// One channel per graph neighbour of v, in ascending neighbour order.
std::vector<RoutedChannel> ego_network(const CorridorNetwork& network, const Graph& graph, std::size_t v);

enum class RouteMode {
    HopPath,    // minimal-hop graph path, one channel per hop
    Geometric,  // a single shortest channel between the endpoints
};

struct RouteResult {
    std::vector<std::size_t> hops;
    std::vector<RoutedChannel> channels;
    std::vector<std::size_t> highlighted;  // in-between vertices
};

/// Throws DisconnectedError in HopPath mode when no graph path exists.
RouteResult route_query(const CorridorNetwork& network, const Graph& graph, std::size_t a, std::size_t b,
                        RouteMode mode = RouteMode::HopPath);

}  // namespace vmap
