#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "vmap/metrics.hpp"
#include "vmap/partition.hpp"
#include "vmap/router.hpp"

// Independent reference implementations the library is checked against.
namespace testing {

struct RootChoice {
    vmap::Cut cut;
    double split;
    double loss;
};

inline double ratio_gap(double w, double h, double r) { return std::abs((w > h ? w / h : h / w) - r); }

// Exhaustive scan of every (orientation, cut) pair at the root. Losses equal up to
// rounding are ties, resolved towards the first candidate.
inline RootChoice enumerate_root(const vmap::Rect& rect, const std::vector<vmap::PartitionItem>& items, double r) {
    RootChoice best{vmap::Cut::Horizontal, 0.0, std::numeric_limits<double>::infinity()};
    for (int o = 0; o < 2; ++o) {
        std::vector<vmap::PartitionItem> sorted = items;
        std::sort(sorted.begin(), sorted.end(), [o](const vmap::PartitionItem& a, const vmap::PartitionItem& b) {
            const double ca = o == 0 ? a.pos.x : a.pos.y, cb = o == 0 ? b.pos.x : b.pos.y;
            return ca < cb || (ca == cb && a.order < b.order);
        });
        double total = 0.0;
        for (const auto& it : sorted) total += it.weight;
        double left = 0.0;
        for (std::size_t k = 1; k < sorted.size(); ++k) {
            left += sorted[k - 1].weight;
            const double f = left / total;
            double loss, split;
            if (o == 0) {
                loss = 0.5 * (ratio_gap(rect.w * f, rect.h, r) + ratio_gap(rect.w * (1 - f), rect.h, r));
                split = rect.x + rect.w * f;
            } else {
                loss = 0.5 * (ratio_gap(rect.w, rect.h * f, r) + ratio_gap(rect.w, rect.h * (1 - f), r));
                split = rect.y + rect.h * f;
            }
            if (loss < best.loss - 1e-12) best = {o == 0 ? vmap::Cut::Horizontal : vmap::Cut::Vertical, split, loss};
        }
    }
    return best;
}

inline std::vector<vmap::Edge> pairwise_contacts(const std::vector<vmap::Rect>& rects, double eps) {
    std::vector<vmap::Edge> out;
    for (std::size_t i = 0; i < rects.size(); ++i)
        for (std::size_t j = i + 1; j < rects.size(); ++j) {
            const auto& a = rects[i];
            const auto& b = rects[j];
            const bool x = std::max(a.x, b.x) <= std::min(a.right(), b.right()) + eps;
            const bool y = std::max(a.y, b.y) <= std::min(a.bottom(), b.bottom()) + eps;
            if (x && y) out.push_back({i, j});
        }
    return out;
}

// Plain relaxation over the edge list until nothing changes.
inline std::vector<double> bellman_ford(const vmap::CorridorNetwork& net, const std::array<std::size_t, 4>& sources) {
    std::vector<double> dist(net.nodes.size(), std::numeric_limits<double>::infinity());
    for (auto s : sources) dist[s] = 0.0;
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& e : net.edges) {
            if (dist[e.a] + e.length < dist[e.b]) dist[e.b] = dist[e.a] + e.length, changed = true;
            if (dist[e.b] + e.length < dist[e.a]) dist[e.a] = dist[e.b] + e.length, changed = true;
        }
    }
    return dist;
}

inline double polyline_length(const std::vector<vmap::Point>& pts) {
    double len = 0.0;
    for (std::size_t i = 1; i < pts.size(); ++i) len += std::hypot(pts[i].x - pts[i - 1].x, pts[i].y - pts[i - 1].y);
    return len;
}

// Samples every unit step along the polyline; counts samples strictly inside other rectangles.
inline std::size_t occlusions(const vmap::RoutedChannel& ch, const std::vector<vmap::Rect>& rects) {
    std::size_t hits = 0;
    for (std::size_t i = 1; i < ch.polyline.size(); ++i) {
        const vmap::Point a = ch.polyline[i - 1], b = ch.polyline[i];
        const double len = std::hypot(b.x - a.x, b.y - a.y);
        const auto steps = static_cast<std::size_t>(std::ceil(len));
        for (std::size_t k = 0; k <= steps; ++k) {
            const double t = steps ? std::min(1.0, static_cast<double>(k) / static_cast<double>(steps)) : 0.0;
            const vmap::Point p{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
            for (std::size_t v = 0; v < rects.size(); ++v)
                if (v != ch.source && v != ch.target && rects[v].contains_interior(p)) ++hits;
        }
    }
    return hits;
}

inline double max_relative_deviation(const std::vector<double>& got, const std::vector<double>& want) {
    double dev = 0.0;
    for (std::size_t i = 0; i < got.size(); ++i) dev = std::max(dev, std::abs(got[i] - want[i]) / want[i]);
    return dev;
}

}  // namespace testing
