#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "vmap/geometry.hpp"

namespace vmap {

/// Orientation of a binary partition.
///  Horizontal: children sit side by side, the parent's width is split and the
///              splitting line is vertical (x = split).
///  Vertical:   children are stacked, the height is split (y = split).
enum class Cut { Horizontal, Vertical };

inline constexpr std::size_t kNoItem = std::numeric_limits<std::size_t>::max();

struct PartitionNode {
    Rect rect;
    std::size_t item = kNoItem;  // leaves only
    Cut cut = Cut::Horizontal;
    double split = 0.0;          // centre of the splitting line (band)
    int left = -1;               // left or top child
    int right = -1;              // right or bottom child

    bool leaf() const { return left < 0; }
};

/// k-d tree of subdividing rectangles. Node 0 is the root.
///
/// `gap` is the width of the band opened around every splitting line: 0 for a
/// raw partition, 2d after fixed-width border adjustment. Children of an
/// internal node lie at distance gap/2 on either side of `split`.
struct PartitionTree {
    std::vector<PartitionNode> nodes;
    double gap = 0.0;

    const PartitionNode& root() const { return nodes.front(); }
    std::size_t leaf_count() const;
    /// Leaf rectangles indexed by item; items must be 0..n-1.
    std::vector<Rect> leaf_rects() const;
    /// Node index of each item's leaf.
    std::vector<std::size_t> leaf_nodes() const;
    /// Items below `node` in left-to-right order.
    std::vector<std::size_t> items_below(std::size_t node) const;
    /// Depth of every node (root = 0).
    std::vector<std::size_t> depths() const;
};

struct PartitionItem {
    std::size_t id = 0;     // leaf payload, normally a vertex index
    double weight = 1.0;    // > 0; only ratios matter
    Point pos;              // embedding position, usually in the unit square
    std::size_t order = 0;  // secondary sort key for coordinate ties
};

/// Mean |aspect_ratio - r| over the rectangles.
double aspect_ratio_loss(std::span<const Rect> rects, double r);

/// Loss of splitting `rect` at weight fraction `fraction` with the given cut.
double cut_loss(const Rect& rect, Cut cut, double fraction, double r);

/// Desired-aspect-ratio binary space partitioning. At every node all n-1 cuts
/// of the x-sorted list (horizontal) and the y-sorted list (vertical) are
/// scored by the mean loss of the two sub-rectangles; the minimum wins, ties
/// going to horizontal and then to the smaller cut index. Losses within 1e-12
/// of each other are treated as equal.
PartitionTree dar_partition(const Rect& rect, std::span<const PartitionItem> items, double r);

/// Clusters first (items are cluster centroids weighted by member sums),
/// then every cluster rectangle is partitioned among its members.
/// `cluster[i]` is the cluster of items[i], in [0, cluster_count).
PartitionTree two_level_partition(const Rect& rect, std::span<const PartitionItem> items,
                                  std::span<const std::size_t> cluster, std::size_t cluster_count,
                                  double r);

/// Scaled equal-weight baseline: equal-weight partition of a square of side
/// rect.h, then all widths scaled by r. Requires rect.w == r * rect.h.
PartitionTree sew_partition(const Rect& rect, std::span<const PartitionItem> items, double r);

}  // namespace vmap
