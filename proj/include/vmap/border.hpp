#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "vmap/geometry.hpp"
#include "vmap/graph.hpp"
#include "vmap/partition.hpp"

namespace vmap {

/// The requested border does not fit: some solved extent is not positive.
class BorderTooWide : public std::runtime_error {
public:
    BorderTooWide(std::size_t node, const std::string& what)
        : std::runtime_error("border too wide at node " + std::to_string(node) + ": " + what), node_(node) {}
    std::size_t node() const { return node_; }

private:
    std::size_t node_;
};

enum class BorderMode { FixedWidth, Proportional };

struct BorderSpec {
    BorderMode mode = BorderMode::FixedWidth;
    double d = 0.0;  // half-gap width, fixed mode
    double p = 0.0;  // area fraction given up by every leaf, proportional mode
};

/// Axis-aligned segment, a <= b componentwise.
struct Segment {
    Point a;
    Point b;

    bool vertical() const { return a.x == b.x; }
    double length() const { return (b.x - a.x) + (b.y - a.y); }
};

/// Splitting lines of `node` and all its descendants in a raw (gap 0) tree.
std::vector<Segment> splitting_segments(const PartitionTree& tree, std::size_t node);

/// Segment endpoints lying strictly inside another segment (T-junctions).
std::size_t count_junctions(const std::vector<Segment>& segments, double eps);
std::size_t junction_count(const PartitionTree& tree, std::size_t node);

/// Area of the union of 2d-wide bands around the splitting lines inside `node`:
/// 2d * sum(lengths) - 2d^2 * junctions.
double border_area(const PartitionTree& tree, std::size_t node, double d);

/// Leaf area / total leaf area, by item.
std::vector<double> area_proportions(const PartitionTree& tree);

/// Encoding area of one side after its extent is scaled by c: c * scale - offset.
struct EncodingModel {
    double scale = 0.0;
    double offset = 0.0;
};

struct SplitAdjustment {
    double c_left = 1.0;
    double c_right = 1.0;
};

/// Solves c_left * w_left + c_right * w_right = target and
/// (c_left * L.scale - L.offset) / (c_right * R.scale - R.offset) = share_left / share_right.
SplitAdjustment solve_split(double w_left, double w_right, double target, EncodingModel left,
                            EncodingModel right, double share_left, double share_right);

/// Root-to-leaf pass: shrinks the root by d on every side, then moves each
/// splitting line so the two sides' encoding areas (side area minus the
/// bands inside it) match the proportions of the input tree. Result has gap 2d.
PartitionTree top_down_adjust(const PartitionTree& raw, double d);

struct BottomUpStats {
    std::size_t passes = 0;
    double max_relative_deviation = 0.0;
};

/// Leaf-to-root pass on a gap-2d tree: each splitting line is moved so the
/// exact leaf-area sums on both sides match `alpha_p` (proportions by item).
/// Band widths stay fixed, so moving a line slightly changes the ratios inside
/// its children; the pass is repeated until the leaf proportions stop improving.
PartitionTree bottom_up_adjust(const PartitionTree& adjusted, const std::vector<double>& alpha_p,
                               BottomUpStats* stats = nullptr);

/// Conservative feasibility test: every raw leaf extent must exceed 4d.
bool border_fits(const PartitionTree& raw, double d);
/// Largest d accepted by border_fits, scaled by `margin` < 1.
double max_feasible_border(const PartitionTree& raw, double margin = 0.99);

/// Both passes, after the feasibility test. Throws BorderTooWide.
PartitionTree adjust_fixed_width(const PartitionTree& raw, double d, BottomUpStats* stats = nullptr);

/// Every leaf shrunk about its centre to (1 - p) of its area.
PartitionTree proportional_border(const PartitionTree& raw, double p);

struct Bridge {
    std::size_t a = 0;
    std::size_t b = 0;
    Rect band;    // full gap region between the two rectangles
    Rect half_a;  // the half touching a
    Rect half_b;
};

/// Bridges for graph edges whose adjusted rectangles face each other across
/// one band over a segment of positive length.
std::vector<Bridge> bridges(const PartitionTree& adjusted, const Graph& graph, double eps);

}  // namespace vmap
