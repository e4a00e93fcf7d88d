#include "vmap/border.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <utility>

namespace vmap {

namespace {

std::size_t child(const PartitionNode& n, bool left) {
    return static_cast<std::size_t>(left ? n.left : n.right);
}

/// Position of the splitting line inside the space left after the band.
double fraction(const PartitionTree& tree, const PartitionNode& n) {
    const double half = 0.5 * tree.gap;
    if (n.cut == Cut::Horizontal) return (n.split - half - n.rect.x) / (n.rect.w - tree.gap);
    return (n.split - half - n.rect.y) / (n.rect.h - tree.gap);
}

std::vector<double> fractions(const PartitionTree& tree) {
    std::vector<double> t(tree.nodes.size(), 0.0);
    for (std::size_t i = 0; i < tree.nodes.size(); ++i)
        if (!tree.nodes[i].leaf()) t[i] = fraction(tree, tree.nodes[i]);
    return t;
}

/// Child rectangles of a node laid out in `rect` with the given fraction and gap.
std::pair<Rect, Rect> child_rects(const Rect& rect, Cut cut, double t, double gap) {
    if (cut == Cut::Horizontal) {
        const double avail = rect.w - gap;
        const double wl = t * avail;
        return {{rect.x, rect.y, wl, rect.h}, {rect.x + wl + gap, rect.y, avail - wl, rect.h}};
    }
    const double avail = rect.h - gap;
    const double hl = t * avail;
    return {{rect.x, rect.y, rect.w, hl}, {rect.x, rect.y + hl + gap, rect.w, avail - hl}};
}

void relayout(PartitionTree& tree, const std::vector<double>& t, std::size_t node, const Rect& rect) {
    if (!(rect.w > 0.0) || !(rect.h > 0.0)) throw BorderTooWide(node, "rectangle extent not positive");
    auto& n = tree.nodes[node];
    n.rect = rect;
    if (n.leaf()) return;
    const auto [l, r] = child_rects(rect, n.cut, t[node], tree.gap);
    n.split = n.cut == Cut::Horizontal ? l.right() + 0.5 * tree.gap : l.bottom() + 0.5 * tree.gap;
    relayout(tree, t, child(n, true), l);
    relayout(tree, t, child(n, false), r);
}

/// Splitting lines of the subtree at `node` laid out without gaps in `rect`,
/// using `t` as fractions.
void collect_segments(const PartitionTree& tree, const std::vector<double>& t, std::size_t node,
                      const Rect& rect, std::vector<Segment>& out) {
    const auto& n = tree.nodes[node];
    if (n.leaf()) return;
    const auto [l, r] = child_rects(rect, n.cut, t[node], 0.0);
    if (n.cut == Cut::Horizontal)
        out.push_back({{l.right(), rect.y}, {l.right(), rect.bottom()}});
    else
        out.push_back({{rect.x, l.bottom()}, {rect.right(), l.bottom()}});
    collect_segments(tree, t, child(n, true), l, out);
    collect_segments(tree, t, child(n, false), r, out);
}

bool in_interior(const Segment& s, Point p, double eps) {
    if (s.vertical())
        return std::abs(p.x - s.a.x) <= eps && p.y > s.a.y + eps && p.y < s.b.y - eps;
    return std::abs(p.y - s.a.y) <= eps && p.x > s.a.x + eps && p.x < s.b.x - eps;
}

double partial_sum(const std::vector<double>& alpha, const PartitionTree& tree, std::size_t node) {
    double s = 0.0;
    for (auto item : tree.items_below(node)) s += alpha.at(item);
    return s;
}

/// Leaf-area sum of the subtree as an affine function a + b*s of its extent s
/// along `axis_x ? x : y`, the other extent fixed at `other`, fractions fixed.
std::pair<double, double> affine_area(const PartitionTree& tree, const std::vector<double>& t,
                                      std::size_t node, bool axis_x, double other) {
    const auto& n = tree.nodes[node];
    if (n.leaf()) return {0.0, other};
    const bool along = (n.cut == Cut::Horizontal) == axis_x;
    if (along) {
        const auto [al, bl] = affine_area(tree, t, child(n, true), axis_x, other);
        const auto [ar, br] = affine_area(tree, t, child(n, false), axis_x, other);
        const double b = t[node] * bl + (1.0 - t[node]) * br;
        return {al + ar - tree.gap * b, b};
    }
    const double avail = other - tree.gap;
    const auto [al, bl] = affine_area(tree, t, child(n, true), axis_x, t[node] * avail);
    const auto [ar, br] = affine_area(tree, t, child(n, false), axis_x, (1.0 - t[node]) * avail);
    return {al + ar, bl + br};
}

double max_deviation(const PartitionTree& tree, const std::vector<double>& alpha_p) {
    const auto prop = area_proportions(tree);
    double worst = 0.0;
    for (std::size_t i = 0; i < prop.size(); ++i) worst = std::max(worst, std::abs(prop[i] / alpha_p[i] - 1.0));
    return worst;
}

}  // namespace

std::vector<Segment> splitting_segments(const PartitionTree& tree, std::size_t node) {
    std::vector<Segment> out;
    collect_segments(tree, fractions(tree), node, tree.nodes.at(node).rect, out);
    return out;
}

std::size_t count_junctions(const std::vector<Segment>& segments, double eps) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < segments.size(); ++i) {
        for (Point p : {segments[i].a, segments[i].b}) {
            for (std::size_t j = 0; j < segments.size(); ++j) {
                if (i != j && segments[i].vertical() != segments[j].vertical() &&
                    in_interior(segments[j], p, eps)) {
                    ++count;
                    break;
                }
            }
        }
    }
    return count;
}

std::size_t junction_count(const PartitionTree& tree, std::size_t node) {
    const Rect& r = tree.nodes.at(node).rect;
    return count_junctions(splitting_segments(tree, node), 1e-9 * std::max(r.w, r.h));
}

double border_area(const PartitionTree& tree, std::size_t node, double d) {
    const auto segs = splitting_segments(tree, node);
    double len = 0.0;
    for (const auto& s : segs) len += s.length();
    const Rect& r = tree.nodes.at(node).rect;
    const auto j = count_junctions(segs, 1e-9 * std::max(r.w, r.h));
    return 2.0 * d * len - 2.0 * d * d * static_cast<double>(j);
}

std::vector<double> area_proportions(const PartitionTree& tree) {
    const auto rects = tree.leaf_rects();
    double total = 0.0;
    for (const auto& r : rects) total += r.area();
    std::vector<double> out;
    out.reserve(rects.size());
    for (const auto& r : rects) out.push_back(r.area() / total);
    return out;
}

SplitAdjustment solve_split(double w_left, double w_right, double target, EncodingModel left,
                            EncodingModel right, double share_left, double share_right) {
    // [ w_left                 w_right               ] [c_l]   [ target                                      ]
    // [ L.scale * share_right  -R.scale * share_left ] [c_r] = [ L.offset * share_right - R.offset * share_left ]
    const double a11 = w_left, a12 = w_right;
    const double a21 = left.scale * share_right, a22 = -right.scale * share_left;
    const double b1 = target, b2 = left.offset * share_right - right.offset * share_left;
    const double det = a11 * a22 - a12 * a21;
    return {(b1 * a22 - a12 * b2) / det, (a11 * b2 - a21 * b1) / det};
}

PartitionTree top_down_adjust(const PartitionTree& raw, double d) {
    if (!(d > 0.0)) throw std::invalid_argument("border width must be positive");
    if (raw.gap != 0.0) throw std::invalid_argument("top_down_adjust expects a raw partition");
    const auto alpha = area_proportions(raw);
    const auto raw_t = fractions(raw);
    std::vector<double> t = raw_t;
    PartitionTree out = raw;
    out.gap = 2.0 * d;
    const double eps = 1e-9 * std::max(raw.root().rect.w, raw.root().rect.h);

    std::function<void(std::size_t, const Rect&)> visit = [&](std::size_t node, const Rect& rect) {
        if (!(rect.w > 0.0) || !(rect.h > 0.0)) throw BorderTooWide(node, "rectangle extent not positive");
        const auto& n = raw.nodes[node];
        out.nodes[node].rect = rect;
        if (n.leaf()) return;

        // Sides as they would be before this line moves: the raw tiling scaled into rect.
        const auto [l0, r0] = child_rects(rect, n.cut, raw_t[node], 0.0);
        const bool horizontal = n.cut == Cut::Horizontal;
        auto model = [&](std::size_t side, const Rect& side_rect) {
            std::vector<Segment> segs;
            collect_segments(raw, raw_t, side, side_rect, segs);
            double stretched = 0.0, fixed = 0.0;
            for (const auto& s : segs) {
                // Lines running along the split axis stretch with the side.
                const bool stretches = horizontal ? !s.vertical() : s.vertical();
                (stretches ? stretched : fixed) += s.length();
            }
            const double j = static_cast<double>(count_junctions(segs, eps));
            return EncodingModel{side_rect.area() - 2.0 * d * stretched, 2.0 * d * fixed - 2.0 * d * d * j};
        };
        const double wl = horizontal ? l0.w : l0.h;
        const double wr = horizontal ? r0.w : r0.h;
        const double extent = horizontal ? rect.w : rect.h;
        const auto c = solve_split(wl, wr, extent - 2.0 * d, model(child(n, true), l0),
                                   model(child(n, false), r0), partial_sum(alpha, raw, child(n, true)),
                                   partial_sum(alpha, raw, child(n, false)));
        const double new_wl = c.c_left * wl;
        if (!(new_wl > 0.0) || !(c.c_right * wr > 0.0)) throw BorderTooWide(node, "no positive split");
        t[node] = new_wl / (extent - 2.0 * d);
        const auto [l, r] = child_rects(rect, n.cut, t[node], out.gap);
        out.nodes[node].split = horizontal ? l.right() + d : l.bottom() + d;
        visit(child(n, true), l);
        visit(child(n, false), r);
    };
    visit(0, raw.root().rect.inset(d));
    return out;
}

PartitionTree bottom_up_adjust(const PartitionTree& adjusted, const std::vector<double>& alpha_p,
                               BottomUpStats* stats) {
    PartitionTree tree = adjusted;
    auto t = fractions(tree);
    const double gap = tree.gap;

    // Post-order: children before parents.
    std::vector<std::size_t> order;
    std::function<void(std::size_t)> post = [&](std::size_t node) {
        const auto& n = tree.nodes[node];
        if (!n.leaf()) {
            post(child(n, true));
            post(child(n, false));
            order.push_back(node);
        }
    };
    post(0);

    std::vector<double> share(tree.nodes.size(), 0.0);
    for (std::size_t i = 0; i < tree.nodes.size(); ++i) share[i] = partial_sum(alpha_p, tree, i);

    constexpr std::size_t kMaxPasses = 500;
    double best = max_deviation(tree, alpha_p);
    PartitionTree best_tree = tree;
    std::size_t passes = 0, stale = 0;
    while (passes < kMaxPasses && best > 1e-14 && stale < 3) {
        ++passes;
        for (auto node : order) {
            const auto& n = tree.nodes[node];
            const bool horizontal = n.cut == Cut::Horizontal;
            const double extent = horizontal ? n.rect.w : n.rect.h;
            const double other = horizontal ? n.rect.h : n.rect.w;
            const double avail = extent - gap;
            const double wl = t[node] * avail;
            const double wr = avail - wl;
            const auto [al, bl] = affine_area(tree, t, child(n, true), horizontal, other);
            const auto [ar, br] = affine_area(tree, t, child(n, false), horizontal, other);
            const auto c = solve_split(wl, wr, avail, {bl * wl, -al}, {br * wr, -ar},
                                       share[child(n, true)], share[child(n, false)]);
            const double new_wl = c.c_left * wl;
            if (!(new_wl > 0.0) || !(c.c_right * wr > 0.0)) throw BorderTooWide(node, "no positive split");
            t[node] = new_wl / avail;
        }
        relayout(tree, t, 0, tree.nodes[0].rect);
        const double dev = max_deviation(tree, alpha_p);
        if (dev < best) {
            best = dev;
            best_tree = tree;
            stale = 0;
        } else {
            ++stale;
        }
    }
    if (stats) *stats = {passes, best};
    return best_tree;
}

bool border_fits(const PartitionTree& raw, double d) {
    for (const auto& n : raw.nodes)
        if (n.leaf() && (n.rect.w <= 4.0 * d || n.rect.h <= 4.0 * d)) return false;
    return true;
}

double max_feasible_border(const PartitionTree& raw, double margin) {
    double smallest = std::numeric_limits<double>::infinity();
    for (const auto& n : raw.nodes)
        if (n.leaf()) smallest = std::min({smallest, n.rect.w, n.rect.h});
    return margin * smallest / 4.0;
}

PartitionTree adjust_fixed_width(const PartitionTree& raw, double d, BottomUpStats* stats) {
    if (!border_fits(raw, d)) {
        for (std::size_t i = 0; i < raw.nodes.size(); ++i) {
            const auto& n = raw.nodes[i];
            if (n.leaf() && (n.rect.w <= 4.0 * d || n.rect.h <= 4.0 * d))
                throw BorderTooWide(i, "leaf extent below 4d");
        }
    }
    return bottom_up_adjust(top_down_adjust(raw, d), area_proportions(raw), stats);
}

PartitionTree proportional_border(const PartitionTree& raw, double p) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("proportional border needs 0 < p < 1");
    PartitionTree out = raw;
    const double s = std::sqrt(1.0 - p);
    for (auto& n : out.nodes) {
        if (!n.leaf()) continue;
        const Point c = n.rect.center();
        n.rect = {c.x - 0.5 * s * n.rect.w, c.y - 0.5 * s * n.rect.h, s * n.rect.w, s * n.rect.h};
    }
    return out;
}

std::vector<Bridge> bridges(const PartitionTree& adjusted, const Graph& graph, double eps) {
    const auto rects = adjusted.leaf_rects();
    const double gap = adjusted.gap;
    std::vector<Bridge> out;
    for (const auto& [a, b] : graph.edges()) {
        const Rect& ra = rects.at(a);
        const Rect& rb = rects.at(b);
        // Side by side across a vertical band.
        for (const auto& [l, r, l_is_a] : {std::tuple{&ra, &rb, true}, std::tuple{&rb, &ra, false}}) {
            if (std::abs(r->x - (l->right() + gap)) > eps) continue;
            const double lo = std::max(l->y, r->y), hi = std::min(l->bottom(), r->bottom());
            if (hi - lo <= eps) continue;
            const Rect band{l->right(), lo, gap, hi - lo};
            const Rect hl{band.x, lo, 0.5 * gap, hi - lo}, hr{band.x + 0.5 * gap, lo, 0.5 * gap, hi - lo};
            out.push_back({a, b, band, l_is_a ? hl : hr, l_is_a ? hr : hl});
        }
        // Stacked across a horizontal band.
        for (const auto& [t, u, t_is_a] : {std::tuple{&ra, &rb, true}, std::tuple{&rb, &ra, false}}) {
            if (std::abs(u->y - (t->bottom() + gap)) > eps) continue;
            const double lo = std::max(t->x, u->x), hi = std::min(t->right(), u->right());
            if (hi - lo <= eps) continue;
            const Rect band{lo, t->bottom(), hi - lo, gap};
            const Rect ht{lo, band.y, hi - lo, 0.5 * gap}, hb{lo, band.y + 0.5 * gap, hi - lo, 0.5 * gap};
            out.push_back({a, b, band, t_is_a ? ht : hb, t_is_a ? hb : ht});
        }
    }
    return out;
}

}  // namespace vmap
