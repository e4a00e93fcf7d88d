#include "vmap/partition.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace vmap {

std::size_t PartitionTree::leaf_count() const {
    return static_cast<std::size_t>(
        std::count_if(nodes.begin(), nodes.end(), [](const PartitionNode& n) { return n.leaf(); }));
}

std::vector<Rect> PartitionTree::leaf_rects() const {
    std::vector<Rect> out(leaf_count());
    for (const auto& n : nodes)
        if (n.leaf()) out.at(n.item) = n.rect;
    return out;
}

std::vector<std::size_t> PartitionTree::leaf_nodes() const {
    std::vector<std::size_t> out(leaf_count(), kNoItem);
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i].leaf()) out.at(nodes[i].item) = i;
    return out;
}

std::vector<std::size_t> PartitionTree::items_below(std::size_t node) const {
    std::vector<std::size_t> out;
    std::vector<std::size_t> stack{node};
    while (!stack.empty()) {
        const auto& n = nodes[stack.back()];
        stack.pop_back();
        if (n.leaf()) {
            out.push_back(n.item);
        } else {
            stack.push_back(static_cast<std::size_t>(n.right));
            stack.push_back(static_cast<std::size_t>(n.left));
        }
    }
    return out;
}

std::vector<std::size_t> PartitionTree::depths() const {
    std::vector<std::size_t> out(nodes.size(), 0);
    // Children are always appended after their parent.
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i].leaf()) continue;
        out[static_cast<std::size_t>(nodes[i].left)] = out[i] + 1;
        out[static_cast<std::size_t>(nodes[i].right)] = out[i] + 1;
    }
    return out;
}

double aspect_ratio_loss(std::span<const Rect> rects, double r) {
    if (rects.empty()) return 0.0;
    double sum = 0.0;
    for (const auto& rect : rects) sum += std::abs(aspect_ratio(rect) - r);
    return sum / static_cast<double>(rects.size());
}

namespace {

std::pair<Rect, Rect> split_rect(const Rect& rect, Cut cut, double fraction) {
    if (cut == Cut::Horizontal) {
        const double wl = rect.w * fraction;
        return {{rect.x, rect.y, wl, rect.h}, {rect.x + wl, rect.y, rect.w - wl, rect.h}};
    }
    const double hl = rect.h * fraction;
    return {{rect.x, rect.y, rect.w, hl}, {rect.x, rect.y + hl, rect.w, rect.h - hl}};
}

constexpr double kTieTolerance = 1e-12;

struct Choice {
    Cut cut = Cut::Horizontal;
    std::size_t k = 1;  // size of the left/top sub-list
    std::vector<std::size_t> order;
};

using Splitter = std::function<Choice(const Rect&, std::span<const PartitionItem>,
                                      std::vector<std::size_t>&)>;

void sort_along(std::span<const PartitionItem> items, std::vector<std::size_t>& idx, Cut cut) {
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        const double ca = cut == Cut::Horizontal ? items[a].pos.x : items[a].pos.y;
        const double cb = cut == Cut::Horizontal ? items[b].pos.x : items[b].pos.y;
        if (ca != cb) return ca < cb;
        return items[a].order < items[b].order;
    });
}

std::vector<double> prefix_weights(std::span<const PartitionItem> items,
                                   const std::vector<std::size_t>& idx) {
    std::vector<double> prefix(idx.size() + 1, 0.0);
    for (std::size_t i = 0; i < idx.size(); ++i) prefix[i + 1] = prefix[i] + items[idx[i]].weight;
    return prefix;
}

Choice dar_choice(const Rect& rect, std::span<const PartitionItem> items,
                  std::vector<std::size_t>& idx, double r) {
    Choice best;
    double best_loss = std::numeric_limits<double>::infinity();
    for (Cut cut : {Cut::Horizontal, Cut::Vertical}) {
        std::vector<std::size_t> order = idx;
        sort_along(items, order, cut);
        const auto prefix = prefix_weights(items, order);
        const double total = prefix.back();
        bool improved = false;
        for (std::size_t k = 1; k < order.size(); ++k) {
            const double loss = cut_loss(rect, cut, prefix[k] / total, r);
            // Losses within rounding of the best count as ties; ties keep the earlier candidate.
            if (loss < best_loss - kTieTolerance) {
                best_loss = loss;
                best.cut = cut;
                best.k = k;
                improved = true;
            }
        }
        if (improved) best.order = std::move(order);
    }
    return best;
}

Choice equal_weight_choice(const Rect& rect, std::span<const PartitionItem> items,
                           std::vector<std::size_t>& idx) {
    Choice c;
    c.cut = rect.w >= rect.h ? Cut::Horizontal : Cut::Vertical;
    c.order = idx;
    sort_along(items, c.order, c.cut);
    const auto prefix = prefix_weights(items, c.order);
    const double half = 0.5 * prefix.back();
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t k = 1; k < c.order.size(); ++k) {
        const double diff = std::abs(prefix[k] - half);
        if (diff < best) {
            best = diff;
            c.k = k;
        }
    }
    return c;
}

class Builder {
public:
    Builder(std::span<const PartitionItem> items, Splitter splitter,
            std::function<void(std::size_t node, std::size_t item)> on_leaf = {})
        : items_(items), splitter_(std::move(splitter)), on_leaf_(std::move(on_leaf)) {}

    std::vector<PartitionNode> nodes;

    std::size_t build(const Rect& rect, std::vector<std::size_t> idx) {
        const std::size_t self = nodes.size();
        nodes.push_back({});
        nodes[self].rect = rect;
        if (idx.size() == 1) {
            nodes[self].item = items_[idx.front()].id;
            if (on_leaf_) on_leaf_(self, idx.front());
            return self;
        }
        Choice c = splitter_(rect, items_, idx);
        double left_w = 0.0;
        double total = 0.0;
        for (std::size_t i = 0; i < c.order.size(); ++i) {
            total += items_[c.order[i]].weight;
            if (i < c.k) left_w += items_[c.order[i]].weight;
        }
        const auto [lr, rr] = split_rect(rect, c.cut, left_w / total);
        std::vector<std::size_t> left(c.order.begin(), c.order.begin() + static_cast<long>(c.k));
        std::vector<std::size_t> right(c.order.begin() + static_cast<long>(c.k), c.order.end());
        const auto l = build(lr, std::move(left));
        const auto rgt = build(rr, std::move(right));
        auto& n = nodes[self];
        n.cut = c.cut;
        n.split = c.cut == Cut::Horizontal ? lr.right() : lr.bottom();
        n.left = static_cast<int>(l);
        n.right = static_cast<int>(rgt);
        return self;
    }

private:
    std::span<const PartitionItem> items_;
    Splitter splitter_;
    std::function<void(std::size_t, std::size_t)> on_leaf_;
};

std::vector<std::size_t> all_indices(std::size_t n) {
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    return idx;
}

void check_inputs(const Rect& rect, std::span<const PartitionItem> items) {
    if (items.empty()) throw std::invalid_argument("partition needs at least one item");
    if (!rect.valid()) throw std::invalid_argument("partition rectangle must have positive extent");
    for (const auto& it : items)
        if (!(it.weight > 0.0) || !std::isfinite(it.weight))
            throw std::invalid_argument("partition item weights must be positive");
}

}  // namespace

double cut_loss(const Rect& rect, Cut cut, double fraction, double r) {
    const auto [a, b] = split_rect(rect, cut, fraction);
    return 0.5 * (std::abs(aspect_ratio(a) - r) + std::abs(aspect_ratio(b) - r));
}

PartitionTree dar_partition(const Rect& rect, std::span<const PartitionItem> items, double r) {
    check_inputs(rect, items);
    Builder b(items, [r](const Rect& rc, std::span<const PartitionItem> it, std::vector<std::size_t>& idx) {
        return dar_choice(rc, it, idx, r);
    });
    b.build(rect, all_indices(items.size()));
    return {std::move(b.nodes), 0.0};
}

PartitionTree two_level_partition(const Rect& rect, std::span<const PartitionItem> items,
                                  std::span<const std::size_t> cluster, std::size_t cluster_count,
                                  double r) {
    check_inputs(rect, items);
    if (cluster.size() != items.size()) throw std::invalid_argument("cluster list size mismatch");

    std::vector<std::vector<std::size_t>> members(cluster_count);
    for (std::size_t i = 0; i < items.size(); ++i) members.at(cluster[i]).push_back(i);

    std::vector<PartitionItem> groups;
    for (std::size_t c = 0; c < cluster_count; ++c) {
        if (members[c].empty()) continue;
        PartitionItem g;
        g.id = c;
        g.order = c;
        g.weight = 0.0;
        for (auto i : members[c]) {
            g.weight += items[i].weight;
            g.pos.x += items[i].pos.x;
            g.pos.y += items[i].pos.y;
        }
        g.pos.x /= static_cast<double>(members[c].size());
        g.pos.y /= static_cast<double>(members[c].size());
        groups.push_back(g);
    }

    auto dar = [r](const Rect& rc, std::span<const PartitionItem> it, std::vector<std::size_t>& idx) {
        return dar_choice(rc, it, idx, r);
    };

    // Cluster leaves are grafted in place: the member subtree root replaces the leaf.
    std::vector<PartitionNode> out;
    Builder top(groups, dar);
    top.build(rect, all_indices(groups.size()));
    std::vector<int> remap(top.nodes.size(), -1);
    std::function<int(std::size_t)> copy = [&](std::size_t t) -> int {
        const PartitionNode& tn = top.nodes[t];
        if (tn.leaf()) {
            const auto c = tn.item;
            Builder sub(items, dar);
            sub.build(tn.rect, members[c]);
            const int base = static_cast<int>(out.size());
            for (auto n : sub.nodes) {
                if (!n.leaf()) {
                    n.left += base;
                    n.right += base;
                }
                out.push_back(n);
            }
            return base;
        }
        const int self = static_cast<int>(out.size());
        out.push_back(tn);
        const int l = copy(static_cast<std::size_t>(tn.left));
        const int rr = copy(static_cast<std::size_t>(tn.right));
        out[static_cast<std::size_t>(self)].left = l;
        out[static_cast<std::size_t>(self)].right = rr;
        return self;
    };
    copy(0);
    return {std::move(out), 0.0};
}

PartitionTree sew_partition(const Rect& rect, std::span<const PartitionItem> items, double r) {
    check_inputs(rect, items);
    if (std::abs(rect.w - r * rect.h) > 1e-9 * std::max(rect.w, rect.h))
        throw std::invalid_argument("sew_partition needs a display rectangle of ratio r");
    const Rect square{rect.x, rect.y, rect.h, rect.h};
    Builder b(items, [](const Rect& rc, std::span<const PartitionItem> it, std::vector<std::size_t>& idx) {
        return equal_weight_choice(rc, it, idx);
    });
    b.build(square, all_indices(items.size()));
    for (auto& n : b.nodes) {
        n.rect.x = rect.x + (n.rect.x - rect.x) * r;
        n.rect.w *= r;
        if (!n.leaf() && n.cut == Cut::Horizontal) n.split = rect.x + (n.split - rect.x) * r;
    }
    return {std::move(b.nodes), 0.0};
}

}  // namespace vmap
