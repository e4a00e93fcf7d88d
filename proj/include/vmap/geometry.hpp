#pragma once

#include <algorithm>
#include <cmath>

namespace vmap {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

/// Axis-aligned rectangle, origin top-left, y grows downward.
struct Rect {
    double x = 0.0;
    double y = 0.0;
    double w = 0.0;
    double h = 0.0;

    double right() const { return x + w; }
    double bottom() const { return y + h; }
    double area() const { return w * h; }
    Point center() const { return {x + 0.5 * w, y + 0.5 * h}; }
    bool valid() const { return w > 0.0 && h > 0.0 && std::isfinite(w) && std::isfinite(h); }

    /// Strict interior test.
    bool contains_interior(Point p) const {
        return p.x > x && p.x < right() && p.y > y && p.y < bottom();
    }

    Rect inset(double d) const { return {x + d, y + d, w - 2.0 * d, h - 2.0 * d}; }

    friend bool operator==(const Rect&, const Rect&) = default;
};

/// Larger side divided by the smaller side; always >= 1.
inline double aspect_ratio(const Rect& r) {
    return std::max(r.w / r.h, r.h / r.w);
}

/// True when the closed rectangles intersect, allowing `eps` of float drift.
inline bool closed_intersect(const Rect& a, const Rect& b, double eps) {
    return a.x <= b.right() + eps && b.x <= a.right() + eps &&
           a.y <= b.bottom() + eps && b.y <= a.bottom() + eps;
}

}  // namespace vmap
