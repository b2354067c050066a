#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

namespace placard {

struct Point {
    double x = 0;
    double y = 0;
};

/// Label extent in whole pixels.
struct Size {
    int w = 0;
    int h = 0;
};

/// Axis-aligned rectangle over pixel indices, corners inclusive.
struct PixelRect {
    int x0 = 0;
    int y0 = 0;
    int x1 = -1;
    int y1 = -1;

    int width() const { return x1 - x0 + 1; }
    int height() const { return y1 - y0 + 1; }
    bool empty() const { return x1 < x0 || y1 < y0; }

    bool contains(int x, int y) const {
        return x >= x0 && x <= x1 && y >= y0 && y <= y1;
    }

    bool containsRect(const PixelRect& r) const {
        return r.x0 >= x0 && r.x1 <= x1 && r.y0 >= y0 && r.y1 <= y1;
    }

    bool intersects(const PixelRect& r) const {
        return !empty() && !r.empty() &&
               r.x0 <= x1 && r.x1 >= x0 && r.y0 <= y1 && r.y1 >= y0;
    }

    PixelRect clippedTo(const PixelRect& bounds) const {
        return {std::max(x0, bounds.x0), std::max(y0, bounds.y0),
                std::min(x1, bounds.x1), std::min(y1, bounds.y1)};
    }

    PixelRect shifted(int dx, int dy) const {
        return {x0 + dx, y0 + dy, x1 + dx, y1 + dy};
    }

    bool operator==(const PixelRect&) const = default;
};

/// Rectangle of `size` whose (floored) center is at the given pixel.
inline PixelRect centeredRect(int cx, int cy, Size size) {
    int x0 = cx - size.w / 2;
    int y0 = cy - size.h / 2;
    return {x0, y0, x0 + size.w - 1, y0 + size.h - 1};
}

/// One area of a stacked area chart: per x position, the lower and upper
/// boundary values. x is strictly increasing and yLower <= yUpper.
struct AreaSeries {
    struct BoundaryPair {
        double x = 0;
        double yLower = 0;
        double yUpper = 0;
    };
    std::vector<BoundaryPair> pairs;

    bool valid() const {
        if (pairs.empty()) return false;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if (pairs[i].yLower > pairs[i].yUpper) return false;
            if (i > 0 && pairs[i].x <= pairs[i - 1].x) return false;
        }
        return true;
    }
};

inline double distSq(Point a, Point b) {
    double dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}

/// Squared distance from p to segment ab.
inline double distSqToSegment(Point p, Point a, Point b) {
    double vx = b.x - a.x, vy = b.y - a.y;
    double len2 = vx * vx + vy * vy;
    if (len2 == 0.0) return distSq(p, a);
    double t = ((p.x - a.x) * vx + (p.y - a.y) * vy) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return distSq(p, {a.x + t * vx, a.y + t * vy});
}

}  // namespace placard
