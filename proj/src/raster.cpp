#include "placard/raster.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace placard {

namespace {

// Emits the pixel run of row y whose analytic interval is [lo, hi]. The
// interval may be off by a rounding error, so the run is widened by one
// pixel and the ends are re-tested with the exact predicate; convexity of
// the rasterized shape makes everything between the verified ends inside.
template <typename Pred>
void emitVerifiedRun(int y, double lo, double hi, const PixelRect& clip,
                     Pred&& inside, std::vector<RowSpan>& out) {
    int xs = std::max(clip.x0, static_cast<int>(std::floor(lo)) - 1);
    int xe = std::min(clip.x1, static_cast<int>(std::ceil(hi)) + 1);
    while (xs <= xe && !inside(xs, y)) ++xs;
    while (xe >= xs && !inside(xe, y)) --xe;
    if (xs <= xe) out.push_back({y, xs, xe});
}

}  // namespace

void appendDiscSpans(Point c, double radius, double inflate,
                     const PixelRect& clip, std::vector<RowSpan>& out) {
    double r = radius + inflate;
    if (r < 0) return;
    double r2 = r * r;
    auto inside = [&](int x, int y) {
        return distSq({static_cast<double>(x), static_cast<double>(y)}, c) <= r2;
    };
    int y0 = std::max(clip.y0, static_cast<int>(std::floor(c.y - r)));
    int y1 = std::min(clip.y1, static_cast<int>(std::ceil(c.y + r)));
    for (int y = y0; y <= y1; ++y) {
        double dy = y - c.y;
        double h2 = r2 - dy * dy;
        if (h2 < 0) continue;
        double half = std::sqrt(h2);
        emitVerifiedRun(y, c.x - half, c.x + half, clip, inside, out);
    }
}

void appendSegmentSpans(Point a, Point b, double strokeWidth, double inflate,
                        const PixelRect& clip, std::vector<RowSpan>& out) {
    double r = strokeWidth / 2.0 + inflate;
    if (r < 0) return;
    if (a.x == b.x && a.y == b.y) {
        appendDiscSpans(a, strokeWidth / 2.0, inflate, clip, out);
        return;
    }
    double r2 = r * r;
    auto inside = [&](int x, int y) {
        return distSqToSegment({static_cast<double>(x), static_cast<double>(y)},
                               a, b) <= r2;
    };

    // Corners of the thick-line rectangle; the two cap discs extend past it.
    double vx = b.x - a.x, vy = b.y - a.y;
    double len = std::sqrt(vx * vx + vy * vy);
    double nx = -vy / len * r, ny = vx / len * r;
    Point quad[4] = {{a.x + nx, a.y + ny},
                     {b.x + nx, b.y + ny},
                     {b.x - nx, b.y - ny},
                     {a.x - nx, a.y - ny}};

    int y0 = std::max(clip.y0,
                      static_cast<int>(std::floor(std::min(a.y, b.y) - r)));
    int y1 = std::min(clip.y1,
                      static_cast<int>(std::ceil(std::max(a.y, b.y) + r)));
    for (int y = y0; y <= y1; ++y) {
        double lo = std::numeric_limits<double>::infinity();
        double hi = -std::numeric_limits<double>::infinity();
        auto cover = [&](double x) {
            lo = std::min(lo, x);
            hi = std::max(hi, x);
        };
        for (Point cap : {a, b}) {
            double dy = y - cap.y;
            double h2 = r2 - dy * dy;
            if (h2 >= 0) {
                double half = std::sqrt(h2);
                cover(cap.x - half);
                cover(cap.x + half);
            }
        }
        for (int i = 0; i < 4; ++i) {
            Point p = quad[i], q = quad[(i + 1) % 4];
            if (p.y == q.y) {
                if (p.y == y) {
                    cover(p.x);
                    cover(q.x);
                }
                continue;
            }
            double t = (y - p.y) / (q.y - p.y);
            if (t >= 0 && t <= 1) cover(p.x + t * (q.x - p.x));
        }
        if (lo > hi) continue;
        emitVerifiedRun(y, lo, hi, clip, inside, out);
    }
}

void appendPolylineSpans(const std::vector<Point>& vertices, double strokeWidth,
                         double inflate, const PixelRect& clip,
                         std::vector<RowSpan>& out) {
    if (vertices.size() < 2)
        throw std::invalid_argument("polyline needs at least 2 vertices");
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
        appendSegmentSpans(vertices[i], vertices[i + 1], strokeWidth, inflate,
                           clip, out);
}

void appendRectSpans(Point rectMin, Point rectMax, bool filled, double inflate,
                     const PixelRect& clip, std::vector<RowSpan>& out) {
    if (rectMin.x > rectMax.x || rectMin.y > rectMax.y) return;
    if (!filled) {
        std::vector<Point> ring = {rectMin,
                                   {rectMax.x, rectMin.y},
                                   rectMax,
                                   {rectMin.x, rectMax.y},
                                   rectMin};
        appendPolylineSpans(ring, 1.0, inflate, clip, out);
        return;
    }
    int x0 = std::max(clip.x0, static_cast<int>(std::ceil(rectMin.x - inflate)));
    int x1 = std::min(clip.x1, static_cast<int>(std::floor(rectMax.x + inflate)));
    int y0 = std::max(clip.y0, static_cast<int>(std::ceil(rectMin.y - inflate)));
    int y1 = std::min(clip.y1, static_cast<int>(std::floor(rectMax.y + inflate)));
    for (int y = y0; y <= y1; ++y)
        if (x0 <= x1) out.push_back({y, x0, x1});
}

std::vector<RowSpan> markSpans(const Mark& mark,
                               const std::vector<AreaSeries>& areas,
                               const PixelRect& clip, double inflate,
                               Point offset) {
    std::vector<RowSpan> out;
    auto shift = [&](Point p) { return Point{p.x + offset.x, p.y + offset.y}; };
    switch (mark.kind) {
        case Mark::Kind::Point:
            appendDiscSpans(shift(mark.center), mark.radius, inflate, clip, out);
            break;
        case Mark::Kind::Polyline: {
            std::vector<Point> v;
            v.reserve(mark.vertices.size());
            for (Point p : mark.vertices) v.push_back(shift(p));
            appendPolylineSpans(v, mark.strokeWidth, inflate, clip, out);
            break;
        }
        case Mark::Kind::Rect:
        case Mark::Kind::TextBox:
            appendRectSpans(shift(mark.rectMin), shift(mark.rectMax),
                            mark.kind == Mark::Kind::TextBox || mark.filled,
                            inflate, clip, out);
            break;
        case Mark::Kind::AreaBoundary: {
            if (mark.areaIndex < 0 ||
                mark.areaIndex >= static_cast<int>(areas.size()))
                throw std::invalid_argument("areaBoundary mark references no area");
            const AreaSeries& area = areas[static_cast<std::size_t>(mark.areaIndex)];
            std::vector<Point> upper, lower;
            upper.reserve(area.pairs.size());
            lower.reserve(area.pairs.size());
            for (const auto& p : area.pairs) {
                upper.push_back(shift({p.x, p.yUpper}));
                lower.push_back(shift({p.x, p.yLower}));
            }
            if (upper.size() == 1) {
                appendDiscSpans(upper[0], 0.5, inflate, clip, out);
                appendDiscSpans(lower[0], 0.5, inflate, clip, out);
            } else {
                appendPolylineSpans(upper, 1.0, inflate, clip, out);
                appendPolylineSpans(lower, 1.0, inflate, clip, out);
            }
            break;
        }
    }
    return out;
}

void mergeSpans(std::vector<RowSpan>& spans) {
    std::sort(spans.begin(), spans.end(), [](const RowSpan& a, const RowSpan& b) {
        return a.y != b.y ? a.y < b.y : a.x0 < b.x0;
    });
    std::size_t w = 0;
    for (std::size_t i = 0; i < spans.size(); ++i) {
        if (w > 0 && spans[w - 1].y == spans[i].y &&
            spans[i].x0 <= spans[w - 1].x1 + 1) {
            spans[w - 1].x1 = std::max(spans[w - 1].x1, spans[i].x1);
        } else {
            spans[w++] = spans[i];
        }
    }
    spans.resize(w);
}

PixelRect markPixelBBox(const Mark& mark, const std::vector<AreaSeries>& areas) {
    double x0 = 0, y0 = 0, x1 = -1, y1 = -1;
    switch (mark.kind) {
        case Mark::Kind::Point:
            x0 = mark.center.x - mark.radius;
            x1 = mark.center.x + mark.radius;
            y0 = mark.center.y - mark.radius;
            y1 = mark.center.y + mark.radius;
            break;
        case Mark::Kind::Polyline: {
            if (mark.vertices.empty()) break;
            x0 = x1 = mark.vertices[0].x;
            y0 = y1 = mark.vertices[0].y;
            for (Point p : mark.vertices) {
                x0 = std::min(x0, p.x);
                x1 = std::max(x1, p.x);
                y0 = std::min(y0, p.y);
                y1 = std::max(y1, p.y);
            }
            double h = mark.strokeWidth / 2.0;
            x0 -= h;
            x1 += h;
            y0 -= h;
            y1 += h;
            break;
        }
        case Mark::Kind::Rect:
        case Mark::Kind::TextBox:
            x0 = mark.rectMin.x;
            y0 = mark.rectMin.y;
            x1 = mark.rectMax.x;
            y1 = mark.rectMax.y;
            break;
        case Mark::Kind::AreaBoundary: {
            if (mark.areaIndex < 0 ||
                mark.areaIndex >= static_cast<int>(areas.size()))
                break;
            const AreaSeries& a = areas[static_cast<std::size_t>(mark.areaIndex)];
            if (a.pairs.empty()) break;
            x0 = a.pairs.front().x;
            x1 = a.pairs.back().x;
            y0 = y1 = a.pairs[0].yLower;
            for (const auto& p : a.pairs) {
                y0 = std::min(y0, p.yLower);
                y1 = std::max(y1, p.yUpper);
            }
            break;
        }
    }
    return {static_cast<int>(std::floor(x0)), static_cast<int>(std::floor(y0)),
            static_cast<int>(std::ceil(x1)), static_cast<int>(std::ceil(y1))};
}

namespace {

void applySpans(OccupancyBitmap& b, const std::vector<RowSpan>& spans) {
    for (const RowSpan& s : spans) b.markRange(s.y, s.x0, s.x1);
}

}  // namespace

void rasterizePoint(OccupancyBitmap& b, Point center, double radius) {
    if (radius < 0) throw std::invalid_argument("point radius must be >= 0");
    std::vector<RowSpan> spans;
    appendDiscSpans(center, radius, 0.5, b.bounds(), spans);
    applySpans(b, spans);
}

void rasterizePolyline(OccupancyBitmap& b, const std::vector<Point>& vertices,
                       double strokeWidth) {
    if (strokeWidth <= 0)
        throw std::invalid_argument("strokeWidth must be positive");
    std::vector<RowSpan> spans;
    appendPolylineSpans(vertices, strokeWidth, 0.5, b.bounds(), spans);
    applySpans(b, spans);
}

void rasterizeRect(OccupancyBitmap& b, Point rectMin, Point rectMax,
                   bool filled, int minLabelHeight) {
    std::vector<RowSpan> spans;
    if (filled) {
        int x0 = static_cast<int>(std::ceil(rectMin.x - 0.5));
        int x1 = static_cast<int>(std::floor(rectMax.x + 0.5));
        int y0 = static_cast<int>(std::ceil(rectMin.y - 0.5));
        int y1 = static_cast<int>(std::floor(rectMax.y + 0.5));
        b.markRect({x0, y0, x1, y1}, minLabelHeight);
        return;
    }
    appendRectSpans(rectMin, rectMax, false, 0.5, b.bounds(), spans);
    applySpans(b, spans);
}

void rasterizeScene(OccupancyBitmap& b, const std::vector<Mark>& marks,
                    const std::vector<AreaSeries>& areas,
                    const std::set<std::string>& groups, int minLabelHeight) {
    bool all = groups.count("all") > 0;
    std::vector<const Mark*> selected;
    for (const Mark& m : marks)
        if (all || groups.count(m.group) > 0) selected.push_back(&m);
    rasterizeMarks(b, selected, areas, minLabelHeight);
}

void rasterizeMarks(OccupancyBitmap& b, const std::vector<const Mark*>& marks,
                    const std::vector<AreaSeries>& areas, int minLabelHeight,
                    Point offset) {
    for (const Mark* m : marks) {
        if (m->opacity <= 0) continue;
        bool fillAsRect = (m->kind == Mark::Kind::Rect && m->filled) ||
                          m->kind == Mark::Kind::TextBox;
        if (fillAsRect) {
            rasterizeRect(b,
                          {m->rectMin.x + offset.x, m->rectMin.y + offset.y},
                          {m->rectMax.x + offset.x, m->rectMax.y + offset.y},
                          true, minLabelHeight);
        } else {
            applySpans(b, markSpans(*m, areas, b.bounds(), 0.5, offset));
        }
    }
}

}  // namespace placard
