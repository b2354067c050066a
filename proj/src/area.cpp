#include "placard/area.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "placard/raster.hpp"

namespace placard {

namespace {

// Linear interpolation of the area boundaries at x (clamped to pair range).
void boundariesAt(const AreaSeries& area, double x, double& yLower,
                  double& yUpper) {
    const auto& ps = area.pairs;
    if (x <= ps.front().x) {
        yLower = ps.front().yLower;
        yUpper = ps.front().yUpper;
        return;
    }
    if (x >= ps.back().x) {
        yLower = ps.back().yLower;
        yUpper = ps.back().yUpper;
        return;
    }
    std::size_t hi = 1;
    while (ps[hi].x < x) ++hi;
    const auto& a = ps[hi - 1];
    const auto& b = ps[hi];
    double t = (x - a.x) / (b.x - a.x);
    yLower = a.yLower + t * (b.yLower - a.yLower);
    yUpper = a.yUpper + t * (b.yUpper - a.yUpper);
}

void requireValid(const AreaSeries& area) {
    if (!area.valid())
        throw std::invalid_argument(
            "area needs pairs with strictly increasing x and yLower <= yUpper");
}

}  // namespace

void rasterizeAreaBoundaries(OccupancyBitmap& b,
                             const std::vector<AreaSeries>& areas) {
    if (areas.empty()) throw std::invalid_argument("no areas to rasterize");
    for (const AreaSeries& area : areas) {
        requireValid(area);
        Mark m;
        m.kind = Mark::Kind::AreaBoundary;
        m.areaIndex = 0;
        std::vector<AreaSeries> one{area};
        for (const RowSpan& s : markSpans(m, one, b.bounds(), 0.5))
            b.markRange(s.y, s.x0, s.x1);
    }
}

int fitScale(const OccupancyBitmap& b, int cx, int cy, double aspect,
             int maxH) {
    if (aspect <= 0) throw std::invalid_argument("aspect must be positive");
    if (maxH < 0) maxH = 0;
    if (b.testPixel(cx, cy)) return 0;

    auto fits = [&](int h) {
        if (h == 0) return true;
        int w = std::max<int>(1, static_cast<int>(std::llround(h * aspect)));
        PixelRect r = centeredRect(cx, cy, {w, h});
        return b.bounds().containsRect(r) && !b.rectOccupied(r);
    };
    if (fits(maxH)) return maxH;
    int lo = 0, hi = maxH;  // fits(lo), !fits(hi)
    while (hi - lo > 1) {
        int mid = lo + (hi - lo) / 2;
        if (fits(mid))
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

std::vector<PixelCoord> interiorPixels(const AreaSeries& area) {
    requireValid(area);
    std::vector<PixelCoord> out;
    int x0 = static_cast<int>(std::ceil(area.pairs.front().x));
    int x1 = static_cast<int>(std::floor(area.pairs.back().x));
    for (int x = x0; x <= x1; ++x) {
        double yLo, yUp;
        boundariesAt(area, x, yLo, yUp);
        int yStart = static_cast<int>(std::floor(yLo)) + 1;
        int yEnd = static_cast<int>(std::ceil(yUp)) - 1;
        for (int y = yStart; y <= yEnd; ++y) out.push_back({x, y});
    }
    return out;
}

std::vector<PixelCoord> reducedSearchPixels(const AreaSeries& area) {
    requireValid(area);
    std::vector<PixelCoord> out;
    int colMin = static_cast<int>(std::ceil(area.pairs.front().x));
    int colMax = static_cast<int>(std::floor(area.pairs.back().x));
    if (colMin > colMax) return out;
    for (const auto& p : area.pairs) {
        int col = std::clamp(static_cast<int>(std::llround(p.x)), colMin, colMax);
        double yLo, yUp;
        boundariesAt(area, col, yLo, yUp);
        int yStart = static_cast<int>(std::ceil(yLo));
        int yEnd = static_cast<int>(std::floor(yUp));
        for (int y = yStart; y <= yEnd; ++y) out.push_back({col, y});
    }
    return out;
}

namespace {

struct ScoredCenter {
    int score = -1;
    PixelCoord at{};
};

ScoredCenter bestCenter(const OccupancyBitmap& scoreBitmap,
                        const std::vector<PixelCoord>& candidates,
                        double aspect, int maxH) {
    ScoredCenter best;
    for (const PixelCoord& c : candidates) {
        if (c.x < 0 || c.x >= scoreBitmap.width() || c.y < 0 ||
            c.y >= scoreBitmap.height())
            continue;
        int s = fitScale(scoreBitmap, c.x, c.y, aspect, maxH);
        if (s > best.score ||
            (s == best.score && (c.x < best.at.x ||
                                 (c.x == best.at.x && c.y < best.at.y)))) {
            best = {s, c};
        }
    }
    return best;
}

}  // namespace

std::vector<Placement> placeAreaLabels(
    const Scene& scene, const LabelConfig& config,
    const std::vector<PixelRect>& existingLabels) {
    std::vector<Placement> placements(scene.items.size());
    for (std::size_t i = 0; i < scene.items.size(); ++i)
        placements[i].itemId = scene.items[i].id;
    bool anyArea = false;
    for (const LabelItem& item : scene.items)
        if (item.areaRef >= 0) anyArea = true;
    if (!anyArea) return placements;

    // The fit score is measured against boundaries plus placed labels; the
    // hard no-overlap constraint is against labels only, so a label may sit
    // on a boundary line when nothing larger fits.
    OccupancyBitmap scoreBitmap(scene.width, scene.height);
    OccupancyBitmap labelsOnly(scene.width, scene.height);
    rasterizeAreaBoundaries(scoreBitmap, scene.areas);
    for (const PixelRect& r : existingLabels) {
        scoreBitmap.markRect(r, 1);
        labelsOnly.markRect(r, 1);
    }

    for (std::size_t i = 0; i < scene.items.size(); ++i) {
        const LabelItem& item = scene.items[i];
        if (item.areaRef < 0) continue;
        if (item.areaRef >= static_cast<int>(scene.areas.size()))
            throw std::invalid_argument("item references a nonexistent area");
        const AreaSeries& area =
            scene.areas[static_cast<std::size_t>(item.areaRef)];
        requireValid(area);
        Placement& out = placements[i];

        if (config.method == AreaMethod::Naive) {
            const AreaSeries::BoundaryPair* widest = &area.pairs[0];
            for (const auto& p : area.pairs)
                if (p.yUpper - p.yLower > widest->yUpper - widest->yLower)
                    widest = &p;
            int cx = static_cast<int>(std::floor(widest->x));
            int cy = static_cast<int>(
                std::floor((widest->yLower + widest->yUpper) / 2.0));
            out.status = PlacementStatus::Placed;
            out.rect = centeredRect(cx, cy, item.labelSize);
            out.anchorUsed = {Anchor::Middle, 0};
            continue;
        }

        std::vector<PixelCoord> candidates =
            config.method == AreaMethod::FloodFill ? interiorPixels(area)
                                                   : reducedSearchPixels(area);
        double aspect = static_cast<double>(item.labelSize.w) /
                        static_cast<double>(item.labelSize.h);
        double yMin = area.pairs[0].yLower, yMax = area.pairs[0].yUpper;
        for (const auto& p : area.pairs) {
            yMin = std::min(yMin, p.yLower);
            yMax = std::max(yMax, p.yUpper);
        }
        int maxH = static_cast<int>(std::ceil(yMax)) -
                   static_cast<int>(std::floor(yMin)) + 1;

        ScoredCenter best = bestCenter(scoreBitmap, candidates, aspect, maxH);
        if (best.score < 0) continue;  // no candidate center inside the chart

        PixelRect rect = centeredRect(best.at.x, best.at.y, item.labelSize);
        if (best.score < item.labelSize.h && labelsOnly.rectOccupied(rect))
            continue;  // overflows its area onto another label
        out.status = PlacementStatus::Placed;
        out.rect = rect;
        out.anchorUsed = {Anchor::Middle, 0};
        labelsOnly.markRect(rect, 1);
        scoreBitmap.markRect(rect, 1);
    }
    return placements;
}

}  // namespace placard
