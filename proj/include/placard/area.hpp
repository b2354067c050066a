#pragma once

#include <vector>

#include "placard/bitmap.hpp"
#include "placard/greedy.hpp"
#include "placard/scene.hpp"

namespace placard {

struct PixelCoord {
    int x = 0;
    int y = 0;
    bool operator==(const PixelCoord&) const = default;
};

/// Rasterizes the upper and lower boundary polylines of every area
/// (stroke width 1) onto the bitmap.
void rasterizeAreaBoundaries(OccupancyBitmap& b,
                             const std::vector<AreaSeries>& areas);

/// Largest height h in [0, maxH] such that the rectangle of height h and
/// width round(h * aspect), centered at (cx, cy), lies inside the bitmap and
/// overlaps no occupied bit. Binary search over whole pixels; an occupied
/// center yields 0.
int fitScale(const OccupancyBitmap& b, int cx, int cy, double aspect, int maxH);

/// All pixels strictly between the linearly interpolated lower and upper
/// boundaries, for integer x within the pair range. Ascending x, then y.
std::vector<PixelCoord> interiorPixels(const AreaSeries& area);

/// The data-point-based candidate set: one vertical pixel run per boundary
/// pair, from the lower to the upper boundary (endpoints included), at the
/// pair's rounded column clamped into the area's integer column range.
std::vector<PixelCoord> reducedSearchPixels(const AreaSeries& area);

/// Places one label per area item of the scene. flood-fill and
/// reduced-search pick the candidate center with the largest fitScale
/// against the boundaries-plus-labels bitmap (ties: smallest x, then y),
/// never overlap another label, and may overflow the area when nothing
/// fits; naive centers the label on the widest boundary pair with no
/// overlap prevention. Rects in `existingLabels` are treated as already
/// placed labels. Non-area items are returned as omitted.
std::vector<Placement> placeAreaLabels(
    const Scene& scene, const LabelConfig& config,
    const std::vector<PixelRect>& existingLabels = {});

}  // namespace placard
