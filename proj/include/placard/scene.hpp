#pragma once

#include <vector>

#include "placard/candidates.hpp"
#include "placard/geometry.hpp"
#include "placard/raster.hpp"

namespace placard {

struct FontMetric {
    double charWidthFactor = 0.6;
};

/// Chart contents handed to a placement engine: dimensions in pixels, the
/// marks labels must avoid, the items to label, and any stacked areas.
struct Scene {
    int width = 0;
    int height = 0;
    std::vector<Mark> marks;
    std::vector<LabelItem> items;
    std::vector<AreaSeries> areas;
    FontMetric fontMetric;
};

}  // namespace placard
