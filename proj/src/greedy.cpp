#include "placard/greedy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "greedy_driver.hpp"
#include "placard/bitmap.hpp"
#include "placard/raster.hpp"

namespace placard {

AreaMethod areaMethodFromName(const std::string& name) {
    if (name == "flood-fill") return AreaMethod::FloodFill;
    if (name == "reduced-search") return AreaMethod::ReducedSearch;
    if (name == "naive") return AreaMethod::Naive;
    throw std::invalid_argument("unknown area method: " + name);
}

const char* areaMethodName(AreaMethod m) {
    switch (m) {
        case AreaMethod::FloodFill: return "flood-fill";
        case AreaMethod::ReducedSearch: return "reduced-search";
        case AreaMethod::Naive: return "naive";
    }
    return "reduced-search";
}

namespace detail {

std::string resolveMarkType(const Scene& scene, const LabelConfig& config,
                            const LabelItem& item) {
    if (config.markType) return *config.markType;
    if (item.areaRef >= 0) return "area";
    if (item.markRef >= 0 &&
        item.markRef < static_cast<int>(scene.marks.size())) {
        switch (scene.marks[static_cast<std::size_t>(item.markRef)].kind) {
            case Mark::Kind::Polyline: return "line";
            case Mark::Kind::Rect:
            case Mark::Kind::TextBox: return "rect";
            default: return "point";
        }
    }
    return "point";
}

CandidateSet candidateSetForItem(const Scene& scene, const LabelConfig& config,
                                 const LabelItem& item) {
    std::string mt = resolveMarkType(scene, config, item);
    CandidateSet cs;

    if (mt == "line") {
        const Mark* line = nullptr;
        if (item.markRef >= 0 &&
            item.markRef < static_cast<int>(scene.marks.size()))
            line = &scene.marks[static_cast<std::size_t>(item.markRef)];
        if (line && line->kind == Mark::Kind::Polyline &&
            !line->vertices.empty()) {
            if (!config.positions.empty()) {
                Point v = config.lineAnchor == LineAnchor::End
                              ? line->vertices.back()
                              : line->vertices.front();
                PixelRect endBBox{static_cast<int>(std::llround(v.x)),
                                  static_cast<int>(std::llround(v.y)),
                                  static_cast<int>(std::llround(v.x)),
                                  static_cast<int>(std::llround(v.y))};
                for (const CandidatePosition& p : config.positions) {
                    cs.rects.push_back(
                        labelBounds(p.anchor, p.offset, endBBox, item.labelSize));
                    cs.anchors.push_back(p);
                }
                return cs;
            }
            cs.rects = lineEndCandidates(line->vertices, config.lineAnchor,
                                         item.labelSize);
            std::vector<Anchor> used =
                config.lineAnchor == LineAnchor::End
                    ? std::vector<Anchor>{Anchor::TopRight, Anchor::Right,
                                          Anchor::BottomRight}
                    : std::vector<Anchor>{Anchor::TopLeft, Anchor::Left,
                                          Anchor::BottomLeft};
            for (Anchor a : used) cs.anchors.push_back({a, 0});
            return cs;
        }
        mt = "point";  // no usable line geometry, fall back
    }

    if (mt == "bar" && config.positions.empty()) {
        bool vertical = config.barVertical.value_or(item.baseBBox.height() >=
                                                    item.baseBBox.width());
        PixelRect edge = item.baseBBox;
        if (vertical)
            edge.y1 = edge.y0;  // end of the bar = its top edge
        else
            edge.x0 = edge.x1;  // end = right edge
        for (const CandidatePosition& p : defaultPositions("bar", vertical)) {
            cs.rects.push_back(
                labelBounds(p.anchor, p.offset, edge, item.labelSize));
            cs.anchors.push_back(p);
        }
        return cs;
    }

    std::vector<CandidatePosition> positions = config.positions;
    if (positions.empty()) positions = defaultPositions(mt);
    if (positions.empty()) positions = eightPositionDefault();
    cs.rects = candidateSequence(item, positions);
    cs.anchors = std::move(positions);
    return cs;
}

std::vector<const Mark*> selectAvoidMarks(const Scene& scene,
                                          const LabelConfig& config) {
    bool all = false;
    std::unordered_set<std::string> groups;
    for (const std::string& g : config.avoid) {
        if (g == "all") all = true;
        groups.insert(g);
    }
    std::unordered_set<int> baseMarks;
    if (config.avoidBaseMark)
        for (const LabelItem& item : scene.items)
            if (item.markRef >= 0) baseMarks.insert(item.markRef);

    std::vector<const Mark*> out;
    for (std::size_t i = 0; i < scene.marks.size(); ++i) {
        if (all || groups.count(scene.marks[i].group) > 0 ||
            baseMarks.count(static_cast<int>(i)) > 0)
            out.push_back(&scene.marks[i]);
    }
    return out;
}

void logEvent(std::ostream* log, const std::string& itemId, int candidate,
              const char* result) {
    if (!log) return;
    std::string escaped;
    for (char c : itemId) {
        if (c == '"' || c == '\\') escaped.push_back('\\');
        escaped.push_back(c);
    }
    *log << "{\"item\":\"" << escaped << "\",\"candidate\":" << candidate
         << ",\"result\":\"" << result << "\"}\n";
}

}  // namespace detail

int resolvePadding(const Scene& scene, const LabelConfig& config) {
    if (config.padding) {
        if (*config.padding < 0)
            throw std::invalid_argument("padding must be >= 0");
        return static_cast<int>(std::ceil(*config.padding));
    }
    // Line charts default to 20% of the chart width for vertically oriented
    // lines and 20% of the height for horizontal ones.
    bool anyLine = false, allLine = true;
    double xSpan = 0, ySpan = 0;
    for (const LabelItem& item : scene.items) {
        if (item.areaRef >= 0) continue;
        if (detail::resolveMarkType(scene, config, item) == "line") {
            anyLine = true;
            if (item.markRef >= 0) {
                const Mark& m = scene.marks[static_cast<std::size_t>(item.markRef)];
                PixelRect bb = markPixelBBox(m, scene.areas);
                xSpan += bb.width();
                ySpan += bb.height();
            }
        } else {
            allLine = false;
        }
    }
    if (anyLine && allLine) {
        bool vertical = ySpan > xSpan;
        return static_cast<int>(
            std::ceil(0.2 * (vertical ? scene.width : scene.height)));
    }
    return 0;
}

std::vector<PixelRect> candidateRectsForItem(const Scene& scene,
                                             const LabelConfig& config,
                                             const LabelItem& item) {
    return detail::candidateSetForItem(scene, config, item).rects;
}

std::vector<int> placementOrder(const Scene& scene, const LabelConfig& config) {
    std::vector<int> order(scene.items.size());
    std::iota(order.begin(), order.end(), 0);
    auto pri = [&](int i) { return scene.items[static_cast<std::size_t>(i)].priority; };
    if (config.sort == SortOrder::Priority)
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return pri(a) < pri(b); });
    else if (config.sort == SortOrder::PriorityDesc)
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return pri(a) > pri(b); });
    return order;
}

Size minLabelExtent(const std::vector<LabelItem>& items) {
    Size ext{0, 0};
    for (const LabelItem& item : items) {
        if (item.areaRef >= 0) continue;
        if (item.labelSize.w < 1 || item.labelSize.h < 1) continue;
        if (ext.w == 0 || item.labelSize.w < ext.w) ext.w = item.labelSize.w;
        if (ext.h == 0 || item.labelSize.h < ext.h) ext.h = item.labelSize.h;
    }
    if (ext.w < 1) ext.w = 1;
    if (ext.h < 1) ext.h = 1;
    return ext;
}

namespace {

struct BitmapIndex {
    OccupancyBitmap bitmap;
    int pad;
    int minLabelHeight;

    bool occupied(const PixelRect& r) const {
        return bitmap.rectOccupied(r.shifted(pad, pad));
    }
    void insert(const PixelRect& r) {
        bitmap.markRect(r.shifted(pad, pad), minLabelHeight);
    }
};

}  // namespace

OccupancyBitmap buildAvoidBitmap(const Scene& scene, const LabelConfig& config,
                                 int wordBits) {
    if (scene.width < 1 || scene.height < 1)
        throw std::invalid_argument("scene dimensions must be positive");
    int pad = resolvePadding(scene, config);
    Size minExt = minLabelExtent(scene.items);
    OccupancyBitmap bitmap(scene.width + 2 * pad, scene.height + 2 * pad,
                           wordBits);
    rasterizeMarks(bitmap, detail::selectAvoidMarks(scene, config), scene.areas,
                   minExt.h,
                   {static_cast<double>(pad), static_cast<double>(pad)});
    return bitmap;
}

std::vector<Placement> placeLabelsGreedy(const Scene& scene,
                                         const LabelConfig& config,
                                         const EngineOptions& options) {
    int pad = resolvePadding(scene, config);
    BitmapIndex index{buildAvoidBitmap(scene, config, options.wordBits), pad,
                      minLabelExtent(scene.items).h};
    auto placements =
        detail::runGreedyDriver(scene, config, pad, index, options);
    if (options.captureBitmap) *options.captureBitmap = index.bitmap;
    return placements;
}

}  // namespace placard
