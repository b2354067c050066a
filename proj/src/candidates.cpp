#include "placard/candidates.hpp"

#include <cmath>
#include <stdexcept>

namespace placard {

namespace {

enum class Axis { Negative, Center, Positive };

Axis horizontalOf(Anchor a) {
    switch (a) {
        case Anchor::TopLeft:
        case Anchor::Left:
        case Anchor::BottomLeft:
            return Axis::Negative;
        case Anchor::TopRight:
        case Anchor::Right:
        case Anchor::BottomRight:
            return Axis::Positive;
        default:
            return Axis::Center;
    }
}

Axis verticalOf(Anchor a) {
    switch (a) {
        case Anchor::TopLeft:
        case Anchor::Top:
        case Anchor::TopRight:
            return Axis::Negative;
        case Anchor::BottomLeft:
        case Anchor::Bottom:
        case Anchor::BottomRight:
            return Axis::Positive;
        default:
            return Axis::Center;
    }
}

int floorInt(double v) { return static_cast<int>(std::floor(v)); }
int ceilInt(double v) { return static_cast<int>(std::ceil(v)); }

}  // namespace

const char* anchorName(Anchor a) {
    switch (a) {
        case Anchor::TopLeft: return "top-left";
        case Anchor::Top: return "top";
        case Anchor::TopRight: return "top-right";
        case Anchor::Right: return "right";
        case Anchor::BottomRight: return "bottom-right";
        case Anchor::Bottom: return "bottom";
        case Anchor::BottomLeft: return "bottom-left";
        case Anchor::Left: return "left";
        case Anchor::Middle: return "middle";
    }
    return "middle";
}

Anchor anchorFromName(const std::string& name) {
    for (Anchor a : {Anchor::TopLeft, Anchor::Top, Anchor::TopRight,
                     Anchor::Right, Anchor::BottomRight, Anchor::Bottom,
                     Anchor::BottomLeft, Anchor::Left, Anchor::Middle})
        if (name == anchorName(a)) return a;
    throw std::invalid_argument("unknown anchor: " + name);
}

PixelRect labelBounds(Anchor anchor, double offset, const PixelRect& bbox,
                      Size size) {
    PixelRect r;
    switch (horizontalOf(anchor)) {
        case Axis::Negative:
            r.x1 = ceilInt(bbox.x0 - 1 - offset);
            r.x0 = r.x1 - size.w + 1;
            break;
        case Axis::Positive:
            r.x0 = floorInt(bbox.x1 + 1 + offset);
            r.x1 = r.x0 + size.w - 1;
            break;
        case Axis::Center:
            r.x0 = floorInt((bbox.x0 + bbox.x1) / 2.0 - (size.w - 1) / 2.0);
            r.x1 = r.x0 + size.w - 1;
            break;
    }
    switch (verticalOf(anchor)) {
        case Axis::Negative:
            r.y1 = ceilInt(bbox.y0 - 1 - offset);
            r.y0 = r.y1 - size.h + 1;
            break;
        case Axis::Positive:
            r.y0 = floorInt(bbox.y1 + 1 + offset);
            r.y1 = r.y0 + size.h - 1;
            break;
        case Axis::Center:
            r.y0 = floorInt((bbox.y0 + bbox.y1) / 2.0 - (size.h - 1) / 2.0);
            r.y1 = r.y0 + size.h - 1;
            break;
    }
    return r;
}

std::vector<PixelRect> candidateSequence(
    const LabelItem& item, const std::vector<CandidatePosition>& positions) {
    if (positions.empty())
        throw std::invalid_argument("candidate position list is empty");
    std::vector<PixelRect> rects;
    rects.reserve(positions.size());
    for (const CandidatePosition& p : positions)
        rects.push_back(labelBounds(p.anchor, p.offset, item.baseBBox,
                                    item.labelSize));
    return rects;
}

std::vector<PixelRect> lineEndCandidates(const std::vector<Point>& vertices,
                                         LineAnchor lineAnchor, Size size) {
    if (vertices.empty())
        throw std::invalid_argument("line has no vertices");
    Point v = lineAnchor == LineAnchor::End ? vertices.back() : vertices.front();
    PixelRect bbox{static_cast<int>(std::llround(v.x)),
                   static_cast<int>(std::llround(v.y)),
                   static_cast<int>(std::llround(v.x)),
                   static_cast<int>(std::llround(v.y))};
    std::vector<Anchor> anchors =
        lineAnchor == LineAnchor::End
            ? std::vector<Anchor>{Anchor::TopRight, Anchor::Right,
                                  Anchor::BottomRight}
            : std::vector<Anchor>{Anchor::TopLeft, Anchor::Left,
                                  Anchor::BottomLeft};
    std::vector<PixelRect> rects;
    for (Anchor a : anchors) rects.push_back(labelBounds(a, 0, bbox, size));
    return rects;
}

std::vector<CandidatePosition> eightPositionDefault() {
    return {{Anchor::TopRight, 0}, {Anchor::Top, 0},        {Anchor::TopLeft, 0},
            {Anchor::Left, 0},     {Anchor::BottomLeft, 0}, {Anchor::Bottom, 0},
            {Anchor::BottomRight, 0}, {Anchor::Right, 0}};
}

std::vector<CandidatePosition> fourPositionModel() {
    return {{Anchor::TopRight, 0},
            {Anchor::TopLeft, 0},
            {Anchor::BottomLeft, 0},
            {Anchor::BottomRight, 0}};
}

std::vector<CandidatePosition> defaultPositions(const std::string& markType,
                                                bool barVertical) {
    if (markType == "bar") {
        if (barVertical) return {{Anchor::Top, 0}, {Anchor::Bottom, 0}};
        return {{Anchor::Right, 0}, {Anchor::Left, 0}};
    }
    if (markType == "rect") return {{Anchor::Middle, 0}};
    if (markType == "circle" || markType == "point" || markType == "square")
        return eightPositionDefault();
    if (markType == "line" || markType == "area") return {};
    throw std::invalid_argument("unknown markType: " + markType);
}

std::vector<PixelRect> sliderCandidates(const PixelRect& bbox, Anchor side,
                                        Size size, int stride) {
    if (side != Anchor::Top && side != Anchor::Bottom && side != Anchor::Left &&
        side != Anchor::Right)
        throw std::invalid_argument("slider side must be top/bottom/left/right");
    if (stride < 1) throw std::invalid_argument("stride must be >= 1");

    PixelRect base = labelBounds(side, 0, bbox, size);
    bool horizontal = side == Anchor::Top || side == Anchor::Bottom;
    auto shifted = [&](int k) {
        return horizontal ? base.shifted(k, 0) : base.shifted(0, k);
    };
    auto touches = [&](const PixelRect& r) {
        return horizontal ? (r.x0 <= bbox.x1 && r.x1 >= bbox.x0)
                          : (r.y0 <= bbox.y1 && r.y1 >= bbox.y0);
    };

    std::vector<PixelRect> out{base};
    for (int k = stride;; k += stride) {
        PixelRect plus = shifted(k), minus = shifted(-k);
        bool any = false;
        if (touches(plus)) {
            out.push_back(plus);
            any = true;
        }
        if (touches(minus)) {
            out.push_back(minus);
            any = true;
        }
        if (!any) break;
    }
    return out;
}

}  // namespace placard
