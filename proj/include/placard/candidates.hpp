#pragma once

#include <string>
#include <vector>

#include "placard/geometry.hpp"

namespace placard {

/// Position of a label relative to its base mark's bounding box.
enum class Anchor {
    TopLeft,
    Top,
    TopRight,
    Right,
    BottomRight,
    Bottom,
    BottomLeft,
    Left,
    Middle,
};

enum class LineAnchor { Begin, End };

const char* anchorName(Anchor a);
Anchor anchorFromName(const std::string& name);  // throws invalid_argument

/// One candidate: an anchor direction plus an outward displacement in px.
struct CandidatePosition {
    Anchor anchor = Anchor::TopRight;
    double offset = 0;
};

/// A data point to label.
struct LabelItem {
    std::string id;
    std::string text;
    double fontSize = 10;
    PixelRect baseBBox{};
    Size labelSize{};
    double priority = 0;
    int markRef = -1;  // index into the scene's marks, -1 if none
    int areaRef = -1;  // index into the scene's areas, -1 if none
};

/// Label rectangle of `size` placed against `bbox` in the anchor direction,
/// displaced outward by `offset`. Corner anchors displace on both axes.
/// Middle centers the label on the bbox and ignores the offset. Fractional
/// centers round toward negative infinity.
PixelRect labelBounds(Anchor anchor, double offset, const PixelRect& bbox,
                      Size size);

/// Candidate rects for the item, one per position, in the given order
/// (first = most preferred). Throws invalid_argument on an empty list.
std::vector<PixelRect> candidateSequence(const LabelItem& item,
                                         const std::vector<CandidatePosition>& positions);

/// Candidates for a whole-line label: anchored at the line's last vertex for
/// `end` (top-right, right, bottom-right, in that order) and mirrored at the
/// first vertex for `begin`.
std::vector<PixelRect> lineEndCandidates(const std::vector<Point>& vertices,
                                         LineAnchor lineAnchor, Size size);

/// Per-mark-type default positions. markType is one of bar, line, rect,
/// circle, point, square, area; anything else throws invalid_argument.
/// line and area return an empty list because their placement strategies
/// are not anchor lists (line-end candidates and the area labeler). For
/// bars the anchors are meant to be applied against the bar's end edge, so
/// the first entry lands outside the bar and the second inside it.
std::vector<CandidatePosition> defaultPositions(const std::string& markType,
                                                bool barVertical = true);

/// The 8-position model in default preference order.
std::vector<CandidatePosition> eightPositionDefault();

/// The 4-position model: the four diagonal corners.
std::vector<CandidatePosition> fourPositionModel();

/// Discretized slider: label rects touching the given side of the bbox,
/// shifted along it in steps of `stride`, ordered center-outward (the
/// centered rect first, then alternating positive/negative shifts). side
/// must be Top, Bottom, Left or Right.
std::vector<PixelRect> sliderCandidates(const PixelRect& bbox, Anchor side,
                                        Size size, int stride);

}  // namespace placard
