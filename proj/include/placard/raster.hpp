#pragma once

#include <set>
#include <string>
#include <vector>

#include "placard/bitmap.hpp"
#include "placard/geometry.hpp"

namespace placard {

/// A graphical mark that labels must avoid. Geometry fields are used
/// according to kind; unused fields keep their defaults.
struct Mark {
    enum class Kind { Point, Polyline, Rect, AreaBoundary, TextBox };

    Kind kind = Kind::Point;
    std::string group;
    double opacity = 1.0;

    Point center{};        // Point
    double radius = 0.0;   // Point

    std::vector<Point> vertices;  // Polyline
    double strokeWidth = 1.0;     // Polyline

    Point rectMin{};     // Rect / TextBox, corner rect
    Point rectMax{};     // Rect / TextBox
    bool filled = true;  // Rect

    int areaIndex = -1;  // AreaBoundary, index into the scene's areas
};

/// A run of occupied pixels within one row, columns inclusive.
struct RowSpan {
    int y = 0;
    int x0 = 0;
    int x1 = -1;
};

/// Pixels whose sample position (x, y) is within radius + inflate of the
/// disc center. Spans are clipped to `clip`.
void appendDiscSpans(Point center, double radius, double inflate,
                     const PixelRect& clip, std::vector<RowSpan>& out);

/// Pixels within strokeWidth/2 + inflate of segment ab (round caps).
void appendSegmentSpans(Point a, Point b, double strokeWidth, double inflate,
                        const PixelRect& clip, std::vector<RowSpan>& out);

void appendPolylineSpans(const std::vector<Point>& vertices, double strokeWidth,
                         double inflate, const PixelRect& clip,
                         std::vector<RowSpan>& out);

/// Pixels within `inflate` of the closed float rect. Unfilled rects emit the
/// boundary as a closed width-1 stroke instead.
void appendRectSpans(Point rectMin, Point rectMax, bool filled, double inflate,
                     const PixelRect& clip, std::vector<RowSpan>& out);

/// Spans of one mark, geometry translated by `offset`, clipped to `clip`.
/// inflate = 0.5 gives the conservative footprint used by the bitmap engine;
/// inflate = 0 reproduces plain center-sampled rasterization.
std::vector<RowSpan> markSpans(const Mark& mark,
                               const std::vector<AreaSeries>& areas,
                               const PixelRect& clip, double inflate,
                               Point offset = {0, 0});

/// Sorts by (y, x0) and coalesces overlapping or adjacent spans per row.
void mergeSpans(std::vector<RowSpan>& spans);

/// Integer pixel bounding box of a mark's geometry (unclipped, uninflated).
PixelRect markPixelBBox(const Mark& mark, const std::vector<AreaSeries>& areas);

void rasterizePoint(OccupancyBitmap& b, Point center, double radius);
void rasterizePolyline(OccupancyBitmap& b, const std::vector<Point>& vertices,
                       double strokeWidth);
void rasterizeRect(OccupancyBitmap& b, Point rectMin, Point rectMax,
                   bool filled, int minLabelHeight);

/// Rasterizes every mark whose group is selected (the set {"all"} selects
/// everything) and whose opacity is nonzero, conservatively inflated.
void rasterizeScene(OccupancyBitmap& b, const std::vector<Mark>& marks,
                    const std::vector<AreaSeries>& areas,
                    const std::set<std::string>& groups, int minLabelHeight);

/// Rasterizes the given marks conservatively, geometry translated by
/// `offset`. Filled rects go through markRect with minLabelHeight.
void rasterizeMarks(OccupancyBitmap& b, const std::vector<const Mark*>& marks,
                    const std::vector<AreaSeries>& areas, int minLabelHeight,
                    Point offset = {0, 0});

}  // namespace placard
