#include <doctest.h>

#include <stdexcept>

#include "placard/candidates.hpp"

using namespace placard;

TEST_CASE("labelBounds places against the anchor side") {
    PixelRect bbox{10, 10, 14, 14};
    Size label{8, 4};

    PixelRect top = labelBounds(Anchor::Top, 0, bbox, label);
    CHECK(top == PixelRect{8, 6, 15, 9});  // x-centered, bottom edge at top-1

    PixelRect mid = labelBounds(Anchor::Middle, 0, bbox, label);
    CHECK(mid == PixelRect{8, 10, 15, 13});
    CHECK(labelBounds(Anchor::Middle, 7, bbox, label) == mid);  // offset ignored

    PixelRect right = labelBounds(Anchor::Right, 3, bbox, label);
    CHECK(right.x0 == 18);
    CHECK(right.width() == 8);
    CHECK(right.height() == 4);
}

TEST_CASE("labelBounds output always has the label's exact size") {
    PixelRect bbox{3, 7, 10, 11};
    for (Anchor a : {Anchor::TopLeft, Anchor::Top, Anchor::TopRight,
                     Anchor::Right, Anchor::BottomRight, Anchor::Bottom,
                     Anchor::BottomLeft, Anchor::Left, Anchor::Middle}) {
        for (double off : {0.0, 2.0, 5.5}) {
            PixelRect r = labelBounds(a, off, bbox, {7, 3});
            CHECK(r.width() == 7);
            CHECK(r.height() == 3);
        }
    }
}

TEST_CASE("offset 0 makes the label touch the bbox") {
    PixelRect bbox{20, 20, 24, 26};
    Size label{6, 3};
    for (Anchor a : {Anchor::TopLeft, Anchor::Top, Anchor::TopRight,
                     Anchor::Right, Anchor::BottomRight, Anchor::Bottom,
                     Anchor::BottomLeft, Anchor::Left}) {
        PixelRect r = labelBounds(a, 0, bbox, label);
        CHECK_FALSE(r.intersects(bbox));
        // Sharing an edge or corner: expanding the label by 1 reaches the bbox.
        PixelRect grown{r.x0 - 1, r.y0 - 1, r.x1 + 1, r.y1 + 1};
        CHECK(grown.intersects(bbox));
    }
}

TEST_CASE("the 8 anchor rects are symmetric about the bbox center") {
    PixelRect bbox{10, 10, 14, 14};  // center (12, 12)
    Size label{5, 5};
    int d = 3;
    auto mirror = [&](const PixelRect& r) {
        return PixelRect{24 - r.x1, 24 - r.y1, 24 - r.x0, 24 - r.y0};
    };
    CHECK(mirror(labelBounds(Anchor::TopLeft, d, bbox, label)) ==
          labelBounds(Anchor::BottomRight, d, bbox, label));
    CHECK(mirror(labelBounds(Anchor::Top, d, bbox, label)) ==
          labelBounds(Anchor::Bottom, d, bbox, label));
    CHECK(mirror(labelBounds(Anchor::Left, d, bbox, label)) ==
          labelBounds(Anchor::Right, d, bbox, label));
    CHECK(mirror(labelBounds(Anchor::TopRight, d, bbox, label)) ==
          labelBounds(Anchor::BottomLeft, d, bbox, label));
}

TEST_CASE("candidateSequence preserves order and length") {
    LabelItem item;
    item.baseBBox = {10, 10, 14, 14};
    item.labelSize = {8, 4};

    auto defaults = eightPositionDefault();
    auto rects = candidateSequence(item, defaults);
    REQUIRE(rects.size() == 8);
    CHECK(defaults[0].anchor == Anchor::TopRight);
    CHECK(defaults[1].anchor == Anchor::Top);
    CHECK(defaults[2].anchor == Anchor::TopLeft);
    CHECK(defaults[3].anchor == Anchor::Left);
    CHECK(defaults[4].anchor == Anchor::BottomLeft);
    CHECK(defaults[5].anchor == Anchor::Bottom);
    CHECK(defaults[6].anchor == Anchor::BottomRight);
    CHECK(defaults[7].anchor == Anchor::Right);
    for (std::size_t i = 0; i < rects.size(); ++i)
        CHECK(rects[i] ==
              labelBounds(defaults[i].anchor, 0, item.baseBBox, item.labelSize));

    auto corners = fourPositionModel();
    REQUIRE(corners.size() == 4);
    for (const CandidatePosition& p : corners)
        CHECK((p.anchor == Anchor::TopRight || p.anchor == Anchor::TopLeft ||
               p.anchor == Anchor::BottomLeft ||
               p.anchor == Anchor::BottomRight));

    auto single = candidateSequence(item, {{Anchor::Left, 2}});
    CHECK(single.size() == 1);

    CHECK_THROWS_AS(candidateSequence(item, {}), std::invalid_argument);
}

TEST_CASE("line-end candidates anchor at the right vertex") {
    std::vector<Point> line{{2, 18}, {10, 12}, {21, 14}};
    Size label{6, 4};

    auto end = lineEndCandidates(line, LineAnchor::End, label);
    REQUIRE(end.size() == 3);
    for (const PixelRect& r : end) CHECK(r.x0 == 22);  // right of (21, 14)
    CHECK(end[0].y1 < 14);   // top-right
    CHECK(end[2].y0 > 14);   // bottom-right

    auto begin = lineEndCandidates(line, LineAnchor::Begin, label);
    REQUIRE(begin.size() == 3);
    for (const PixelRect& r : begin) CHECK(r.x1 == 1);  // left of (2, 18)

    auto dot = lineEndCandidates({{5, 5}}, LineAnchor::End, label);
    CHECK(dot.size() == 3);
    CHECK(dot[1].x0 == 6);

    CHECK_THROWS_AS(lineEndCandidates({}, LineAnchor::End, label),
                    std::invalid_argument);
}

TEST_CASE("per-mark-type defaults") {
    auto rect = defaultPositions("rect");
    REQUIRE(rect.size() == 1);
    CHECK(rect[0].anchor == Anchor::Middle);

    auto point = defaultPositions("point");
    REQUIRE(point.size() == 8);
    CHECK(point[0].anchor == Anchor::TopRight);
    CHECK(defaultPositions("circle").size() == 8);
    CHECK(defaultPositions("square").size() == 8);

    auto bar = defaultPositions("bar", true);
    REQUIRE(bar.size() == 2);
    CHECK(bar[0].anchor == Anchor::Top);     // outside the bar's top end
    CHECK(bar[1].anchor == Anchor::Bottom);  // inside, below the end edge

    CHECK(defaultPositions("line").empty());
    CHECK(defaultPositions("area").empty());
    CHECK_THROWS_AS(defaultPositions("hexbin"), std::invalid_argument);
}

TEST_CASE("slider candidates run center-outward along the side") {
    PixelRect bbox{10, 10, 29, 14};
    auto rects = sliderCandidates(bbox, Anchor::Top, {6, 3}, 4);
    REQUIRE(rects.size() >= 3);
    for (const PixelRect& r : rects) {
        CHECK(r.y1 == 9);              // touching the top side
        CHECK(r.x0 <= bbox.x1);        // still overlapping the side span
        CHECK(r.x1 >= bbox.x0);
    }
    // Distances from the centered start are non-decreasing.
    int baseX = rects[0].x0;
    int prev = 0;
    for (const PixelRect& r : rects) {
        int d = r.x0 > baseX ? r.x0 - baseX : baseX - r.x0;
        CHECK(d >= prev);
        prev = d;
    }
    CHECK_THROWS_AS(sliderCandidates(bbox, Anchor::Middle, {6, 3}, 4),
                    std::invalid_argument);
}

TEST_CASE("anchor names round-trip") {
    for (Anchor a : {Anchor::TopLeft, Anchor::Top, Anchor::TopRight,
                     Anchor::Right, Anchor::BottomRight, Anchor::Bottom,
                     Anchor::BottomLeft, Anchor::Left, Anchor::Middle})
        CHECK(anchorFromName(anchorName(a)) == a);
    CHECK_THROWS_AS(anchorFromName("center"), std::invalid_argument);
}
