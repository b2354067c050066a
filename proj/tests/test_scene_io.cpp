#include <doctest.h>

#include <stdexcept>

#include "placard/engine.hpp"
#include "placard/scene_io.hpp"
#include "support/oracles.hpp"

using namespace placard;

namespace {

const char* kMinimalScene = R"({
  "width": 100,
  "height": 80,
  "marks": [
    {"kind": "point", "group": "points", "x": 50, "y": 40, "radius": 2}
  ],
  "items": [
    {"text": "1975", "fontSize": 10, "mark": 0}
  ]
})";

}  // namespace

TEST_CASE("a minimal scene parses with defaults") {
    SceneDocument doc = parseScene(kMinimalScene);
    CHECK(doc.scene.width == 100);
    CHECK(doc.scene.height == 80);
    REQUIRE(doc.scene.items.size() == 1);
    CHECK(doc.scene.items[0].labelSize.w == 24);  // 4 chars * 0.6 * 10
    CHECK(doc.scene.items[0].labelSize.h == 10);
    CHECK(doc.scene.items[0].id == "0");
    CHECK(doc.config.positions.empty());
    CHECK(doc.config.avoidBaseMark);
    CHECK(doc.config.lineAnchor == LineAnchor::End);
    CHECK(doc.config.method == AreaMethod::ReducedSearch);

    // Defaulting to the 8-position model: unobstructed point -> top-right.
    auto placements = placeLabels(doc.scene, doc.config, Engine::Bitmap);
    REQUIRE(placements.size() == 1);
    CHECK(placements[0].status == PlacementStatus::Placed);
    CHECK(placements[0].anchorUsed.anchor == Anchor::TopRight);
}

TEST_CASE("config fields parse") {
    SceneDocument doc = parseScene(R"({
      "width": 50, "height": 50,
      "areas": [{"pairs": [[0, 10, 30], [49, 12, 28]]}],
      "items": [{"text": "A", "area": 0}],
      "config": {"method": "flood-fill", "padding": 12.5,
                 "sort": "priority-desc", "lineAnchor": "begin",
                 "avoid": ["grid", "all"], "avoidBaseMark": false,
                 "positions": [{"anchor": "top", "offset": 2}]}
    })");
    CHECK(doc.config.method == AreaMethod::FloodFill);
    CHECK(doc.config.padding == 12.5);
    CHECK(doc.config.sort == SortOrder::PriorityDesc);
    CHECK(doc.config.lineAnchor == LineAnchor::Begin);
    CHECK_FALSE(doc.config.avoidBaseMark);
    REQUIRE(doc.config.positions.size() == 1);
    CHECK(doc.config.positions[0].anchor == Anchor::Top);
    CHECK(doc.config.positions[0].offset == 2);
}

TEST_CASE("Vega-style parallel anchor/offset lists are zipped") {
    SceneDocument doc = parseScene(R"({
      "width": 10, "height": 10,
      "config": {"anchor": ["top-right", "left"], "offset": [1, 3]}
    })");
    REQUIRE(doc.config.positions.size() == 2);
    CHECK(doc.config.positions[0].anchor == Anchor::TopRight);
    CHECK(doc.config.positions[0].offset == 1);
    CHECK(doc.config.positions[1].anchor == Anchor::Left);
    CHECK(doc.config.positions[1].offset == 3);

    SceneDocument broadcast = parseScene(R"({
      "width": 10, "height": 10,
      "config": {"anchor": ["top"], "offset": 5}
    })");
    CHECK(broadcast.config.positions[0].offset == 5);
}

TEST_CASE("unknown fields are rejected with a JSON path") {
    try {
        parseScene(R"({"width": 10, "height": 10, "config": {"ancor": ["top"]}})");
        FAIL("expected a parse error");
    } catch (const std::runtime_error& e) {
        std::string msg = e.what();
        CHECK(msg.find("$.config.ancor") != std::string::npos);
        CHECK(msg.find("unknown field") != std::string::npos);
    }
}

TEST_CASE("schema violations carry their location") {
    CHECK_THROWS_WITH_AS(
        parseScene(R"({"width": 0, "height": 10})"),
        doctest::Contains("$.width"), std::runtime_error);
    CHECK_THROWS_WITH_AS(
        parseScene(
            R"({"width": 9, "height": 9, "items": [{"text": "x", "mark": 4}]})"),
        doctest::Contains("$.items[0].mark"), std::runtime_error);
    CHECK_THROWS_WITH_AS(
        parseScene(R"({"width": 9, "height": 9,
                       "marks": [{"kind": "blob", "x": 1, "y": 1}]})"),
        doctest::Contains("$.marks[0].kind"), std::runtime_error);
    CHECK_THROWS_WITH_AS(
        parseScene(R"({"width": 9, "height": 9,
                       "areas": [{"pairs": [[0, 5, 3]]}]})"),
        doctest::Contains("$.areas[0].pairs"), std::runtime_error);
    CHECK_THROWS_WITH_AS(
        parseScene(R"({"width": 9, "height": 9,
                       "items": [{"text": "x"}]})"),
        doctest::Contains("$.items[0]"), std::runtime_error);
    CHECK_THROWS_WITH_AS(
        parseScene(R"({"width": 9, "height": 9,
                       "config": {"markType": "hexbin"}})"),
        doctest::Contains("$.config.markType"), std::runtime_error);
}

TEST_CASE("parse-emit-parse round-trips the scene") {
    const char* doc = R"({
      "width": 120, "height": 90,
      "fontMetric": {"charWidthFactor": 0.55},
      "areas": [{"pairs": [[0, 40, 70], [60, 35, 75], [119, 42, 68]]}],
      "marks": [
        {"kind": "point", "group": "pts", "x": 10.25, "y": 20.5, "radius": 2},
        {"kind": "polyline", "group": "ln", "points": [[0, 0], [50, 45.5]],
         "strokeWidth": 1.5, "opacity": 0.8},
        {"kind": "rect", "group": "bx", "x0": 5, "y0": 6, "x1": 30, "y1": 18,
         "filled": false},
        {"kind": "textBox", "group": "bx", "x0": 40, "y0": 6, "x1": 70, "y1": 16},
        {"kind": "areaBoundary", "group": "ar", "area": 0}
      ],
      "items": [
        {"id": "i0", "text": "Alpha", "fontSize": 9, "mark": 0, "priority": 2},
        {"id": "i1", "text": "Läbel", "size": [18, 8], "bbox": [4, 4, 9, 9]},
        {"id": "i2", "text": "Area", "area": 0}
      ],
      "config": {"positions": [{"anchor": "bottom-left", "offset": 1.5}],
                 "avoid": ["ln", "bx"], "method": "naive", "padding": 3,
                 "sort": "priority", "markType": "point",
                 "barOrient": "horizontal", "avoidBaseMark": true,
                 "lineAnchor": "begin"}
    })";
    std::string once = emitScene(parseScene(doc));
    std::string twice = emitScene(parseScene(once));
    CHECK(once == twice);

    // UTF-8 text sizes by code points, not bytes.
    SceneDocument parsed = parseScene(doc);
    CHECK(parsed.scene.items[1].labelSize.w == 18);  // explicit size wins
    CHECK(parsed.scene.items[1].text == "Läbel");
}

TEST_CASE("placements JSON lists status, rect, and anchor") {
    std::vector<Placement> placements(2);
    placements[0].itemId = "a";
    placements[0].status = PlacementStatus::Placed;
    placements[0].rect = {3, 4, 12, 9};
    placements[0].anchorUsed = {Anchor::Top, 1};
    placements[1].itemId = "b";

    std::string json = placementsJson(placements);
    CHECK(json.find("\"id\": \"a\"") != std::string::npos);
    CHECK(json.find("\"status\": \"placed\"") != std::string::npos);
    CHECK(json.find("\"status\": \"omitted\"") != std::string::npos);
    CHECK(json.find("\"rect\"") != std::string::npos);
    CHECK(json.find("\"top\"") != std::string::npos);

    CHECK(placementsJson(placements) == json);  // stable output
}

TEST_CASE("SVG renders marks alone when nothing placed") {
    SceneDocument doc = parseScene(kMinimalScene);
    std::vector<Placement> none(1);
    none[0].itemId = "0";
    std::string svg = renderSvg(doc.scene, none);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("<circle") != std::string::npos);
    CHECK(svg.find("<text") == std::string::npos);
}

TEST_CASE("SVG label rects match placement rects exactly") {
    SceneDocument doc = parseScene(kMinimalScene);
    auto placements = placeLabels(doc.scene, doc.config, Engine::Bitmap);
    REQUIRE(placements[0].status == PlacementStatus::Placed);
    const PixelRect& r = placements[0].rect;
    std::string svg = renderSvg(doc.scene, placements);
    std::string expected = "<rect x=\"" + std::to_string(r.x0) + "\" y=\"" +
                           std::to_string(r.y0) + "\" width=\"" +
                           std::to_string(r.width()) + "\" height=\"" +
                           std::to_string(r.height()) + "\"";
    CHECK(svg.find(expected) != std::string::npos);
    CHECK(svg.find(">1975</text>") != std::string::npos);
}

TEST_CASE("connected scatter renders points, the path, and labels") {
    SceneDocument doc = parseScene(R"({
      "width": 120, "height": 80,
      "marks": [
        {"kind": "polyline", "group": "path",
         "points": [[10, 60], [45, 30], [80, 44], [110, 15]], "strokeWidth": 1},
        {"kind": "point", "group": "pts", "x": 10, "y": 60, "radius": 2},
        {"kind": "point", "group": "pts", "x": 45, "y": 30, "radius": 2},
        {"kind": "point", "group": "pts", "x": 80, "y": 44, "radius": 2},
        {"kind": "point", "group": "pts", "x": 110, "y": 15, "radius": 2}
      ],
      "items": [
        {"text": "1975", "fontSize": 8, "mark": 1},
        {"text": "1980", "fontSize": 8, "mark": 2},
        {"text": "1985", "fontSize": 8, "mark": 3},
        {"text": "1990", "fontSize": 8, "mark": 4}
      ],
      "config": {"avoid": ["path", "pts"]}
    })");
    auto placements = placeLabels(doc.scene, doc.config, Engine::Bitmap);
    std::string svg = renderSvg(doc.scene, placements);
    CHECK(svg.find("<polyline") != std::string::npos);
    CHECK(svg.find("<circle") != std::string::npos);
    int texts = 0;
    for (std::size_t at = svg.find("<text"); at != std::string::npos;
         at = svg.find("<text", at + 1))
        ++texts;
    CHECK(texts == placard::testing::placedCount(placements));
    CHECK(texts == 4);  // all four year labels fit
}

TEST_CASE("captured bitmap spans the padded chart") {
    SceneDocument doc = parseScene(kMinimalScene);
    doc.config.padding = 7;
    OccupancyBitmap captured(1, 1);
    EngineOptions options;
    options.captureBitmap = &captured;
    placeLabels(doc.scene, doc.config, Engine::Bitmap, options);
    CHECK(captured.width() == 100 + 14);
    CHECK(captured.height() == 80 + 14);
    std::string pgm = captured.toPgm();
    CHECK(pgm.rfind("P2\n114 94\n1\n", 0) == 0);
}
