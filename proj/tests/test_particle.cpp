#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "placard/engine.hpp"
#include "placard/particle.hpp"
#include "placard/rng.hpp"
#include "support/oracles.hpp"

using namespace placard;
using placard::testing::BoolGrid;
using placard::testing::pixelInMark;

namespace {

Scene pointScene(double x, double y, double radius) {
    Scene scene;
    scene.width = 40;
    scene.height = 40;
    Mark m;
    m.kind = Mark::Kind::Point;
    m.group = "points";
    m.center = {x, y};
    m.radius = radius;
    scene.marks.push_back(m);
    LabelItem item;
    item.id = "p";
    item.text = "XY";
    item.labelSize = {6, 4};
    item.markRef = 0;
    item.baseBBox = markPixelBBox(m, scene.areas);
    scene.items.push_back(item);
    return scene;
}

// Plain center-sampled occupancy, the fidelity the baselines work at.
BoolGrid exactOccupancyOracle(const Scene& scene) {
    BoolGrid g(scene.width, scene.height);
    for (int y = 0; y < scene.height; ++y)
        for (int x = 0; x < scene.width; ++x)
            for (const Mark& m : scene.marks)
                if (m.opacity > 0 && pixelInMark(x, y, m, scene.areas, 0.0))
                    g.set(x, y);
    return g;
}

// The half-pixel witness: a 1-px vertical line whose exact footprint is one
// pixel column, and a label whose rect's right edge lands exactly on that
// column. Original particles sit at +0.5 and miss the closed rect; improved
// corner particles land on it.
Scene witnessScene() {
    Scene scene;
    scene.width = 20;
    scene.height = 20;
    Mark line;
    line.kind = Mark::Kind::Polyline;
    line.group = "lines";
    line.vertices = {{6, 0}, {6, 19}};
    line.strokeWidth = 1;
    scene.marks.push_back(line);
    Mark pt;
    pt.kind = Mark::Kind::Point;
    pt.group = "points";
    pt.center = {1, 10};
    pt.radius = 0;
    scene.marks.push_back(pt);
    LabelItem item;
    item.id = "w";
    item.text = "WWWWW";
    item.labelSize = {5, 3};
    item.markRef = 1;
    item.baseBBox = markPixelBBox(pt, scene.areas);
    scene.items.push_back(item);
    return scene;
}

LabelConfig witnessConfig() {
    LabelConfig config;
    config.positions = {{Anchor::Right, 0}};
    config.avoid = {"lines"};
    config.avoidBaseMark = false;  // keep the line as the only obstacle
    return config;
}

}  // namespace

TEST_CASE("grid queries use closed containment and match a linear scan") {
    std::vector<Particle> particles;
    SplitMix64 rng(13);
    for (int i = 0; i < 400; ++i)
        particles.push_back({rng.real(0, 60), rng.real(0, 40)});
    particles.push_back({10.0, 10.0});  // exactly on a rect corner
    ParticleGrid grid = gridBuild(particles, 8.0);
    CHECK(grid.particleCount() == particles.size());

    CHECK(gridQuery(grid, {10, 10, 12, 12}));  // boundary inclusive
    CHECK(gridQuery(grid, {8, 8, 10, 10}));

    for (int q = 0; q < 10000; ++q) {
        int x0 = rng.intIn(-5, 62), y0 = rng.intIn(-5, 42);
        PixelRect r{x0, y0, x0 + rng.intIn(0, 20), y0 + rng.intIn(0, 14)};
        bool expected = false;
        for (const Particle& p : particles)
            if (p.x >= r.x0 && p.x <= r.x1 && p.y >= r.y0 && p.y <= r.y1)
                expected = true;
        CHECK(gridQuery(grid, r) == expected);
    }

    ParticleGrid empty = gridBuild({}, 4.0);
    CHECK_FALSE(gridQuery(empty, {0, 0, 100, 100}));
}

TEST_CASE("original sampling drops one particle per occupied pixel center") {
    Scene scene = pointScene(3, 3, 0);
    auto particles = sampleOriginal(scene);
    REQUIRE(particles.size() == 1);
    CHECK(particles[0].x == 3.5);
    CHECK(particles[0].y == 3.5);

    Scene empty;
    empty.width = 10;
    empty.height = 10;
    CHECK(sampleOriginal(empty).empty());
}

TEST_CASE("original particle count equals the occupied pixel count") {
    SplitMix64 rng(29);
    Scene scene = placard::testing::randomScene(rng, 50, 40, 12, 3);
    auto particles = sampleOriginal(scene);
    CHECK(particles.size() == exactOccupancyOracle(scene).count());
}

TEST_CASE("an isolated pixel is all outline: four corner particles") {
    Scene scene = pointScene(7, 9, 0);
    auto particles = sampleImproved(scene);
    REQUIRE(particles.size() == 4);
    std::vector<std::pair<double, double>> got;
    for (const Particle& p : particles) got.push_back({p.x, p.y});
    std::sort(got.begin(), got.end());
    CHECK(got == std::vector<std::pair<double, double>>{
                     {7, 9}, {7, 10}, {8, 9}, {8, 10}});
}

TEST_CASE("a filled square samples outline corners plus a sparse lattice") {
    Scene scene;
    scene.width = 40;
    scene.height = 40;
    Mark sq;
    sq.kind = Mark::Kind::Rect;
    sq.group = "rects";
    sq.rectMin = {10, 10};
    sq.rectMax = {19, 19};  // 10x10 pixels
    scene.marks.push_back(sq);
    LabelItem item;  // sets W_min = H_min = 4
    item.id = "s";
    item.text = "SSSS";
    item.labelSize = {4, 4};
    item.markRef = 0;
    item.baseBBox = markPixelBBox(sq, scene.areas);
    scene.items.push_back(item);

    auto improved = sampleImproved(scene);
    auto original = sampleOriginal(scene);
    CHECK(original.size() == 100);
    CHECK(improved.size() < 400);
    CHECK(improved.size() <= original.size());

    // Every label-sized rect overlapping the square contains a particle.
    BoolGrid occupied = exactOccupancyOracle(scene);
    ParticleGrid grid = gridBuild(improved, 4.0);
    for (int y0 = -4; y0 < 40; ++y0) {
        for (int x0 = -4; x0 < 40; ++x0) {
            PixelRect q{x0, y0, x0 + 3, y0 + 3};
            bool overlaps = false;
            for (int y = std::max(0, q.y0); y <= std::min(39, q.y1); ++y)
                for (int x = std::max(0, q.x0); x <= std::min(39, q.x1); ++x)
                    if (occupied.get(x, y)) overlaps = true;
            if (overlaps) CHECK(gridQuery(grid, q));
        }
    }
}

TEST_CASE("improved sampling is sound for mixed marks, exhaustively") {
    Scene scene;
    scene.width = 40;
    scene.height = 40;
    {
        Mark m;
        m.kind = Mark::Kind::Rect;
        m.group = "g";
        m.rectMin = {4, 22};
        m.rectMax = {17, 37};
        scene.marks.push_back(m);
    }
    {
        Mark m;
        m.kind = Mark::Kind::Point;
        m.group = "g";
        m.center = {28, 10};
        m.radius = 5;
        scene.marks.push_back(m);
    }
    {
        Mark m;
        m.kind = Mark::Kind::Polyline;
        m.group = "g";
        m.vertices = {{2, 4}, {20, 14}, {38, 30}};
        m.strokeWidth = 2;
        scene.marks.push_back(m);
    }
    LabelItem item;  // W_min 5, H_min 3
    item.id = "m";
    item.text = "MIN";
    item.labelSize = {5, 3};
    item.markRef = 1;
    item.baseBBox = markPixelBBox(scene.marks[1], scene.areas);
    scene.items.push_back(item);

    auto improved = sampleImproved(scene);
    BoolGrid occupied = exactOccupancyOracle(scene);
    ParticleGrid grid = gridBuild(improved, 5.0);
    long long misses = 0;
    for (int y0 = -2; y0 < 40; ++y0) {
        for (int x0 = -4; x0 < 40; ++x0) {
            PixelRect q{x0, y0, x0 + 4, y0 + 2};
            bool overlaps = false;
            for (int y = std::max(0, q.y0); y <= std::min(39, q.y1); ++y)
                for (int x = std::max(0, q.x0); x <= std::min(39, q.x1); ++x)
                    if (occupied.get(x, y)) overlaps = true;
            if (overlaps && !gridQuery(grid, q)) ++misses;
        }
    }
    CHECK(misses == 0);
}

TEST_CASE("the half-pixel witness fools original but not improved") {
    Scene scene = witnessScene();
    LabelConfig config = witnessConfig();

    // The label rect lands on columns 2..6; column 6 is the line's pixel.
    auto original =
        placeLabelsParticle(scene, config, ParticleVariant::Original);
    REQUIRE(original[0].status == PlacementStatus::Placed);
    CHECK(original[0].rect.x1 == 6);
    BoolGrid occupied = exactOccupancyOracle(scene);
    long long shared = 0;
    for (int y = original[0].rect.y0; y <= original[0].rect.y1; ++y)
        for (int x = original[0].rect.x0; x <= original[0].rect.x1; ++x)
            if (occupied.get(x, y)) ++shared;
    CHECK(shared > 0);  // a visually overlapping label was placed

    auto improved =
        placeLabelsParticle(scene, config, ParticleVariant::Improved);
    CHECK(improved[0].status == PlacementStatus::Omitted);

    auto bitmap = placeLabelsGreedy(scene, config);
    CHECK(bitmap[0].status == PlacementStatus::Omitted);
}

TEST_CASE("unobstructed placement matches the bitmap engine") {
    Scene scene = pointScene(20, 20, 2);
    LabelConfig config;
    auto bitmap = placeLabelsGreedy(scene, config);
    auto original =
        placeLabelsParticle(scene, config, ParticleVariant::Original);
    auto improved =
        placeLabelsParticle(scene, config, ParticleVariant::Improved);
    REQUIRE(bitmap[0].status == PlacementStatus::Placed);
    CHECK(original[0].rect == bitmap[0].rect);
    CHECK(improved[0].rect == bitmap[0].rect);
}

TEST_CASE("placed labels block later candidates through their particles") {
    Scene scene;
    scene.width = 60;
    scene.height = 40;
    for (int i = 0; i < 2; ++i) {
        Mark m;
        m.kind = Mark::Kind::Point;
        m.group = "points";
        m.center = {20, 20};
        m.radius = 1;
        scene.marks.push_back(m);
        LabelItem item;
        item.id = "t" + std::to_string(i);
        item.text = "TT";
        item.labelSize = {10, 6};
        item.markRef = i;
        item.baseBBox = markPixelBBox(m, scene.areas);
        scene.items.push_back(item);
    }
    LabelConfig config;
    config.positions = {{Anchor::TopRight, 0}};
    config.avoidBaseMark = false;  // only label-label conflicts remain
    for (ParticleVariant v :
         {ParticleVariant::Original, ParticleVariant::Improved}) {
        auto placements = placeLabelsParticle(scene, config, v);
        CHECK(placements[0].status == PlacementStatus::Placed);
        CHECK(placements[1].status == PlacementStatus::Omitted);
    }
}
