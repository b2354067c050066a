#include "placard/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "placard/rng.hpp"

namespace placard {

namespace {

std::string randomName(SplitMix64& rng, int minLen, int maxLen) {
    int len = rng.intIn(minLen, maxLen);
    std::string s;
    for (int i = 0; i < len; ++i)
        s.push_back(static_cast<char>('A' + rng.below(26)));
    return s;
}

}  // namespace

Scene genSyntheticMap(int nPoints, int nRoutes, int width, std::uint64_t seed) {
    if (nPoints < 1 || nRoutes < 0 || nRoutes > nPoints - 1)
        throw std::invalid_argument(
            "need nPoints >= 1 and 0 <= nRoutes <= nPoints - 1");
    if (width < 16) throw std::invalid_argument("width too small");

    Scene scene;
    scene.width = width;
    scene.height = width * 5 / 8;
    SplitMix64 rng(seed);
    double w = width, h = scene.height;
    double margin = w / 25.0;

    // Clustered, map-like point cloud. The hub sits where the routes meet.
    constexpr int kClusters = 9;
    Point clusters[kClusters];
    for (Point& c : clusters)
        c = {rng.real(margin, w - margin), rng.real(margin, h - margin)};

    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(nPoints));
    pts.push_back({0.18 * w, 0.30 * h});  // hub
    while (static_cast<int>(pts.size()) < nPoints) {
        Point p;
        if (rng.real() < 0.75) {
            const Point& c = clusters[rng.below(kClusters)];
            double sigma = w / 22.0;
            p = {c.x + sigma * rng.gaussian(), c.y + sigma * rng.gaussian()};
        } else {
            p = {rng.real(margin, w - margin), rng.real(margin, h - margin)};
        }
        p.x = std::clamp(p.x, 1.0, w - 2.0);
        p.y = std::clamp(p.y, 1.0, h - 2.0);
        pts.push_back(p);
    }

    for (int i = 0; i < nPoints; ++i) {
        Mark m;
        m.kind = Mark::Kind::Point;
        m.center = pts[static_cast<std::size_t>(i)];
        bool routed = i >= 1 && i <= nRoutes;
        m.radius = i == 0 ? 3.0 : (routed ? 2.5 : 2.0);
        m.group = routed || i == 0 ? "route-points" : "points";
        scene.marks.push_back(std::move(m));
    }

    for (int r = 1; r <= nRoutes; ++r) {
        Mark m;
        m.kind = Mark::Kind::Polyline;
        m.group = "routes";
        m.strokeWidth = 1.0;
        m.vertices = {pts[0], pts[static_cast<std::size_t>(r)]};
        scene.marks.push_back(std::move(m));
    }

    // Wiggly paths standing in for state outlines.
    constexpr int kSegments = 40;
    for (int k = 0; k < 6; ++k) {
        Mark m;
        m.kind = Mark::Kind::Polyline;
        m.group = "outlines";
        m.strokeWidth = 1.0;
        double baseY = h * (k + 0.7) / 6.5;
        double amp = h / 30.0, phase = rng.real(0, 6.28);
        for (int i = 0; i <= kSegments; ++i) {
            double x = w * i / kSegments;
            double y = baseY + amp * std::sin(i * 0.55 + phase) +
                       rng.real(-1.0, 1.0);
            m.vertices.push_back({x, std::clamp(y, 0.0, h - 1.0)});
        }
        scene.marks.push_back(std::move(m));
    }
    for (int k = 0; k < 4; ++k) {
        Mark m;
        m.kind = Mark::Kind::Polyline;
        m.group = "outlines";
        m.strokeWidth = 1.0;
        double baseX = w * (k + 0.8) / 4.8;
        double amp = w / 40.0, phase = rng.real(0, 6.28);
        for (int i = 0; i <= kSegments; ++i) {
            double y = h * i / kSegments;
            double x = baseX + amp * std::sin(i * 0.6 + phase) +
                       rng.real(-1.0, 1.0);
            m.vertices.push_back({std::clamp(x, 0.0, w - 1.0), y});
        }
        scene.marks.push_back(std::move(m));
    }

    // Pre-placed boxes naming the routed airports, as obstacles.
    double fontSize = 9.0;
    for (int r = 1; r <= nRoutes; ++r) {
        std::string name = randomName(rng, 8, 14);
        double bw = static_cast<double>(name.size()) * 0.6 * fontSize;
        Point e = pts[static_cast<std::size_t>(r)];
        Mark m;
        m.kind = Mark::Kind::TextBox;
        m.group = "route-labels";
        m.rectMin = {e.x + 3.0, e.y - 3.0 - fontSize};
        m.rectMax = {e.x + 3.0 + bw, e.y - 3.0};
        scene.marks.push_back(std::move(m));
    }

    for (int i = nRoutes + 1; i < nPoints; ++i) {
        LabelItem item;
        item.id = "a" + std::to_string(i);
        item.text = randomName(rng, 3, 5);
        item.fontSize = fontSize;
        item.markRef = i;
        item.labelSize = {
            static_cast<int>(std::ceil(
                static_cast<double>(item.text.size()) * 0.6 * fontSize - 1e-9)),
            static_cast<int>(fontSize)};
        item.baseBBox = markPixelBBox(scene.marks[static_cast<std::size_t>(i)],
                                      scene.areas);
        scene.items.push_back(std::move(item));
    }
    return scene;
}

LabelConfig syntheticMapConfig() {
    LabelConfig config;
    config.avoid = {"points", "route-points", "routes", "outlines",
                    "route-labels"};
    config.avoidBaseMark = true;
    config.padding = 0;
    return config;
}

BenchReport runBench(const std::vector<Engine>& engines,
                     const std::vector<int>& widths, int reps,
                     std::uint64_t seed, int nPoints, int nRoutes) {
    if (reps < 1) throw std::invalid_argument("reps must be >= 1");
    BenchReport report;
    LabelConfig config = syntheticMapConfig();

    // Scenes are generated once per width and shared by every engine;
    // cells are emitted grouped by engine afterwards.
    std::vector<std::vector<BenchCell>> byEngine(engines.size());
    for (int width : widths) {
        Scene scene = genSyntheticMap(nPoints, nRoutes, width, seed);
        for (std::size_t e = 0; e < engines.size(); ++e) {
            BenchCell cell;
            cell.engine = engineName(engines[e]);
            cell.width = width;
            cell.reps = reps;
            cell.seed = seed;
            try {
                std::vector<double> times;
                long long labels = -1;
                for (int rep = 0; rep < reps; ++rep) {
                    auto t0 = std::chrono::steady_clock::now();
                    auto placements = placeLabels(scene, config, engines[e]);
                    auto t1 = std::chrono::steady_clock::now();
                    times.push_back(
                        std::chrono::duration<double, std::milli>(t1 - t0)
                            .count());
                    long long placed = 0;
                    for (const Placement& p : placements)
                        if (p.status == PlacementStatus::Placed) ++placed;
                    if (labels < 0)
                        labels = placed;
                    else if (labels != placed)
                        throw std::runtime_error(
                            "nondeterministic label count across reps");
                }
                std::sort(times.begin(), times.end());
                std::size_t n = times.size();
                cell.medianMs = n % 2 == 1
                                    ? times[n / 2]
                                    : (times[n / 2 - 1] + times[n / 2]) / 2.0;
                cell.labelsPlaced = labels;
            } catch (const std::exception&) {
                cell.failed = true;
                cell.medianMs = -1;
                cell.labelsPlaced = -1;
            }
            byEngine[e].push_back(std::move(cell));
        }
    }
    for (auto& cells : byEngine)
        for (auto& c : cells) report.cells.push_back(std::move(c));
    return report;
}

std::string BenchReport::toCsv() const {
    std::ostringstream out;
    out << "engine,width,median_ms,labels_placed,reps,seed\n";
    for (const BenchCell& c : cells) {
        char ms[32];
        std::snprintf(ms, sizeof ms, "%.3f", c.medianMs);
        out << c.engine << ',' << c.width << ',' << ms << ','
            << c.labelsPlaced << ',' << c.reps << ',' << c.seed << '\n';
    }
    return out.str();
}

}  // namespace placard
