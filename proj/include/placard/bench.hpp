#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "placard/engine.hpp"
#include "placard/scene.hpp"

namespace placard {

struct BenchCell {
    std::string engine;
    int width = 0;
    double medianMs = -1;
    long long labelsPlaced = -1;
    int reps = 0;
    std::uint64_t seed = 0;
    bool failed = false;
};

struct BenchReport {
    std::vector<BenchCell> cells;

    /// CSV with header engine,width,median_ms,labels_placed,reps,seed.
    /// Failed cells carry -1 in the measurement columns.
    std::string toCsv() const;
};

/// Deterministic synthetic map scene: a clustered point cloud, routes fanning
/// out from one hub point, wiggly outline paths, and one pre-placed text box
/// per route acting as an obstacle. Every point without a route is a
/// labelable item. Chart aspect ratio is fixed at 5:8 (height = width*5/8).
Scene genSyntheticMap(int nPoints, int nRoutes, int width, std::uint64_t seed);

/// The config the benchmark runs with: labels avoid every mark group and use
/// the default 8-position candidates.
LabelConfig syntheticMapConfig();

/// Runs reps timed placements per (engine, width) cell on identical scenes
/// and reports the median wall-clock time of the placement call (which
/// includes rasterization or particle sampling) plus the label count. Label
/// counts must be identical across reps; a mismatch or an engine error marks
/// the cell failed and the other cells proceed.
BenchReport runBench(const std::vector<Engine>& engines,
                     const std::vector<int>& widths, int reps,
                     std::uint64_t seed, int nPoints = 3320, int nRoutes = 56);

}  // namespace placard
