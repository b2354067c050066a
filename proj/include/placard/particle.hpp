#pragma once

#include <vector>

#include "placard/greedy.hpp"
#include "placard/scene.hpp"

namespace placard {

/// A sample point standing in for one piece of occupied chart area.
struct Particle {
    double x = 0;
    double y = 0;
};

/// Uniform spatial grid over the chart (the trellis strategy): each particle
/// lives in the cell containing it, and rectangle queries visit only the
/// cells the rectangle touches.
class ParticleGrid {
public:
    ParticleGrid(double cellSize, Point boundsMin, Point boundsMax);

    void insert(Particle p);

    /// True iff some particle lies within the closed box
    /// [r.x0, r.x1] x [r.y0, r.y1].
    bool query(const PixelRect& r) const;

    double cellSize() const { return cellSize_; }
    std::size_t particleCount() const { return count_; }

private:
    double cellSize_;
    int col0_, row0_, cols_, rows_;
    std::vector<std::vector<Particle>> cells_;
    std::size_t count_ = 0;
};

ParticleGrid gridBuild(const std::vector<Particle>& particles, double cellSize);

inline bool gridQuery(const ParticleGrid& grid, const PixelRect& r) {
    return grid.query(r);
}

enum class ParticleVariant { Original, Improved };

/// Original Particle-Based Labeling sampling: one particle at the center
/// (x + 0.5, y + 0.5) of every occupied pixel. Occupancy is plain
/// center-sampled rasterization without the conservative half-pixel
/// inflation, preserving the baseline's fidelity.
std::vector<Particle> sampleOriginal(const Scene& scene);

/// Improved sampling: particles at the four integer corners of every
/// outline pixel (occupied pixels 4-adjacent to an unoccupied pixel or the
/// chart edge, per mark), plus corners of interior pixels on a per-mark
/// lattice with horizontal stride W_min and vertical stride H_min, where
/// W_min/H_min are the smallest label width/height in the scene. Corner
/// particles are deduplicated.
std::vector<Particle> sampleImproved(const Scene& scene);

/// Greedy placement with the same control flow as placeLabelsGreedy, but
/// occupancy tests query the particle grid and placements insert the
/// label's own particles (original: the center of every pixel of the rect;
/// improved: the outline/lattice corner scheme applied to the rect).
std::vector<Placement> placeLabelsParticle(const Scene& scene,
                                           const LabelConfig& config,
                                           ParticleVariant variant,
                                           const EngineOptions& options = {});

}  // namespace placard
