#include "placard/particle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include "greedy_driver.hpp"
#include "placard/bitmap.hpp"
#include "placard/raster.hpp"

namespace placard {

namespace {

int cellOf(double v, double cellSize) {
    return static_cast<int>(std::floor(v / cellSize));
}

// Packs a corner coordinate pair for deduplication. Coordinates stay well
// within +-131071 of the chart, so the shifted values fit 20 bits each.
std::int64_t cornerKey(int x, int y) {
    return (static_cast<std::int64_t>(x + 131072) << 20) |
           static_cast<std::int64_t>(y + 131072);
}

}  // namespace

ParticleGrid::ParticleGrid(double cellSize, Point boundsMin, Point boundsMax)
    : cellSize_(cellSize) {
    if (cellSize <= 0) throw std::invalid_argument("cellSize must be positive");
    col0_ = cellOf(boundsMin.x, cellSize);
    row0_ = cellOf(boundsMin.y, cellSize);
    cols_ = std::max(1, cellOf(boundsMax.x, cellSize) - col0_ + 1);
    rows_ = std::max(1, cellOf(boundsMax.y, cellSize) - row0_ + 1);
    cells_.resize(static_cast<std::size_t>(cols_) * rows_);
}

void ParticleGrid::insert(Particle p) {
    int c = std::clamp(cellOf(p.x, cellSize_) - col0_, 0, cols_ - 1);
    int r = std::clamp(cellOf(p.y, cellSize_) - row0_, 0, rows_ - 1);
    cells_[static_cast<std::size_t>(r) * cols_ + c].push_back(p);
    ++count_;
}

bool ParticleGrid::query(const PixelRect& r) const {
    if (r.empty()) return false;
    int c0 = std::max(0, cellOf(r.x0, cellSize_) - col0_);
    int c1 = std::min(cols_ - 1, cellOf(r.x1, cellSize_) - col0_);
    int r0 = std::max(0, cellOf(r.y0, cellSize_) - row0_);
    int r1 = std::min(rows_ - 1, cellOf(r.y1, cellSize_) - row0_);
    for (int row = r0; row <= r1; ++row) {
        for (int col = c0; col <= c1; ++col) {
            for (const Particle& p :
                 cells_[static_cast<std::size_t>(row) * cols_ + col]) {
                if (p.x >= r.x0 && p.x <= r.x1 && p.y >= r.y0 && p.y <= r.y1)
                    return true;
            }
        }
    }
    return false;
}

ParticleGrid gridBuild(const std::vector<Particle>& particles,
                       double cellSize) {
    Point lo{0, 0}, hi{1, 1};
    if (!particles.empty()) {
        lo = {particles[0].x, particles[0].y};
        hi = lo;
        for (const Particle& p : particles) {
            lo.x = std::min(lo.x, p.x);
            lo.y = std::min(lo.y, p.y);
            hi.x = std::max(hi.x, p.x);
            hi.y = std::max(hi.y, p.y);
        }
    }
    ParticleGrid grid(cellSize, lo, hi);
    for (const Particle& p : particles) grid.insert(p);
    return grid;
}

namespace {

// Occupancy without the conservative inflation: plain center sampling, the
// fidelity the original baseline works at.
OccupancyBitmap exactOccupancy(const std::vector<const Mark*>& marks,
                               const std::vector<AreaSeries>& areas, int width,
                               int height) {
    OccupancyBitmap bm(width, height);
    for (const Mark* m : marks) {
        if (m->opacity <= 0) continue;
        for (const RowSpan& s : markSpans(*m, areas, bm.bounds(), 0.0))
            bm.markRange(s.y, s.x0, s.x1);
    }
    return bm;
}

std::vector<Particle> originalFromMarks(const std::vector<const Mark*>& marks,
                                        const std::vector<AreaSeries>& areas,
                                        int width, int height) {
    OccupancyBitmap bm = exactOccupancy(marks, areas, width, height);
    std::vector<Particle> out;
    const auto& words = bm.words();
    int wb = bm.wordBits();
    for (std::size_t wi = 0; wi < words.size(); ++wi) {
        std::uint64_t w = words[wi];
        if (!w) continue;
        std::int64_t base = static_cast<std::int64_t>(wi) * wb;
        for (int k = 0; k < wb; ++k) {
            if ((w >> (wb - 1 - k)) & 1) {
                std::int64_t bit = base + k;
                int x = static_cast<int>(bit % width);
                int y = static_cast<int>(bit / width);
                out.push_back({x + 0.5, y + 0.5});
            }
        }
    }
    return out;
}

using IntervalList = std::vector<std::pair<int, int>>;

// Intersects [a, b] with a sorted disjoint interval list.
IntervalList intersect(int a, int b, const IntervalList& cover) {
    IntervalList out;
    for (const auto& [c, d] : cover) {
        int lo = std::max(a, c), hi = std::min(b, d);
        if (lo <= hi) out.push_back({lo, hi});
    }
    return out;
}

IntervalList intersect(const IntervalList& xs, const IntervalList& cover) {
    IntervalList out;
    for (const auto& [a, b] : xs) {
        IntervalList part = intersect(a, b, cover);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

// [a, b] minus a sorted disjoint interval list.
IntervalList subtract(int a, int b, const IntervalList& holes) {
    IntervalList out;
    int cur = a;
    for (const auto& [c, d] : holes) {
        if (c > cur) out.push_back({cur, std::min(b, c - 1)});
        cur = std::max(cur, d + 1);
        if (cur > b) break;
    }
    if (cur <= b) out.push_back({cur, b});
    return out;
}

template <typename Emit>
void improvedFromSpans(std::vector<RowSpan> spans, int width, int height,
                       int wMin, int hMin, Emit&& emitPixelCorners) {
    mergeSpans(spans);
    if (spans.empty()) return;

    int bboxX0 = spans[0].x0;
    int bboxY0 = spans[0].y;
    for (const RowSpan& s : spans) bboxX0 = std::min(bboxX0, s.x0);

    // Row index into the merged, (y, x0)-sorted span list.
    auto rowRange = [&](int y) {
        IntervalList cover;
        auto it = std::lower_bound(
            spans.begin(), spans.end(), y,
            [](const RowSpan& s, int yy) { return s.y < yy; });
        for (; it != spans.end() && it->y == y; ++it)
            cover.push_back({it->x0, it->x1});
        return cover;
    };

    for (std::size_t i = 0; i < spans.size();) {
        int y = spans[i].y;
        IntervalList above = y > 0 ? rowRange(y - 1) : IntervalList{};
        IntervalList below = y + 1 < height ? rowRange(y + 1) : IntervalList{};
        for (; i < spans.size() && spans[i].y == y; ++i) {
            const RowSpan& s = spans[i];
            IntervalList interior;
            if (y > 0 && y + 1 < height && s.x1 - s.x0 >= 2) {
                int a = std::max(s.x0 + 1, 1);
                int b = std::min(s.x1 - 1, width - 2);
                if (a <= b)
                    interior = intersect(intersect(a, b, above), below);
            }
            for (const auto& [a, b] : subtract(s.x0, s.x1, interior))
                for (int x = a; x <= b; ++x) emitPixelCorners(x, y);
            if ((y - bboxY0) % hMin == 0) {
                for (const auto& [a, b] : interior) {
                    int first = a + ((bboxX0 - a) % wMin + wMin) % wMin;
                    for (int x = first; x <= b; x += wMin)
                        emitPixelCorners(x, y);
                }
            }
        }
    }
}

std::vector<Particle> improvedFromMarks(const std::vector<const Mark*>& marks,
                                        const std::vector<AreaSeries>& areas,
                                        int width, int height, int wMin,
                                        int hMin) {
    std::vector<Particle> out;
    std::unordered_set<std::int64_t> seen;
    PixelRect clip{0, 0, width - 1, height - 1};
    auto emit = [&](int x, int y) {
        for (int dy = 0; dy <= 1; ++dy) {
            for (int dx = 0; dx <= 1; ++dx) {
                if (seen.insert(cornerKey(x + dx, y + dy)).second)
                    out.push_back({static_cast<double>(x + dx),
                                   static_cast<double>(y + dy)});
            }
        }
    };
    for (const Mark* m : marks) {
        if (m->opacity <= 0) continue;
        improvedFromSpans(markSpans(*m, areas, clip, 0.0), width, height, wMin,
                          hMin, emit);
    }
    return out;
}

std::vector<const Mark*> allMarks(const Scene& scene) {
    std::vector<const Mark*> out;
    for (const Mark& m : scene.marks) out.push_back(&m);
    return out;
}

// Corner particles for a placed label's rectangle, outline plus interior
// lattice, mirroring the mark sampling scheme.
template <typename Emit>
void improvedRectParticles(const PixelRect& r, int wMin, int hMin,
                           Emit&& emitParticle) {
    std::unordered_set<std::int64_t> seen;
    auto pixel = [&](int x, int y) {
        for (int dy = 0; dy <= 1; ++dy)
            for (int dx = 0; dx <= 1; ++dx)
                if (seen.insert(cornerKey(x + dx, y + dy)).second)
                    emitParticle(Particle{static_cast<double>(x + dx),
                                          static_cast<double>(y + dy)});
    };
    for (int x = r.x0; x <= r.x1; ++x) {
        pixel(x, r.y0);
        pixel(x, r.y1);
    }
    for (int y = r.y0; y <= r.y1; ++y) {
        pixel(r.x0, y);
        pixel(r.x1, y);
    }
    for (int y = r.y0 + hMin; y < r.y1; y += hMin)
        for (int x = r.x0 + wMin; x < r.x1; x += wMin) pixel(x, y);
}

struct ParticleIndex {
    ParticleGrid grid;
    ParticleVariant variant;
    int wMin, hMin;

    bool occupied(const PixelRect& r) const { return grid.query(r); }

    void insert(const PixelRect& r) {
        if (variant == ParticleVariant::Original) {
            for (int y = r.y0; y <= r.y1; ++y)
                for (int x = r.x0; x <= r.x1; ++x)
                    grid.insert({x + 0.5, y + 0.5});
        } else {
            improvedRectParticles(r, wMin, hMin,
                                  [&](Particle p) { grid.insert(p); });
        }
    }
};

}  // namespace

std::vector<Particle> sampleOriginal(const Scene& scene) {
    return originalFromMarks(allMarks(scene), scene.areas, scene.width,
                             scene.height);
}

std::vector<Particle> sampleImproved(const Scene& scene) {
    Size minExt = minLabelExtent(scene.items);
    return improvedFromMarks(allMarks(scene), scene.areas, scene.width,
                             scene.height, minExt.w, minExt.h);
}

std::vector<Placement> placeLabelsParticle(const Scene& scene,
                                           const LabelConfig& config,
                                           ParticleVariant variant,
                                           const EngineOptions& options) {
    if (scene.width < 1 || scene.height < 1)
        throw std::invalid_argument("scene dimensions must be positive");
    int pad = resolvePadding(scene, config);
    Size minExt = minLabelExtent(scene.items);
    std::vector<const Mark*> avoid = detail::selectAvoidMarks(scene, config);

    std::vector<Particle> particles =
        variant == ParticleVariant::Original
            ? originalFromMarks(avoid, scene.areas, scene.width, scene.height)
            : improvedFromMarks(avoid, scene.areas, scene.width, scene.height,
                                minExt.w, minExt.h);

    // A cell the size of the largest label keeps every query within the
    // rect's own cells plus one ring of neighbors.
    int cellSize = 1;
    for (const LabelItem& item : scene.items) {
        if (item.areaRef >= 0) continue;
        cellSize = std::max({cellSize, item.labelSize.w, item.labelSize.h});
    }

    ParticleIndex index{
        ParticleGrid(cellSize, {static_cast<double>(-pad - 1),
                                static_cast<double>(-pad - 1)},
                     {static_cast<double>(scene.width + pad + 1),
                      static_cast<double>(scene.height + pad + 1)}),
        variant, minExt.w, minExt.h};
    for (const Particle& p : particles) index.grid.insert(p);

    return detail::runGreedyDriver(scene, config, pad, index, options);
}

}  // namespace placard
