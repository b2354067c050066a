#pragma once

#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "placard/scene.hpp"

namespace placard {

enum class AreaMethod { FloodFill, ReducedSearch, Naive };
enum class SortOrder { Input, Priority, PriorityDesc };

AreaMethod areaMethodFromName(const std::string& name);
const char* areaMethodName(AreaMethod m);

/// Placement configuration. Unset optionals fall back to per-mark-type
/// defaults when the engine resolves the config against a scene.
struct LabelConfig {
    std::vector<CandidatePosition> positions;  // empty: markType defaults
    std::optional<std::string> markType;       // bar|line|rect|circle|point|square|area
    bool avoidBaseMark = true;
    std::vector<std::string> avoid;  // mark groups to avoid; "all" = every group
    LineAnchor lineAnchor = LineAnchor::End;
    AreaMethod method = AreaMethod::ReducedSearch;
    std::optional<double> padding;  // px labels may extend past the chart
    SortOrder sort = SortOrder::Input;
    std::optional<bool> barVertical;  // unset: inferred from the bar's longer axis
};

enum class PlacementStatus { Placed, Omitted };

struct Placement {
    std::string itemId;
    PlacementStatus status = PlacementStatus::Omitted;
    PixelRect rect{};
    CandidatePosition anchorUsed{};
};

struct EngineOptions {
    int wordBits = 64;                 // bitmap engine storage word size
    std::ostream* eventLog = nullptr;  // JSON-lines trace of candidate tries
    /// When set, the bitmap engine copies its final occupancy here.
    OccupancyBitmap* captureBitmap = nullptr;
};

/// Effective padding for a scene: the configured value, or the line-chart
/// default (20% of chart width for vertical lines, 20% of height for
/// horizontal ones), or 0.
int resolvePadding(const Scene& scene, const LabelConfig& config);

/// Candidate rects for one non-area item under this config, most preferred
/// first. Exposed for audits; the engines use the same sequence.
std::vector<PixelRect> candidateRectsForItem(const Scene& scene,
                                             const LabelConfig& config,
                                             const LabelItem& item);

/// Item indices in the order the engine will process them.
std::vector<int> placementOrder(const Scene& scene, const LabelConfig& config);

/// Minimum label height/width across the items being placed (1 if none).
Size minLabelExtent(const std::vector<LabelItem>& items);

/// One-pass greedy placement over an occupancy bitmap: rasterize the marks
/// to avoid, then give every item the first candidate position whose rect is
/// completely free, marking each placed label. Items whose base is an area
/// are skipped here (see placeAreaLabels).
std::vector<Placement> placeLabelsGreedy(const Scene& scene,
                                         const LabelConfig& config,
                                         const EngineOptions& options = {});

/// The bitmap a greedy run starts from: the chart expanded by the resolved
/// padding, with every avoided mark rasterized and no labels placed.
OccupancyBitmap buildAvoidBitmap(const Scene& scene, const LabelConfig& config,
                                 int wordBits = 64);

}  // namespace placard
