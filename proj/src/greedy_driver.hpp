#pragma once

// Internal machinery shared by the bitmap and particle engines: candidate
// generation, avoid-mark selection, and the one-pass greedy loop templated
// on the occupancy index.

#include <string>
#include <vector>

#include "placard/greedy.hpp"
#include "placard/scene.hpp"

namespace placard::detail {

struct CandidateSet {
    std::vector<PixelRect> rects;
    std::vector<CandidatePosition> anchors;  // parallel to rects
};

std::string resolveMarkType(const Scene& scene, const LabelConfig& config,
                            const LabelItem& item);

CandidateSet candidateSetForItem(const Scene& scene, const LabelConfig& config,
                                 const LabelItem& item);

/// Marks the labels must avoid: every mark of an avoided group, plus the
/// items' base marks when avoidBaseMark is set.
std::vector<const Mark*> selectAvoidMarks(const Scene& scene,
                                          const LabelConfig& config);

void logEvent(std::ostream* log, const std::string& itemId, int candidate,
              const char* result);

/// The greedy loop. `index` provides occupied(PixelRect) and
/// insert(PixelRect). Returns one placement per scene item (area items are
/// left omitted untouched).
template <class Index>
std::vector<Placement> runGreedyDriver(const Scene& scene,
                                       const LabelConfig& config, int pad,
                                       Index& index,
                                       const EngineOptions& options) {
    std::vector<Placement> placements(scene.items.size());
    for (std::size_t i = 0; i < scene.items.size(); ++i)
        placements[i].itemId = scene.items[i].id;

    PixelRect bounds{-pad, -pad, scene.width - 1 + pad, scene.height - 1 + pad};
    for (int idx : placementOrder(scene, config)) {
        const LabelItem& item = scene.items[static_cast<std::size_t>(idx)];
        if (item.areaRef >= 0) continue;
        Placement& out = placements[static_cast<std::size_t>(idx)];

        if (item.labelSize.w > bounds.width() ||
            item.labelSize.h > bounds.height()) {
            logEvent(options.eventLog, item.id, -1, "too-large");
            continue;
        }
        CandidateSet cs = candidateSetForItem(scene, config, item);
        bool placed = false;
        for (std::size_t k = 0; k < cs.rects.size(); ++k) {
            const PixelRect& r = cs.rects[k];
            if (!bounds.containsRect(r)) {
                logEvent(options.eventLog, item.id, static_cast<int>(k),
                         "out-of-bounds");
                continue;
            }
            if (index.occupied(r)) {
                logEvent(options.eventLog, item.id, static_cast<int>(k),
                         "occupied");
                continue;
            }
            index.insert(r);
            out.status = PlacementStatus::Placed;
            out.rect = r;
            out.anchorUsed = cs.anchors[k];
            logEvent(options.eventLog, item.id, static_cast<int>(k), "placed");
            placed = true;
            break;
        }
        if (!placed) logEvent(options.eventLog, item.id, -1, "omitted");
    }
    return placements;
}

}  // namespace placard::detail
