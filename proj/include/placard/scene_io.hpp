#pragma once

#include <string>
#include <vector>

#include "placard/greedy.hpp"
#include "placard/scene.hpp"

namespace placard {

struct SceneDocument {
    Scene scene;
    LabelConfig config;
};

/// Parses a scene document. Unknown fields and schema violations raise
/// std::runtime_error with a JSON-path diagnostic ("$.config.method: ...").
/// Label sizes are taken from an explicit "size" or computed from the text
/// with the synthetic metric width = codepoints * charWidthFactor * fontSize,
/// height = fontSize.
SceneDocument parseScene(const std::string& jsonText);

/// Serializes the document back to schema JSON (normalized: computed label
/// sizes and derived bounding boxes are materialized).
std::string emitScene(const SceneDocument& doc);

std::string placementsJson(const std::vector<Placement>& placements);

/// SVG 1.1 rendering of the marks plus the placed labels, one group per
/// mark group. Label rects match placement rects coordinate for coordinate.
std::string renderSvg(const Scene& scene,
                      const std::vector<Placement>& placements);

}  // namespace placard
