#pragma once

#include <string>
#include <vector>

#include "placard/area.hpp"
#include "placard/greedy.hpp"
#include "placard/particle.hpp"

namespace placard {

enum class Engine { Bitmap, ParticleOriginal, ParticleImproved };

Engine engineFromName(const std::string& name);  // throws invalid_argument
const char* engineName(Engine e);

/// Full placement pipeline: the selected engine handles point/line/rect
/// items and the area labeler handles area items (against the labels the
/// engine already placed). Returns one placement per scene item, in item
/// order.
std::vector<Placement> placeLabels(const Scene& scene,
                                   const LabelConfig& config, Engine engine,
                                   const EngineOptions& options = {});

}  // namespace placard
