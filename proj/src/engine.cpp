#include "placard/engine.hpp"

#include <stdexcept>

namespace placard {

Engine engineFromName(const std::string& name) {
    if (name == "bitmap") return Engine::Bitmap;
    if (name == "particle") return Engine::ParticleOriginal;
    if (name == "particle-improved") return Engine::ParticleImproved;
    throw std::invalid_argument("unknown engine: " + name);
}

const char* engineName(Engine e) {
    switch (e) {
        case Engine::Bitmap: return "bitmap";
        case Engine::ParticleOriginal: return "particle";
        case Engine::ParticleImproved: return "particle-improved";
    }
    return "bitmap";
}

std::vector<Placement> placeLabels(const Scene& scene,
                                   const LabelConfig& config, Engine engine,
                                   const EngineOptions& options) {
    std::vector<Placement> placements;
    switch (engine) {
        case Engine::Bitmap:
            placements = placeLabelsGreedy(scene, config, options);
            break;
        case Engine::ParticleOriginal:
            placements = placeLabelsParticle(scene, config,
                                             ParticleVariant::Original, options);
            break;
        case Engine::ParticleImproved:
            placements = placeLabelsParticle(scene, config,
                                             ParticleVariant::Improved, options);
            break;
    }

    bool anyArea = false;
    for (const LabelItem& item : scene.items)
        if (item.areaRef >= 0) anyArea = true;
    if (anyArea) {
        std::vector<PixelRect> placedRects;
        for (std::size_t i = 0; i < placements.size(); ++i)
            if (scene.items[i].areaRef < 0 &&
                placements[i].status == PlacementStatus::Placed)
                placedRects.push_back(placements[i].rect);
        std::vector<Placement> areaPlacements =
            placeAreaLabels(scene, config, placedRects);
        for (std::size_t i = 0; i < placements.size(); ++i)
            if (scene.items[i].areaRef >= 0) placements[i] = areaPlacements[i];
    }
    return placements;
}

}  // namespace placard
