#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "placard/bench.hpp"
#include "placard/engine.hpp"
#include "placard/scene_io.hpp"

namespace {

std::string readFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void writeFile(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed for " + path);
}

std::vector<int> parseIntList(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(std::stoi(tok));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"placard: greedy chart label placement over occupancy bitmaps"};
    app.require_subcommand(1);

    std::string scenePath, outPath, svgPath, bitmapPath, logPath;
    std::string engineName = "bitmap";
    int wordBits = 64;

    CLI::App* label = app.add_subcommand("label", "place labels for a scene");
    label->add_option("--scene", scenePath, "scene JSON file")->required();
    label->add_option("--engine", engineName,
                      "bitmap, particle, or particle-improved");
    label->add_option("--out", outPath, "placements JSON output")->required();
    label->add_option("--svg", svgPath, "also render an SVG");
    label->add_option("--dump-bitmap", bitmapPath,
                      "write the final occupancy bitmap as PGM (bitmap engine)");
    label->add_option("--log", logPath, "placement event log (JSON lines)");
    label->add_option("--word-bits", wordBits, "bitmap word size")
        ->check(CLI::IsMember({4, 8, 16, 32, 64}));

    std::string benchEngines = "bitmap,particle,particle-improved";
    std::string benchWidths;
    int reps = 20, nPoints = 3320, nRoutes = 56;
    std::uint64_t seed = 1;

    CLI::App* bench =
        app.add_subcommand("bench", "run the synthetic map benchmark");
    bench->add_option("--engines", benchEngines, "comma-separated engines");
    bench->add_option("--widths", benchWidths, "comma-separated chart widths")
        ->required();
    bench->add_option("--reps", reps, "repetitions per cell");
    bench->add_option("--seed", seed, "scene generator seed");
    bench->add_option("--points", nPoints, "points in the synthetic map");
    bench->add_option("--routes", nRoutes, "routes in the synthetic map");
    bench->add_option("--out", outPath, "CSV report path")->required();

    CLI::App* dump =
        app.add_subcommand("dump", "rasterize the scene's avoid-marks to PGM");
    dump->add_option("--scene", scenePath, "scene JSON file")->required();
    dump->add_option("--out", outPath, "PGM output path")->required();
    dump->add_option("--word-bits", wordBits, "bitmap word size")
        ->check(CLI::IsMember({4, 8, 16, 32, 64}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help();
        return 2;
    }

    try {
        if (label->parsed()) {
            placard::SceneDocument doc = placard::parseScene(readFile(scenePath));
            placard::Engine engine = placard::engineFromName(engineName);
            placard::EngineOptions options;
            options.wordBits = wordBits;
            std::ofstream logStream;
            if (!logPath.empty()) {
                logStream.open(logPath);
                if (!logStream)
                    throw std::runtime_error("cannot write " + logPath);
                options.eventLog = &logStream;
            }
            placard::OccupancyBitmap captured(1, 1);
            if (!bitmapPath.empty()) {
                if (engine != placard::Engine::Bitmap)
                    throw std::runtime_error(
                        "--dump-bitmap requires --engine bitmap");
                options.captureBitmap = &captured;
            }
            auto placements =
                placard::placeLabels(doc.scene, doc.config, engine, options);
            writeFile(outPath, placard::placementsJson(placements));
            if (!svgPath.empty())
                writeFile(svgPath, placard::renderSvg(doc.scene, placements));
            if (!bitmapPath.empty()) writeFile(bitmapPath, captured.toPgm());
        } else if (bench->parsed()) {
            std::vector<placard::Engine> engines;
            std::stringstream ss(benchEngines);
            std::string tok;
            while (std::getline(ss, tok, ','))
                if (!tok.empty()) engines.push_back(placard::engineFromName(tok));
            std::vector<int> widths = parseIntList(benchWidths);
            if (engines.empty() || widths.empty())
                throw std::runtime_error("need at least one engine and width");
            placard::BenchReport report =
                placard::runBench(engines, widths, reps, seed, nPoints, nRoutes);
            writeFile(outPath, report.toCsv());
        } else if (dump->parsed()) {
            placard::SceneDocument doc = placard::parseScene(readFile(scenePath));
            writeFile(outPath,
                      placard::buildAvoidBitmap(doc.scene, doc.config, wordBits)
                          .toPgm());
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
