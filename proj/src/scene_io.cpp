#include "placard/scene_io.hpp"

#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace placard {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
    throw std::runtime_error("scene parse error at " + path + ": " + msg);
}

void requireObject(const json& v, const std::string& path) {
    if (!v.is_object()) fail(path, "expected an object");
}

void rejectUnknown(const json& obj, const std::string& path,
                   std::initializer_list<const char*> allowed) {
    for (const auto& el : obj.items()) {
        bool known = false;
        for (const char* a : allowed)
            if (el.key() == a) known = true;
        if (!known) fail(path + "." + el.key(), "unknown field");
    }
}

double getNumber(const json& obj, const std::string& path, const char* key,
                 bool required, double fallback = 0) {
    if (!obj.contains(key)) {
        if (required) fail(path + "." + key, "missing required field");
        return fallback;
    }
    if (!obj[key].is_number()) fail(path + "." + key, "expected a number");
    return obj[key].get<double>();
}

bool getBool(const json& obj, const std::string& path, const char* key,
             bool fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj[key].is_boolean()) fail(path + "." + key, "expected a boolean");
    return obj[key].get<bool>();
}

std::string getString(const json& obj, const std::string& path, const char* key,
                      bool required, const std::string& fallback = {}) {
    if (!obj.contains(key)) {
        if (required) fail(path + "." + key, "missing required field");
        return fallback;
    }
    if (!obj[key].is_string()) fail(path + "." + key, "expected a string");
    return obj[key].get<std::string>();
}

Point getPoint(const json& v, const std::string& path) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() ||
        !v[1].is_number())
        fail(path, "expected [x, y]");
    return {v[0].get<double>(), v[1].get<double>()};
}

std::size_t codepointCount(const std::string& text) {
    std::size_t n = 0;
    for (unsigned char c : text)
        if ((c & 0xC0) != 0x80) ++n;
    return n;
}

Size computedLabelSize(const std::string& text, double fontSize,
                       double charWidthFactor) {
    double w = static_cast<double>(codepointCount(text)) * charWidthFactor *
               fontSize;
    Size s{static_cast<int>(std::ceil(w - 1e-9)),
           static_cast<int>(std::ceil(fontSize - 1e-9))};
    if (s.w < 1) s.w = 1;
    if (s.h < 1) s.h = 1;
    return s;
}

Mark parseMark(const json& v, const std::string& path, std::size_t areaCount) {
    requireObject(v, path);
    std::string kind = getString(v, path, "kind", true);
    Mark m;
    m.group = getString(v, path, "group", false, "marks");
    m.opacity = getNumber(v, path, "opacity", false, 1.0);
    if (m.opacity < 0 || m.opacity > 1)
        fail(path + ".opacity", "must be within [0, 1]");

    if (kind == "point") {
        rejectUnknown(v, path, {"kind", "group", "opacity", "x", "y", "radius"});
        m.kind = Mark::Kind::Point;
        m.center = {getNumber(v, path, "x", true),
                    getNumber(v, path, "y", true)};
        m.radius = getNumber(v, path, "radius", false, 0.0);
        if (m.radius < 0) fail(path + ".radius", "must be >= 0");
    } else if (kind == "polyline") {
        rejectUnknown(v, path,
                      {"kind", "group", "opacity", "points", "strokeWidth"});
        m.kind = Mark::Kind::Polyline;
        if (!v.contains("points") || !v["points"].is_array())
            fail(path + ".points", "expected an array of [x, y] pairs");
        for (std::size_t i = 0; i < v["points"].size(); ++i)
            m.vertices.push_back(getPoint(
                v["points"][i], path + ".points[" + std::to_string(i) + "]"));
        if (m.vertices.size() < 2)
            fail(path + ".points", "polyline needs at least 2 vertices");
        m.strokeWidth = getNumber(v, path, "strokeWidth", false, 1.0);
        if (m.strokeWidth <= 0) fail(path + ".strokeWidth", "must be > 0");
    } else if (kind == "rect" || kind == "textBox") {
        rejectUnknown(v, path, {"kind", "group", "opacity", "x0", "y0", "x1",
                                "y1", "filled"});
        m.kind = kind == "rect" ? Mark::Kind::Rect : Mark::Kind::TextBox;
        m.rectMin = {getNumber(v, path, "x0", true),
                     getNumber(v, path, "y0", true)};
        m.rectMax = {getNumber(v, path, "x1", true),
                     getNumber(v, path, "y1", true)};
        if (m.rectMax.x < m.rectMin.x || m.rectMax.y < m.rectMin.y)
            fail(path, "rect corners must satisfy x0 <= x1 and y0 <= y1");
        m.filled = getBool(v, path, "filled", true);
    } else if (kind == "areaBoundary") {
        rejectUnknown(v, path, {"kind", "group", "opacity", "area"});
        m.kind = Mark::Kind::AreaBoundary;
        m.areaIndex =
            static_cast<int>(getNumber(v, path, "area", true));
        if (m.areaIndex < 0 || m.areaIndex >= static_cast<int>(areaCount))
            fail(path + ".area", "area index out of range");
    } else {
        fail(path + ".kind", "unknown mark kind: " + kind);
    }
    return m;
}

AreaSeries parseArea(const json& v, const std::string& path) {
    requireObject(v, path);
    rejectUnknown(v, path, {"pairs"});
    if (!v.contains("pairs") || !v["pairs"].is_array())
        fail(path + ".pairs", "expected an array of [x, yLower, yUpper]");
    AreaSeries area;
    for (std::size_t i = 0; i < v["pairs"].size(); ++i) {
        const json& p = v["pairs"][i];
        std::string ppath = path + ".pairs[" + std::to_string(i) + "]";
        if (!p.is_array() || p.size() != 3 || !p[0].is_number() ||
            !p[1].is_number() || !p[2].is_number())
            fail(ppath, "expected [x, yLower, yUpper]");
        area.pairs.push_back(
            {p[0].get<double>(), p[1].get<double>(), p[2].get<double>()});
    }
    if (!area.valid())
        fail(path + ".pairs",
             "pairs need strictly increasing x and yLower <= yUpper");
    return area;
}

std::vector<CandidatePosition> parsePositions(const json& cfg,
                                              const std::string& path) {
    std::vector<CandidatePosition> positions;
    if (cfg.contains("positions")) {
        if (cfg.contains("anchor") || cfg.contains("offset"))
            fail(path, "give either positions or anchor/offset lists, not both");
        if (!cfg["positions"].is_array())
            fail(path + ".positions", "expected an array");
        for (std::size_t i = 0; i < cfg["positions"].size(); ++i) {
            const json& p = cfg["positions"][i];
            std::string ppath = path + ".positions[" + std::to_string(i) + "]";
            requireObject(p, ppath);
            rejectUnknown(p, ppath, {"anchor", "offset"});
            CandidatePosition cp;
            try {
                cp.anchor = anchorFromName(getString(p, ppath, "anchor", true));
            } catch (const std::invalid_argument& e) {
                fail(ppath + ".anchor", e.what());
            }
            cp.offset = getNumber(p, ppath, "offset", false, 0.0);
            if (cp.offset < 0) fail(ppath + ".offset", "must be >= 0");
            positions.push_back(cp);
        }
        return positions;
    }
    if (!cfg.contains("anchor")) return positions;

    // Vega-style parallel lists, zipped into pairs.
    const json& anchors = cfg["anchor"];
    if (!anchors.is_array()) fail(path + ".anchor", "expected an array");
    std::vector<double> offsets;
    if (cfg.contains("offset")) {
        const json& off = cfg["offset"];
        if (off.is_number()) {
            offsets.assign(anchors.size(), off.get<double>());
        } else if (off.is_array()) {
            if (off.size() != anchors.size())
                fail(path + ".offset", "length must match anchor list");
            for (const json& o : off) {
                if (!o.is_number()) fail(path + ".offset", "expected numbers");
                offsets.push_back(o.get<double>());
            }
        } else {
            fail(path + ".offset", "expected a number or an array");
        }
    } else {
        offsets.assign(anchors.size(), 0.0);
    }
    for (std::size_t i = 0; i < anchors.size(); ++i) {
        std::string apath = path + ".anchor[" + std::to_string(i) + "]";
        if (!anchors[i].is_string()) fail(apath, "expected a string");
        CandidatePosition cp;
        try {
            cp.anchor = anchorFromName(anchors[i].get<std::string>());
        } catch (const std::invalid_argument& e) {
            fail(apath, e.what());
        }
        cp.offset = offsets[i];
        if (cp.offset < 0) fail(path + ".offset", "must be >= 0");
        positions.push_back(cp);
    }
    return positions;
}

LabelConfig parseConfig(const json& cfg, const std::string& path) {
    requireObject(cfg, path);
    rejectUnknown(cfg, path,
                  {"positions", "anchor", "offset", "markType", "avoidBaseMark",
                   "avoid", "lineAnchor", "method", "padding", "sort",
                   "barOrient"});
    LabelConfig config;
    config.positions = parsePositions(cfg, path);
    if (cfg.contains("markType")) {
        std::string mt = getString(cfg, path, "markType", false);
        if (mt != "bar" && mt != "line" && mt != "rect" && mt != "circle" &&
            mt != "point" && mt != "square" && mt != "area")
            fail(path + ".markType", "unknown markType: " + mt);
        config.markType = mt;
    }
    config.avoidBaseMark = getBool(cfg, path, "avoidBaseMark", true);
    if (cfg.contains("avoid")) {
        if (!cfg["avoid"].is_array())
            fail(path + ".avoid", "expected an array of group names");
        for (const json& g : cfg["avoid"]) {
            if (!g.is_string()) fail(path + ".avoid", "expected strings");
            config.avoid.push_back(g.get<std::string>());
        }
    }
    std::string la = getString(cfg, path, "lineAnchor", false, "end");
    if (la == "begin")
        config.lineAnchor = LineAnchor::Begin;
    else if (la == "end")
        config.lineAnchor = LineAnchor::End;
    else
        fail(path + ".lineAnchor", "must be begin or end");
    if (cfg.contains("method")) {
        try {
            config.method =
                areaMethodFromName(getString(cfg, path, "method", false));
        } catch (const std::invalid_argument& e) {
            fail(path + ".method", e.what());
        }
    }
    if (cfg.contains("padding")) {
        double p = getNumber(cfg, path, "padding", false, 0.0);
        if (p < 0) fail(path + ".padding", "must be >= 0");
        config.padding = p;
    }
    std::string sort = getString(cfg, path, "sort", false, "input");
    if (sort == "input")
        config.sort = SortOrder::Input;
    else if (sort == "priority")
        config.sort = SortOrder::Priority;
    else if (sort == "priority-desc")
        config.sort = SortOrder::PriorityDesc;
    else
        fail(path + ".sort", "must be input, priority or priority-desc");
    if (cfg.contains("barOrient")) {
        std::string o = getString(cfg, path, "barOrient", false);
        if (o == "vertical")
            config.barVertical = true;
        else if (o == "horizontal")
            config.barVertical = false;
        else
            fail(path + ".barOrient", "must be vertical or horizontal");
    }
    return config;
}

}  // namespace

SceneDocument parseScene(const std::string& jsonText) {
    json doc;
    try {
        doc = json::parse(jsonText);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("scene parse error: ") + e.what());
    }
    requireObject(doc, "$");
    rejectUnknown(doc, "$",
                  {"width", "height", "fontMetric", "marks", "items", "areas",
                   "config"});

    SceneDocument out;
    Scene& scene = out.scene;
    scene.width = static_cast<int>(getNumber(doc, "$", "width", true));
    scene.height = static_cast<int>(getNumber(doc, "$", "height", true));
    if (scene.width < 1 || scene.height < 1)
        fail("$.width", "chart dimensions must be >= 1");

    if (doc.contains("fontMetric")) {
        requireObject(doc["fontMetric"], "$.fontMetric");
        rejectUnknown(doc["fontMetric"], "$.fontMetric", {"charWidthFactor"});
        scene.fontMetric.charWidthFactor =
            getNumber(doc["fontMetric"], "$.fontMetric", "charWidthFactor",
                      false, 0.6);
        if (scene.fontMetric.charWidthFactor <= 0)
            fail("$.fontMetric.charWidthFactor", "must be > 0");
    }

    if (doc.contains("areas")) {
        if (!doc["areas"].is_array()) fail("$.areas", "expected an array");
        for (std::size_t i = 0; i < doc["areas"].size(); ++i)
            scene.areas.push_back(parseArea(
                doc["areas"][i], "$.areas[" + std::to_string(i) + "]"));
    }
    if (doc.contains("marks")) {
        if (!doc["marks"].is_array()) fail("$.marks", "expected an array");
        for (std::size_t i = 0; i < doc["marks"].size(); ++i)
            scene.marks.push_back(parseMark(doc["marks"][i],
                                            "$.marks[" + std::to_string(i) + "]",
                                            scene.areas.size()));
    }
    if (doc.contains("items")) {
        if (!doc["items"].is_array()) fail("$.items", "expected an array");
        for (std::size_t i = 0; i < doc["items"].size(); ++i) {
            const json& v = doc["items"][i];
            std::string path = "$.items[" + std::to_string(i) + "]";
            requireObject(v, path);
            rejectUnknown(v, path, {"id", "text", "fontSize", "size", "mark",
                                    "area", "bbox", "priority"});
            LabelItem item;
            item.id = getString(v, path, "id", false, std::to_string(i));
            item.text = getString(v, path, "text", true);
            item.fontSize = getNumber(v, path, "fontSize", false, 10.0);
            if (item.fontSize <= 0) fail(path + ".fontSize", "must be > 0");
            item.priority = getNumber(v, path, "priority", false, 0.0);

            if (v.contains("mark")) {
                item.markRef = static_cast<int>(getNumber(v, path, "mark", true));
                if (item.markRef < 0 ||
                    item.markRef >= static_cast<int>(scene.marks.size()))
                    fail(path + ".mark", "mark index out of range");
            }
            if (v.contains("area")) {
                item.areaRef = static_cast<int>(getNumber(v, path, "area", true));
                if (item.areaRef < 0 ||
                    item.areaRef >= static_cast<int>(scene.areas.size()))
                    fail(path + ".area", "area index out of range");
            }
            if (v.contains("size")) {
                const json& s = v["size"];
                if (!s.is_array() || s.size() != 2 || !s[0].is_number() ||
                    !s[1].is_number())
                    fail(path + ".size", "expected [width, height]");
                item.labelSize = {static_cast<int>(s[0].get<double>()),
                                  static_cast<int>(s[1].get<double>())};
                if (item.labelSize.w < 1 || item.labelSize.h < 1)
                    fail(path + ".size", "label size must be positive");
            } else {
                item.labelSize = computedLabelSize(
                    item.text, item.fontSize, scene.fontMetric.charWidthFactor);
            }
            if (v.contains("bbox")) {
                const json& b = v["bbox"];
                if (!b.is_array() || b.size() != 4)
                    fail(path + ".bbox", "expected [x0, y0, x1, y1]");
                for (const json& c : b)
                    if (!c.is_number()) fail(path + ".bbox", "expected numbers");
                item.baseBBox = {static_cast<int>(b[0].get<double>()),
                                 static_cast<int>(b[1].get<double>()),
                                 static_cast<int>(b[2].get<double>()),
                                 static_cast<int>(b[3].get<double>())};
            } else if (item.markRef >= 0) {
                item.baseBBox = markPixelBBox(
                    scene.marks[static_cast<std::size_t>(item.markRef)],
                    scene.areas);
            } else if (item.areaRef < 0) {
                fail(path, "item must reference a mark, an area, or give a bbox");
            }
            scene.items.push_back(std::move(item));
        }
    }

    if (doc.contains("config"))
        out.config = parseConfig(doc["config"], "$.config");
    return out;
}

std::string emitScene(const SceneDocument& doc) {
    json out;
    const Scene& scene = doc.scene;
    out["width"] = scene.width;
    out["height"] = scene.height;
    out["fontMetric"] = {{"charWidthFactor", scene.fontMetric.charWidthFactor}};

    out["areas"] = json::array();
    for (const AreaSeries& a : scene.areas) {
        json pairs = json::array();
        for (const auto& p : a.pairs)
            pairs.push_back({p.x, p.yLower, p.yUpper});
        out["areas"].push_back({{"pairs", pairs}});
    }

    out["marks"] = json::array();
    for (const Mark& m : scene.marks) {
        json v;
        v["group"] = m.group;
        v["opacity"] = m.opacity;
        switch (m.kind) {
            case Mark::Kind::Point:
                v["kind"] = "point";
                v["x"] = m.center.x;
                v["y"] = m.center.y;
                v["radius"] = m.radius;
                break;
            case Mark::Kind::Polyline: {
                v["kind"] = "polyline";
                json pts = json::array();
                for (Point p : m.vertices) pts.push_back({p.x, p.y});
                v["points"] = pts;
                v["strokeWidth"] = m.strokeWidth;
                break;
            }
            case Mark::Kind::Rect:
            case Mark::Kind::TextBox:
                v["kind"] = m.kind == Mark::Kind::Rect ? "rect" : "textBox";
                v["x0"] = m.rectMin.x;
                v["y0"] = m.rectMin.y;
                v["x1"] = m.rectMax.x;
                v["y1"] = m.rectMax.y;
                if (m.kind == Mark::Kind::Rect) v["filled"] = m.filled;
                break;
            case Mark::Kind::AreaBoundary:
                v["kind"] = "areaBoundary";
                v["area"] = m.areaIndex;
                break;
        }
        out["marks"].push_back(v);
    }

    out["items"] = json::array();
    for (const LabelItem& item : scene.items) {
        json v;
        v["id"] = item.id;
        v["text"] = item.text;
        v["fontSize"] = item.fontSize;
        v["size"] = {item.labelSize.w, item.labelSize.h};
        v["priority"] = item.priority;
        if (item.markRef >= 0) v["mark"] = item.markRef;
        if (item.areaRef >= 0) v["area"] = item.areaRef;
        if (item.markRef >= 0 || item.areaRef < 0)
            v["bbox"] = {item.baseBBox.x0, item.baseBBox.y0, item.baseBBox.x1,
                         item.baseBBox.y1};
        out["items"].push_back(v);
    }

    const LabelConfig& c = doc.config;
    json cfg;
    cfg["positions"] = json::array();
    for (const CandidatePosition& p : c.positions)
        cfg["positions"].push_back(
            {{"anchor", anchorName(p.anchor)}, {"offset", p.offset}});
    if (c.markType) cfg["markType"] = *c.markType;
    cfg["avoidBaseMark"] = c.avoidBaseMark;
    cfg["avoid"] = c.avoid;
    cfg["lineAnchor"] = c.lineAnchor == LineAnchor::Begin ? "begin" : "end";
    cfg["method"] = areaMethodName(c.method);
    if (c.padding) cfg["padding"] = *c.padding;
    cfg["sort"] = c.sort == SortOrder::Input
                      ? "input"
                      : (c.sort == SortOrder::Priority ? "priority"
                                                       : "priority-desc");
    if (c.barVertical)
        cfg["barOrient"] = *c.barVertical ? "vertical" : "horizontal";
    out["config"] = cfg;
    return out.dump(2) + "\n";
}

std::string placementsJson(const std::vector<Placement>& placements) {
    json out;
    out["placements"] = json::array();
    for (const Placement& p : placements) {
        json v;
        v["id"] = p.itemId;
        if (p.status == PlacementStatus::Placed) {
            v["status"] = "placed";
            v["rect"] = {p.rect.x0, p.rect.y0, p.rect.x1, p.rect.y1};
            v["anchor"] = {{"anchor", anchorName(p.anchorUsed.anchor)},
                           {"offset", p.anchorUsed.offset}};
        } else {
            v["status"] = "omitted";
        }
        out["placements"].push_back(v);
    }
    return out.dump(2) + "\n";
}

namespace {

std::string xmlEscape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

std::string num(double v) {
    std::ostringstream s;
    s << v;
    return s.str();
}

}  // namespace

std::string renderSvg(const Scene& scene,
                      const std::vector<Placement>& placements) {
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << scene.width
        << "\" height=\"" << scene.height << "\" viewBox=\"0 0 " << scene.width
        << ' ' << scene.height << "\">\n";

    // One group per mark group, in order of first appearance.
    std::vector<std::string> groupOrder;
    std::map<std::string, std::vector<const Mark*>> byGroup;
    for (const Mark& m : scene.marks) {
        if (byGroup.find(m.group) == byGroup.end()) groupOrder.push_back(m.group);
        byGroup[m.group].push_back(&m);
    }
    for (const std::string& g : groupOrder) {
        svg << "  <g class=\"marks\" data-group=\"" << xmlEscape(g) << "\">\n";
        for (const Mark* m : byGroup[g]) {
            if (m->opacity <= 0) continue;
            switch (m->kind) {
                case Mark::Kind::Point:
                    svg << "    <circle cx=\"" << num(m->center.x) << "\" cy=\""
                        << num(m->center.y) << "\" r=\""
                        << num(std::max(m->radius, 0.5))
                        << "\" fill=\"#555555\"/>\n";
                    break;
                case Mark::Kind::Polyline: {
                    svg << "    <polyline fill=\"none\" stroke=\"#888888\" "
                           "stroke-width=\""
                        << num(m->strokeWidth) << "\" points=\"";
                    for (std::size_t i = 0; i < m->vertices.size(); ++i) {
                        if (i) svg << ' ';
                        svg << num(m->vertices[i].x) << ','
                            << num(m->vertices[i].y);
                    }
                    svg << "\"/>\n";
                    break;
                }
                case Mark::Kind::Rect:
                case Mark::Kind::TextBox:
                    svg << "    <rect x=\"" << num(m->rectMin.x) << "\" y=\""
                        << num(m->rectMin.y) << "\" width=\""
                        << num(m->rectMax.x - m->rectMin.x) << "\" height=\""
                        << num(m->rectMax.y - m->rectMin.y) << "\" fill=\""
                        << (m->kind == Mark::Kind::TextBox ? "#cc333322"
                                                           : "#99999944")
                        << "\" stroke=\"#666666\"/>\n";
                    break;
                case Mark::Kind::AreaBoundary: {
                    if (m->areaIndex < 0 ||
                        m->areaIndex >= static_cast<int>(scene.areas.size()))
                        break;
                    const AreaSeries& a =
                        scene.areas[static_cast<std::size_t>(m->areaIndex)];
                    for (int side = 0; side < 2; ++side) {
                        svg << "    <polyline fill=\"none\" "
                               "stroke=\"#777777\" stroke-width=\"1\" "
                               "points=\"";
                        for (std::size_t i = 0; i < a.pairs.size(); ++i) {
                            if (i) svg << ' ';
                            svg << num(a.pairs[i].x) << ','
                                << num(side == 0 ? a.pairs[i].yLower
                                                 : a.pairs[i].yUpper);
                        }
                        svg << "\"/>\n";
                    }
                    break;
                }
            }
        }
        svg << "  </g>\n";
    }

    svg << "  <g class=\"labels\">\n";
    for (std::size_t i = 0; i < placements.size(); ++i) {
        const Placement& p = placements[i];
        if (p.status != PlacementStatus::Placed) continue;
        const std::string text =
            i < scene.items.size() ? scene.items[i].text : p.itemId;
        svg << "    <rect x=\"" << p.rect.x0 << "\" y=\"" << p.rect.y0
            << "\" width=\"" << p.rect.width() << "\" height=\""
            << p.rect.height() << "\" fill=\"none\" stroke=\"#008888\"/>\n";
        svg << "    <text x=\"" << p.rect.x0 << "\" y=\"" << p.rect.y1
            << "\" font-size=\"" << p.rect.height()
            << "\" font-family=\"monospace\" fill=\"#006666\">"
            << xmlEscape(text) << "</text>\n";
    }
    svg << "  </g>\n</svg>\n";
    return svg.str();
}

}  // namespace placard
