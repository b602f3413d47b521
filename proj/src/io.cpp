#include "folia/io.hpp"

#include <fstream>

#include <json.hpp>

namespace folia {

using nlohmann::json;

CircleCoord parse_coord(Model m, const std::string& s) {
    if (m == Model::Disk) return {BoundaryLine::Bottom, parse_rat(s)};
    if (s.size() < 3 || s[1] != ':' || (s[0] != 'B' && s[0] != 'T'))
        fail("BadFraction", "strip coordinate needs a B:/T: tag: " + s);
    return {s[0] == 'B' ? BoundaryLine::Bottom : BoundaryLine::Top, parse_rat(s.substr(2))};
}

std::string format_coord(Model m, const CircleCoord& c) {
    if (m == Model::Disk) return format_rat(c.value);
    return (c.line == BoundaryLine::Bottom ? "B:" : "T:") + format_rat(c.value);
}

namespace {

json load_json(const std::string& file) {
    std::ifstream in(file);
    if (!in) fail("BadFile", "cannot open " + file);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        fail("BadFile", file + ": " + e.what());
    }
    return j;
}

}  // namespace

Chart load_chart(const std::string& file) {
    json j = load_json(file);
    std::string model_name = j.value("model", "disk");
    Model m;
    if (model_name == "disk")
        m = Model::Disk;
    else if (model_name == "annulus")
        m = Model::AnnulusCover;
    else
        fail("BadFile", "unknown model " + model_name);
    long window = j.value("window", 16L);
    std::vector<Chord> chords;
    for (const auto& rec : j.at("chords")) {
        Chord c;
        c.id = {rec.at("id").get<std::string>(), 0};
        c.tail = parse_coord(m, rec.at("tail").get<std::string>());
        c.head = parse_coord(m, rec.at("head").get<std::string>());
        chords.push_back(std::move(c));
    }
    return build_chart(chords, m, window);
}

PathFile load_path(const std::string& file) {
    json j = load_json(file);
    PathFile p;
    p.chart_name = j.value("chart", "");
    for (const auto& id : j.at("leaves")) p.leaves.push_back(parse_chord_id(id.get<std::string>()));
    if (j.contains("shift")) p.shift = j.at("shift").get<long>();
    if (j.contains("window")) p.window = j.at("window").get<long>();
    return p;
}

CrossingDiagram load_diagram(const std::string& file) {
    json j = load_json(file);
    long r = j.at("r").get<long>();
    std::vector<size_t> sigma = j.at("sigma").get<std::vector<size_t>>();
    std::vector<CrossingPair> pairs;
    for (const auto& rec : j.at("pairs")) {
        CrossingPair p;
        p.i = rec.at("i").get<size_t>();
        std::string kind = rec.at("kind").get<std::string>();
        size_t partner = p.i < sigma.size() && p.i >= 1 ? sigma[p.i - 1] : 0;
        if (kind == "non") {
            p.kind = PairKind::NonTransverse;
        } else if (kind == "pos@i") {
            p.kind = PairKind::Transverse;
            p.positive_encounter = p.i;
        } else if (kind == "pos@j") {
            p.kind = PairKind::Transverse;
            p.positive_encounter = partner;
        } else {
            fail("BadFile", "unknown pair kind " + kind);
        }
        if (rec.contains("strong")) p.strong = rec.at("strong").get<std::vector<size_t>>();
        pairs.push_back(std::move(p));
    }
    return make_diagram(r, sigma, std::move(pairs));
}

}  // namespace folia
