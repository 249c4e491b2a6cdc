#include "wilsonline/json_io.hpp"

#include <nlohmann/json.hpp>

namespace wilsonline {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json rat_json(const Rat& q) { return rat_to_string(q); }

Rat rat_from_json(const ordered_json& j) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    return rat_from_string(j.get<std::string>());
}

ordered_json matrix_json(const RatMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(rat_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

RatMatrix matrix_from(const ordered_json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix JSON: expected non-empty array");
    int rows = static_cast<int>(j.size());
    int cols = static_cast<int>(j[0].size());
    RatMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(j[i].size()) != cols) throw std::invalid_argument("matrix JSON: ragged rows");
        for (int c = 0; c < cols; ++c) m.at(i, c) = rat_from_json(j[i][c]);
    }
    return m;
}

} // namespace

std::string seed_to_json(const Seed& seed) {
    ordered_json j;
    j["n"] = seed.n;
    j["m"] = seed.m;
    ordered_json eps = ordered_json::array();
    for (const auto& row : seed.eps) eps.push_back(row);
    j["epsilon"] = std::move(eps);
    j["labels"] = seed.labels;
    ordered_json vars = ordered_json::array();
    for (const auto& v : seed.vars) vars.push_back(v.to_string());
    j["variables"] = std::move(vars);
    if (!seed.history.empty()) {
        ordered_json h = ordered_json::array();
        for (int k : seed.history) h.push_back(k + 1);  // 1-based on the wire
        j["history"] = std::move(h);
    }
    return j.dump(2) + "\n";
}

Seed seed_from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    Seed s;
    s.n = j.at("n").get<int>();
    s.m = j.at("m").get<int>();
    for (const auto& row : j.at("epsilon")) s.eps.push_back(row.get<std::vector<int>>());
    s.labels = j.at("labels").get<std::vector<std::string>>();
    for (const auto& v : j.at("variables")) s.vars.push_back(LaurentPoly::parse(v.get<std::string>(), s.n));
    if (j.contains("history"))
        for (const auto& k : j.at("history")) s.history.push_back(k.get<int>() - 1);
    s.validate();
    return s;
}

std::string matrix_to_json(const RatMatrix& m) { return matrix_json(m).dump(2) + "\n"; }

RatMatrix matrix_from_json(const std::string& text) {
    return matrix_from(ordered_json::parse(text));
}

std::string config_to_json(const QuadConfig& cfg) {
    ordered_json j;
    j["type"] = cfg.model->name();
    ordered_json h = ordered_json::array(), hp = ordered_json::array();
    for (const Rat& a : cfg.h.coords) h.push_back(rat_json(a));
    for (const Rat& a : cfg.hprime.coords) hp.push_back(rat_json(a));
    j["h"] = std::move(h);
    j["hprime"] = std::move(hp);
    j["g"] = matrix_json(cfg.g.m);
    return j.dump(2) + "\n";
}

QuadConfig config_from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    const GroupModel& model = GroupModel::by_name(j.at("type").get<std::string>());
    QuadConfig cfg;
    cfg.model = &model;
    std::vector<Rat> h, hp;
    for (const auto& a : j.at("h")) h.push_back(rat_from_json(a));
    for (const auto& a : j.at("hprime")) hp.push_back(rat_from_json(a));
    cfg.h = model.h(h);
    cfg.hprime = model.h(hp);
    cfg.g = model.element(matrix_from(j.at("g")));
    return cfg;
}

std::string surface_to_json(const MarkedSurface& s) {
    ordered_json j;
    j["genus"] = s.genus;
    j["boundaries"] = s.boundary_marked;
    return j.dump(2) + "\n";
}

MarkedSurface surface_from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    MarkedSurface s;
    s.genus = j.at("genus").get<int>();
    s.boundary_marked = j.at("boundaries").get<std::vector<int>>();
    s.validate();
    return s;
}

std::string triangulation_to_json(const IdealTriangulation& t) {
    ordered_json j;
    j["triangles"] = t.triangles;
    ordered_json g = ordered_json::array();
    for (const auto& [a, b] : t.gluings)
        g.push_back(ordered_json::array({a.tri, a.side, b.tri, b.side}));
    j["gluings"] = std::move(g);
    return j.dump(2) + "\n";
}

IdealTriangulation triangulation_from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    IdealTriangulation t;
    t.triangles = j.at("triangles").get<int>();
    for (const auto& g : j.at("gluings"))
        t.gluings.push_back({{g[0].get<int>(), g[1].get<int>()}, {g[2].get<int>(), g[3].get<int>()}});
    t.validate();
    return t;
}

} // namespace wilsonline
