#include <fstream>
#include <sstream>

#include <json.hpp>

#include "csm/catalog.hpp"

// Scenario files carry exactly the fields of FamilyData. Line-bundle
// combinations are [a, b] integer pairs over the declared line symbols;
// towers are lists of such pairs; tables are {"V", "W"?, "chi"} rows.
// Emission order is fixed so identical data serializes byte-identically.

namespace csm {

namespace {

using ojson = nlohmann::ordered_json;

ojson comb_out(const LineComb& c) { return ojson::array({c.L, c.S}); }

LineComb comb_in(const ojson& j) {
    if (!j.is_array() || j.size() != 2)
        throw ConfigError("line combination must be a [L, S] integer pair");
    return {j[0].get<int>(), j[1].get<int>()};
}

ojson model_out(const ModelData& m) {
    ojson tower = ojson::array();
    for (const auto& t : m.tower.twists)
        tower.push_back(comb_out(t));
    ojson hyps = ojson::array();
    for (const auto& h : m.hyps)
        hyps.push_back(ojson{{"zeta", h.zeta}, {"line", comb_out(h.cls)}});
    return ojson{{"tower", std::move(tower)}, {"hypersurfaces", std::move(hyps)}};
}

ModelData model_in(const ojson& j) {
    ModelData m;
    for (const auto& t : j.at("tower"))
        m.tower.twists.push_back(comb_in(t));
    for (const auto& h : j.at("hypersurfaces"))
        m.hyps.push_back({h.at("zeta").get<int>(), comb_in(h.at("line"))});
    return m;
}

ojson table_out(const std::vector<TableRowData>& rows) {
    ojson out = ojson::array();
    for (const auto& r : rows) {
        ojson jr{{"V", r.V}};
        if (r.W)
            jr["W"] = *r.W;
        jr["chi"] = r.chi;
        out.push_back(std::move(jr));
    }
    return out;
}

std::vector<TableRowData> table_in(const ojson& j) {
    std::vector<TableRowData> rows;
    for (const auto& r : j) {
        TableRowData row{r.at("V").get<std::string>(), std::nullopt, r.at("chi").get<long long>()};
        if (r.contains("W"))
            row.W = r.at("W").get<std::string>();
        rows.push_back(std::move(row));
    }
    return rows;
}

ojson pieces_out(const std::vector<PieceData>& pieces) {
    ojson out = ojson::array();
    for (const auto& p : pieces)
        out.push_back(ojson{{"model", model_out(p.model)}, {"table", table_out(p.table)}});
    return out;
}

std::vector<PieceData> pieces_in(const ojson& j) {
    std::vector<PieceData> pieces;
    for (const auto& p : j)
        pieces.push_back({model_in(p.at("model")), table_in(p.at("table"))});
    return pieces;
}

ojson function_out(const std::map<std::string, long long>& terms) {
    ojson out = ojson::object();
    for (const auto& [name, k] : terms)
        out[name] = k;
    return out;
}

std::map<std::string, long long> function_in(const ojson& j) {
    std::map<std::string, long long> terms;
    for (auto it = j.begin(); it != j.end(); ++it)
        terms[it.key()] = it.value().get<long long>();
    return terms;
}

ojson family_out(const FamilyData& d) {
    ojson j;
    j["name"] = d.name;
    j["line_symbols"] = d.line_symbols;

    ojson sections = ojson::object();
    for (const auto& [name, comb] : d.sections)
        sections[name] = comb_out(comb);
    j["sections"] = std::move(sections);

    ojson lhs;
    lhs["double_cover"] = d.lhs.double_cover;
    lhs["model"] = model_out(d.lhs.model);
    if (!d.lhs.table.empty())
        lhs["table"] = table_out(d.lhs.table);
    if (!d.lhs.push.empty())
        lhs["push"] = function_out(d.lhs.push);
    j["lhs"] = std::move(lhs);

    ojson strata = ojson::array();
    for (const auto& s : d.strata) {
        ojson js{{"name", s.name}};
        if (s.unknown) {
            js["unknown"] = true;
        } else {
            ojson degs = ojson::array();
            for (const auto& g : s.degrees)
                degs.push_back(comb_out(g));
            js["degrees"] = std::move(degs);
        }
        strata.push_back(std::move(js));
    }
    j["strata"] = std::move(strata);

    ojson comps = ojson::array();
    for (const auto& c : d.components)
        comps.push_back(ojson{{"name", c.name},
                              {"multiplicity", c.multiplicity},
                              {"pieces", pieces_out(c.pieces)}});
    j["components"] = std::move(comps);

    ojson xs = ojson::array();
    for (const auto& x : d.intersections)
        xs.push_back(ojson{{"first", x.first},
                           {"second", x.second},
                           {"name", x.name},
                           {"pieces", pieces_out(x.pieces)}});
    j["intersections"] = std::move(xs);

    j["expected_pushforward"] = function_out(d.expected_pushforward);

    ojson systems = ojson::array();
    for (const auto& ts : d.twist_systems) {
        ojson eqs = ojson::array();
        for (const auto& eq : ts.equations) {
            ojson monos = ojson::array();
            for (const auto& m : eq)
                monos.push_back(ojson{{"exponents", m.exponents}, {"sections", m.sections}});
            eqs.push_back(std::move(monos));
        }
        systems.push_back(ojson{{"owner", ts.owner}, {"piece", ts.piece}, {"equations", std::move(eqs)}});
    }
    j["twist_systems"] = std::move(systems);

    ojson plan = ojson::array();
    for (const auto& s : d.solve_plan)
        plan.push_back(ojson{{"unknown", s.unknown}, {"owner", s.owner}, {"piece", s.piece}});
    j["solve_plan"] = std::move(plan);
    return j;
}

FamilyData family_in(const ojson& j) {
    FamilyData d;
    d.name = j.at("name").get<std::string>();
    d.line_symbols = j.at("line_symbols").get<std::vector<std::string>>();
    for (auto it = j.at("sections").begin(); it != j.at("sections").end(); ++it)
        d.sections[it.key()] = comb_in(it.value());

    const auto& lhs = j.at("lhs");
    d.lhs.double_cover = lhs.value("double_cover", false);
    d.lhs.model = model_in(lhs.at("model"));
    if (lhs.contains("table"))
        d.lhs.table = table_in(lhs.at("table"));
    if (lhs.contains("push"))
        d.lhs.push = function_in(lhs.at("push"));

    for (const auto& s : j.at("strata")) {
        StratumData sd{s.at("name").get<std::string>(), s.value("unknown", false), {}};
        if (s.contains("degrees"))
            for (const auto& g : s.at("degrees"))
                sd.degrees.push_back(comb_in(g));
        d.strata.push_back(std::move(sd));
    }

    for (const auto& c : j.at("components"))
        d.components.push_back({c.at("name").get<std::string>(),
                                c.at("multiplicity").get<int>(),
                                pieces_in(c.at("pieces"))});

    for (const auto& x : j.at("intersections"))
        d.intersections.push_back({x.at("first").get<std::string>(),
                                   x.at("second").get<std::string>(),
                                   x.at("name").get<std::string>(),
                                   pieces_in(x.at("pieces"))});

    d.expected_pushforward = function_in(j.at("expected_pushforward"));

    if (j.contains("twist_systems"))
        for (const auto& ts : j.at("twist_systems")) {
            TwistSystemData t{ts.at("owner").get<std::string>(), ts.value("piece", 0), {}};
            for (const auto& eq : ts.at("equations")) {
                std::vector<TwistMonomial> monos;
                for (const auto& m : eq)
                    monos.push_back({m.at("exponents").get<std::vector<int>>(),
                                     m.at("sections").get<std::vector<std::string>>()});
                t.equations.push_back(std::move(monos));
            }
            d.twist_systems.push_back(std::move(t));
        }

    if (j.contains("solve_plan"))
        for (const auto& s : j.at("solve_plan"))
            d.solve_plan.push_back({s.at("unknown").get<std::string>(),
                                    s.at("owner").get<std::string>(),
                                    s.value("piece", 0)});
    return d;
}

} // namespace

std::string family_to_json(const FamilyData& data) {
    return family_out(data).dump(2) + "\n";
}

FamilyData family_from_json(const std::string& text) {
    try {
        return family_in(ojson::parse(text));
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("malformed scenario: ") + e.what());
    }
}

FamilyData load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot read scenario file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return family_from_json(buf.str());
}

} // namespace csm
