#include "csm/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <vector>

#include <json.hpp>

#include "csm/catalog.hpp"
#include "csm/verify.hpp"

namespace csm {

namespace {

struct BaseSpec {
    bool formal = true;
    int n = 0;
};

BaseSpec parse_base(const std::string& s) {
    if (s.empty())
        throw ConfigError("--base is required ('formal' or 'P<n>')");
    if (s == "formal")
        return {true, 0};
    if ((s[0] == 'P' || s[0] == 'p') && s.size() > 1 &&
        std::all_of(s.begin() + 1, s.end(), [](unsigned char c) { return std::isdigit(c); })) {
        return {false, std::stoi(s.substr(1))};
    }
    throw ConfigError("unrecognized base '" + s + "' ('formal' or 'P<n>')");
}

std::string list_text(const std::vector<FamilyData>& fams, const std::string& format) {
    if (format == "markdown") {
        std::string text = "# Families\n\n";
        for (const auto& f : fams) {
            text += "- **" + f.name + "** (lines:";
            for (const auto& s : f.line_symbols)
                text += " " + s;
            text += ") with " + std::to_string(f.components.size()) + " components, " +
                    std::to_string(f.strata.size()) + " strata\n";
        }
        return text;
    }
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& f : fams) {
        nlohmann::ordered_json j;
        j["name"] = f.name;
        j["line_symbols"] = f.line_symbols;
        j["components"] = f.components.size();
        j["strata"] = f.strata.size();
        arr.push_back(j);
    }
    return arr.dump(2) + "\n";
}

void emit(const std::string& text, const CliConfig& cfg, std::ostream& out) {
    if (cfg.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file)
        throw ConfigError("cannot open output file '" + cfg.out_path + "'");
    file << text;
}

// In bulk runs a family that uses a second line slot falls back to S = L
// so `check --family all --base Pn --L k` stays a one-flag command; a
// family named explicitly must be given its --S.
std::vector<int> line_values_for(const FamilyData& fam, const CliConfig& cfg, bool bulk) {
    std::vector<int> values;
    if (!cfg.line_l)
        throw ConfigError("--L is required with a concrete base");
    values.push_back(*cfg.line_l);
    if (fam.line_symbols.size() >= 2) {
        if (cfg.line_s)
            values.push_back(*cfg.line_s);
        else if (bulk)
            values.push_back(*cfg.line_l);
        else
            throw ConfigError("family '" + fam.name + "' needs --S for its second line class");
    }
    return values;
}

} // namespace

int default_max_formal_dim() {
    const char* env = std::getenv("CSMV_MAX_FORMAL_DIM");
    if (env != nullptr) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v < 64)
            return static_cast<int>(v);
    }
    return 4;
}

int run(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.format != "json" && cfg.format != "markdown")
            throw ConfigError("unknown format '" + cfg.format + "' ('json' or 'markdown')");

        std::vector<FamilyData> fams;
        bool bulk = false;
        if (!cfg.scenario_path.empty()) {
            fams.push_back(load_scenario_file(cfg.scenario_path));
        } else if (cfg.family == "all") {
            bulk = true;
            for (const auto& name : family_names())
                fams.push_back(family_data(name));
        } else {
            fams.push_back(family_data(cfg.family));
        }

        if (cfg.cmd == CliConfig::Cmd::List) {
            emit(list_text(fams, cfg.format), cfg, out);
            return 0;
        }

        BaseSpec bs = parse_base(cfg.base);
        std::vector<VerificationReport> reports;
        if (bs.formal) {
            if (cfg.cmd == CliConfig::Cmd::CrossCheck)
                throw ConfigError("cross-check needs a concrete base P<n>");
            if (cfg.dim < 1)
                throw ConfigError("--dim is required with a formal base");
            if (cfg.dim > cfg.max_formal_dim)
                throw ConfigError("--dim " + std::to_string(cfg.dim) +
                                  " exceeds the formal dimension cap " +
                                  std::to_string(cfg.max_formal_dim));
            for (const auto& fam : fams)
                reports.push_back(check_identity_formal(fam, cfg.dim));
        } else {
            for (const auto& fam : fams) {
                auto values = line_values_for(fam, cfg, bulk);
                reports.push_back(cfg.cmd == CliConfig::Cmd::CrossCheck
                                      ? cross_check_modes(fam, bs.n, values)
                                      : check_tadpole_numeric(fam, bs.n, values));
            }
        }

        emit(cfg.format == "markdown" ? to_markdown(reports) : to_json(reports), cfg, out);
        bool all_pass = std::all_of(reports.begin(), reports.end(),
                                    [](const VerificationReport& r) { return r.pass; });
        return all_pass ? 0 : 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace csm
