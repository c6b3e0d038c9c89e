#include "csm/verify.hpp"

#include <limits>
#include <sstream>

#include <json.hpp>

namespace csm {

namespace {

using ojson = nlohmann::ordered_json;

const char* mode_name(CheckMode m) {
    switch (m) {
    case CheckMode::Formal: return "formal";
    case CheckMode::Numeric: return "numeric";
    case CheckMode::Cross: return "cross";
    }
    return "?";
}

ojson rational_json(const Rational& r) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (denominator(r) == 1) {
        auto num = numerator(r);
        if (num >= std::numeric_limits<long long>::min() && num <= std::numeric_limits<long long>::max())
            return num.convert_to<long long>();
    }
    std::ostringstream s;
    s << r;
    return s.str();
}

std::string rational_str(const Rational& r) {
    std::ostringstream s;
    s << r;
    return s.str();
}

} // namespace

StratumRegistry solve_strata(const FamilyScenario& sc) {
    StratumRegistry reg = sc.registry;
    for (const auto& step : sc.solve_plan) {
        auto [model, table] = sc.locate(step.owner, step.piece);
        if (!table)
            throw CatalogError("solve step for " + step.unknown + " points at a model without a table");
        ChowClass total = (step.owner == "lhs") ? lhs_csm(sc) : csm_smooth_ci(*model);
        auto [cls, next] = solve_stratum_csm(*table, total, reg);
        (void)cls;
        reg = std::move(next);
    }
    return reg;
}

VerificationReport check_identity_formal(const FamilyData& fam, int d) {
    if (d < 1)
        throw ConfigError("formal base dimension must be at least 1");
    auto base = formal_base_for(fam, d);
    auto sc = instantiate_scenario(fam, base);
    ChowClass lhs = lhs_csm(sc);
    ChowClass rhs = specialization_csm(sc.rhs);

    VerificationReport rep;
    rep.family = fam.name;
    rep.base_desc = base->describe();
    rep.mode = CheckMode::Formal;
    rep.pass = true;
    for (int k = 0; k <= d; ++k) {
        DegreeRow row;
        row.k = k;
        row.lhs = degree_component(lhs, k);
        row.rhs = degree_component(rhs, k);
        row.diff = row.lhs - row.rhs;
        if (!row.diff.is_zero())
            rep.pass = false;
        rep.degrees.push_back(std::move(row));
    }
    return rep;
}

VerificationReport check_identity_formal(const std::string& family, int d) {
    return check_identity_formal(family_data(family), d);
}

VerificationReport check_tadpole_numeric(const FamilyData& fam, int n,
                                         const std::vector<int>& line_values) {
    if (n < 1)
        throw ConfigError("projective base dimension must be at least 1");
    auto base = projective_base_for(fam, n, line_values);
    auto sc = instantiate_scenario(fam, base);
    StratumRegistry solved = solve_strata(sc);

    VerificationReport rep;
    rep.family = fam.name;
    rep.base_desc = base->describe();
    rep.mode = CheckMode::Numeric;

    Rational chi_y = integrate_top(lhs_csm(sc));
    rep.ledger.emplace_back("chi_Y", chi_y);
    for (const auto& s : fam.strata) {
        if (sc.expected_pushforward.coefficient(s.name) == 0)
            continue;
        rep.ledger.emplace_back("chi_" + s.name, integrate_top(solved.csm(s.name)));
    }
    Rational rhs_total = euler_of_function(sc.expected_pushforward, solved);
    rep.ledger.emplace_back("lhs_total", chi_y);
    rep.ledger.emplace_back("rhs_total", rhs_total);
    rep.pass = (chi_y == rhs_total);
    return rep;
}

VerificationReport check_tadpole_numeric(const std::string& family, int n,
                                         const std::vector<int>& line_values) {
    return check_tadpole_numeric(family_data(family), n, line_values);
}

VerificationReport cross_check_modes(const FamilyData& fam, int n,
                                     const std::vector<int>& line_values) {
    if (n < 1)
        throw ConfigError("projective base dimension must be at least 1");
    auto target = projective_base_for(fam, n, line_values);
    auto sc_n = instantiate_scenario(fam, target);
    auto sc_f = instantiate_scenario(fam, formal_base_for(fam, n));

    Rational lhs_formal = integrate_top(specialize_base(lhs_csm(sc_f), target));
    Rational rhs_formal = integrate_top(specialize_base(specialization_csm(sc_f.rhs), target));
    Rational lhs_native = integrate_top(lhs_csm(sc_n));
    Rational rhs_native = integrate_top(specialization_csm(sc_n.rhs));

    StratumRegistry solved = solve_strata(sc_n);
    Rational rhs_strata = euler_of_function(sc_n.expected_pushforward, solved);

    VerificationReport rep;
    rep.family = fam.name;
    rep.base_desc = target->describe();
    rep.mode = CheckMode::Cross;
    rep.ledger.emplace_back("lhs_formal", lhs_formal);
    rep.ledger.emplace_back("lhs_native", lhs_native);
    bool lhs_ok = (lhs_formal == lhs_native);
    if (sc_n.lhs.table && sc_n.lhs.documented_push) {
        Rational lhs_strata = euler_of_function(*sc_n.lhs.documented_push, solved);
        rep.ledger.emplace_back("lhs_strata", lhs_strata);
        lhs_ok = lhs_ok && (lhs_strata == lhs_formal);
    }
    rep.ledger.emplace_back("rhs_formal", rhs_formal);
    rep.ledger.emplace_back("rhs_native", rhs_native);
    rep.ledger.emplace_back("rhs_strata", rhs_strata);
    bool rhs_ok = (rhs_formal == rhs_native) && (rhs_native == rhs_strata);
    rep.pass = lhs_ok && rhs_ok && (lhs_native == rhs_native);
    return rep;
}

VerificationReport cross_check_modes(const std::string& family, int n,
                                     const std::vector<int>& line_values) {
    return cross_check_modes(family_data(family), n, line_values);
}

namespace {

ojson report_json(const VerificationReport& r) {
    ojson j;
    j["family"] = r.family;
    j["base"] = r.base_desc;
    j["mode"] = mode_name(r.mode);
    ojson degrees = ojson::array();
    for (const auto& row : r.degrees)
        degrees.push_back(ojson{{"k", row.k},
                                {"lhs", to_string(row.lhs)},
                                {"rhs", to_string(row.rhs)},
                                {"diff", to_string(row.diff)}});
    j["degrees"] = std::move(degrees);
    if (!r.ledger.empty()) {
        ojson ledger = ojson::object();
        for (const auto& [key, value] : r.ledger)
            ledger[key] = rational_json(value);
        j["ledger"] = std::move(ledger);
    }
    j["verdict"] = r.pass ? "pass" : "fail";
    return j;
}

} // namespace

std::string to_json(const VerificationReport& r) {
    return report_json(r).dump(2) + "\n";
}

std::string to_json(const std::vector<VerificationReport>& rs) {
    ojson arr = ojson::array();
    for (const auto& r : rs)
        arr.push_back(report_json(r));
    return arr.dump(2) + "\n";
}

std::string to_markdown(const VerificationReport& r) {
    std::ostringstream out;
    out << "## " << r.family << " over " << r.base_desc << " (" << mode_name(r.mode) << ")\n\n";
    out << "verdict: **" << (r.pass ? "pass" : "fail") << "**\n\n";
    if (!r.degrees.empty()) {
        out << "| degree | lhs | rhs | diff |\n|---|---|---|---|\n";
        for (const auto& row : r.degrees)
            out << "| " << row.k << " | " << to_string(row.lhs) << " | " << to_string(row.rhs)
                << " | " << to_string(row.diff) << " |\n";
        out << "\n";
    }
    if (!r.ledger.empty()) {
        out << "| quantity | value |\n|---|---|\n";
        for (const auto& [key, value] : r.ledger)
            out << "| " << key << " | " << rational_str(value) << " |\n";
        out << "\n";
    }
    return out.str();
}

std::string to_markdown(const std::vector<VerificationReport>& rs) {
    std::string out;
    for (const auto& r : rs)
        out += to_markdown(r);
    return out;
}

} // namespace csm
