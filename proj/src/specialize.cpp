#include "csm/specialize.hpp"

#include <set>

namespace csm {

namespace {

void validate(const ResolutionDatum& r) {
    if (r.components.empty())
        throw ConfigError("resolution datum needs at least one component");
    std::set<std::string> names;
    for (const auto& c : r.components) {
        if (c.multiplicity < 1)
            throw ConfigError("component multiplicities must be >= 1");
        if (c.pieces.empty())
            throw ConfigError("component " + c.name + " has no presentation");
        if (!names.insert(c.name).second)
            throw ConfigError("duplicate component name: " + c.name);
    }
    std::set<std::pair<std::string, std::string>> pairs;
    for (const auto& x : r.intersections) {
        if (x.first == x.second)
            throw UnsupportedGeometryError("self-intersection entry for component " + x.first);
        if (!names.count(x.first) || !names.count(x.second))
            throw ConfigError("intersection refers to a missing component");
        auto key = std::minmax(x.first, x.second);
        if (!pairs.insert(key).second)
            throw UnsupportedGeometryError("repeated intersection pair " + x.first + ", " + x.second +
                                           " (triple overlaps are not representable)");
        if (x.pieces.empty())
            throw ConfigError("intersection " + x.name + " has no presentation");
    }
}

int component_multiplicity(const ResolutionDatum& r, const std::string& name) {
    for (const auto& c : r.components)
        if (c.name == name)
            return c.multiplicity;
    throw ConfigError("intersection refers to a missing component");
}

} // namespace

ConstructibleFunction delta_function(const ResolutionDatum& r) {
    validate(r);
    ConstructibleFunction delta;
    for (const auto& c : r.components)
        delta.add(c.name, c.multiplicity);
    for (const auto& x : r.intersections)
        delta.add(x.name, -(component_multiplicity(r, x.first) + component_multiplicity(r, x.second)));
    return delta;
}

ConstructibleFunction specialization_pushforward(const ResolutionDatum& r, const StratumRegistry& reg) {
    ConstructibleFunction delta = delta_function(r);
    ConstructibleFunction total;
    auto add_pieces = [&](const std::vector<ComponentPiece>& pieces, long long coeff) {
        for (const auto& p : pieces)
            total += coeff * push_stratified(p.table, reg);
    };
    for (const auto& c : r.components)
        add_pieces(c.pieces, delta.coefficient(c.name));
    for (const auto& x : r.intersections)
        add_pieces(x.pieces, delta.coefficient(x.name));
    return total;
}

ChowClass specialization_csm(const ResolutionDatum& r) {
    ConstructibleFunction delta = delta_function(r);
    const BasePtr& base = r.components.front().pieces.front().model.ambient.base;
    ChowClass total = base->zero();
    auto add_pieces = [&](const std::vector<ComponentPiece>& pieces, long long coeff) {
        for (const auto& p : pieces)
            total += Rational(coeff) * csm_smooth_ci(p.model);
    };
    for (const auto& c : r.components)
        add_pieces(c.pieces, delta.coefficient(c.name));
    for (const auto& x : r.intersections)
        add_pieces(x.pieces, delta.coefficient(x.name));
    return total;
}

} // namespace csm
