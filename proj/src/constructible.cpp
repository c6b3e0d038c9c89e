#include "csm/constructible.hpp"

#include <sstream>

namespace csm {

StratumRegistry::StratumRegistry(BasePtr base) : base_(std::move(base)) {
    if (!base_)
        throw ConfigError("stratum registry needs a base");
    // The full base is always available: its CSM class is c(TB).
    Stratum b;
    b.name = "B";
    b.source = Stratum::Source::Registered;
    b.csm_class = base_->tangent_class();
    strata_.emplace("B", std::move(b));
}

void StratumRegistry::register_smooth(const std::string& name, CompleteIntersection model) {
    if (*model.ambient.base != *base_)
        throw BaseMismatchError("stratum model over the wrong base");
    Stratum s;
    s.name = name;
    s.source = Stratum::Source::SmoothModel;
    s.model = std::move(model);
    strata_[name] = std::move(s);
}

void StratumRegistry::register_class(const std::string& name, ChowClass csm) {
    if (!csm.bound() || *csm.base() != *base_)
        throw BaseMismatchError("stratum class over the wrong base");
    Stratum s;
    s.name = name;
    s.source = Stratum::Source::Registered;
    s.csm_class = std::move(csm);
    strata_[name] = std::move(s);
}

void StratumRegistry::declare_unknown(const std::string& name) {
    Stratum s;
    s.name = name;
    s.source = Stratum::Source::Unknown;
    strata_[name] = std::move(s);
}

bool StratumRegistry::has(const std::string& name) const {
    return strata_.count(name) > 0;
}

bool StratumRegistry::is_unknown(const std::string& name) const {
    return at(name).source == Stratum::Source::Unknown;
}

const Stratum& StratumRegistry::at(const std::string& name) const {
    auto it = strata_.find(name);
    if (it == strata_.end())
        throw RegistryError("unregistered stratum: " + name);
    return it->second;
}

ChowClass StratumRegistry::csm(const std::string& name) const {
    const Stratum& s = at(name);
    switch (s.source) {
    case Stratum::Source::Registered:
        return *s.csm_class;
    case Stratum::Source::SmoothModel:
        return csm_smooth_ci(*s.model);
    case Stratum::Source::Unknown:
        break;
    }
    throw UnsolvedStratumError("stratum " + name + " has no CSM class yet");
}

StratumRegistry StratumRegistry::with_class(const std::string& name, ChowClass csm) const {
    at(name); // existence check
    StratumRegistry copy = *this;
    copy.register_class(name, std::move(csm));
    return copy;
}

ConstructibleFunction ConstructibleFunction::indicator(const std::string& stratum) {
    ConstructibleFunction f;
    f.add(stratum, 1);
    return f;
}

long long ConstructibleFunction::coefficient(const std::string& name) const {
    auto it = terms_.find(name);
    return it == terms_.end() ? 0 : it->second;
}

ConstructibleFunction& ConstructibleFunction::add(const std::string& stratum, long long coeff) {
    if (coeff == 0)
        return *this;
    auto [it, inserted] = terms_.emplace(stratum, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
    return *this;
}

ConstructibleFunction& ConstructibleFunction::operator+=(const ConstructibleFunction& o) {
    for (auto& [name, c] : o.terms_)
        add(name, c);
    return *this;
}

ConstructibleFunction& ConstructibleFunction::operator-=(const ConstructibleFunction& o) {
    for (auto& [name, c] : o.terms_)
        add(name, -c);
    return *this;
}

ConstructibleFunction operator*(long long k, ConstructibleFunction f) {
    if (k == 0)
        return ConstructibleFunction();
    for (auto& [name, c] : f.terms_)
        c *= k;
    return f;
}

std::string to_string(const ConstructibleFunction& f) {
    if (f.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [name, c] : f.terms()) {
        long long abs = c < 0 ? -c : c;
        if (first) {
            if (c < 0)
                os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (abs != 1)
            os << abs << "*";
        os << "1_" << name;
    }
    return os.str();
}

bool StratificationTable::operator==(const StratificationTable& o) const {
    if (rows.size() != o.rows.size())
        return false;
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].V != o.rows[i].V || rows[i].W != o.rows[i].W || rows[i].chi != o.rows[i].chi)
            return false;
    }
    return true;
}

ConstructibleFunction push_stratified(const StratificationTable& t, const StratumRegistry& reg) {
    ConstructibleFunction f;
    for (const auto& row : t.rows) {
        reg.at(row.V);
        f.add(row.V, row.chi);
        if (row.W) {
            reg.at(*row.W);
            f.add(*row.W, -row.chi);
        }
    }
    return f;
}

ChowClass csm_of_function(const ConstructibleFunction& f, const StratumRegistry& reg) {
    ChowClass total = reg.base()->zero();
    for (auto& [name, c] : f.terms())
        total += Rational(c) * reg.csm(name);
    return total;
}

Rational euler_of_function(const ConstructibleFunction& f, const StratumRegistry& reg) {
    if (!reg.base()->concrete())
        throw NoIntegrationError("Euler characteristics need a projective base");
    return integrate_top(csm_of_function(f, reg));
}

std::pair<ChowClass, StratumRegistry>
solve_stratum_csm(const StratificationTable& t, const ChowClass& total_csm, const StratumRegistry& reg) {
    ConstructibleFunction f = push_stratified(t, reg);
    std::string unknown;
    long long unknown_coeff = 0;
    for (auto& [name, c] : f.terms()) {
        if (!reg.is_unknown(name))
            continue;
        if (!unknown.empty())
            throw UnderdeterminedError("table has more than one unknown stratum: " + unknown + ", " + name);
        unknown = name;
        unknown_coeff = c;
    }
    if (unknown.empty())
        throw UnderdeterminedError("table has no unknown stratum to solve for");
    if (unknown_coeff != 1 && unknown_coeff != -1)
        throw UnderdeterminedError("unknown stratum " + unknown + " has non-unit coefficient");

    ChowClass known = reg.base()->zero();
    for (auto& [name, c] : f.terms())
        if (name != unknown)
            known += Rational(c) * reg.csm(name);
    ChowClass solved = Rational(unknown_coeff) * (total_csm - known);
    return {solved, reg.with_class(unknown, solved)};
}

} // namespace csm
