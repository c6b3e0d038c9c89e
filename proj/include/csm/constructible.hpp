#pragma once
// Constructible functions over a declared registry of strata, the
// stratified pushforward (weight each locally closed piece by its fiber
// Euler characteristic), and CSM evaluation by linearity. Strata are
// names with attached class data, not point sets; containment lives only
// in the stratification tables.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "csm/bundles.hpp"

namespace csm {

struct Stratum {
    enum class Source { SmoothModel, Registered, Unknown };
    std::string name;
    Source source = Source::Unknown;
    std::optional<CompleteIntersection> model; // SmoothModel
    std::optional<ChowClass> csm_class;        // Registered
};

class StratumRegistry {
public:
    explicit StratumRegistry(BasePtr base);

    const BasePtr& base() const { return base_; }
    void register_smooth(const std::string& name, CompleteIntersection model);
    void register_class(const std::string& name, ChowClass csm);
    void declare_unknown(const std::string& name);

    bool has(const std::string& name) const;
    bool is_unknown(const std::string& name) const;
    const Stratum& at(const std::string& name) const;
    const std::map<std::string, Stratum>& strata() const { return strata_; }

    // CSM class of the stratum's indicator function; throws on Unknown.
    ChowClass csm(const std::string& name) const;

    // Copy with one Unknown stratum replaced by a solved class.
    StratumRegistry with_class(const std::string& name, ChowClass csm) const;

private:
    BasePtr base_;
    std::map<std::string, Stratum> strata_;
};

// Integer combination of indicator functions of named strata.
class ConstructibleFunction {
public:
    ConstructibleFunction() = default;
    static ConstructibleFunction indicator(const std::string& stratum);

    const std::map<std::string, long long>& terms() const { return terms_; }
    long long coefficient(const std::string& name) const;
    bool is_zero() const { return terms_.empty(); }

    ConstructibleFunction& add(const std::string& stratum, long long coeff);
    ConstructibleFunction& operator+=(const ConstructibleFunction& o);
    ConstructibleFunction& operator-=(const ConstructibleFunction& o);
    friend ConstructibleFunction operator+(ConstructibleFunction a, const ConstructibleFunction& b) { a += b; return a; }
    friend ConstructibleFunction operator-(ConstructibleFunction a, const ConstructibleFunction& b) { a -= b; return a; }
    friend ConstructibleFunction operator*(long long k, ConstructibleFunction f);
    bool operator==(const ConstructibleFunction& o) const { return terms_ == o.terms_; }

private:
    std::map<std::string, long long> terms_;
};

std::string to_string(const ConstructibleFunction& f);

// One row of a stratification table: over V \ W the fibers are
// topologically constant with Euler characteristic chi; W empty means
// the stratum is the last one down.
struct TableRow {
    std::string V;
    std::optional<std::string> W;
    long long chi = 0;
};

struct StratificationTable {
    std::vector<TableRow> rows;
    bool operator==(const StratificationTable& o) const;
};

// sum_i chi_i (1_{V_i} - 1_{W_i}); strata must exist in the registry.
ConstructibleFunction push_stratified(const StratificationTable& t, const StratumRegistry& reg);

// Linear extension of stratum CSM classes; Unknown strata with nonzero
// coefficient are an error.
ChowClass csm_of_function(const ConstructibleFunction& f, const StratumRegistry& reg);

// integrate_top of csm_of_function; concrete bases only.
Rational euler_of_function(const ConstructibleFunction& f, const StratumRegistry& reg);

// Inverts the stratified pushforward for the unique Unknown stratum of
// coefficient +-1 in push_stratified(t): the class making
// csm_of_function(push_stratified(t)) equal total_csm. Returns the class
// and a registry with it installed.
std::pair<ChowClass, StratumRegistry>
solve_stratum_csm(const StratificationTable& t, const ChowClass& total_csm, const StratumRegistry& reg);

} // namespace csm
