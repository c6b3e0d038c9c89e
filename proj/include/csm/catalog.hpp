#pragma once
// Built-in degeneration families and the scenario data model. Family data
// is stored base-independently: line-bundle combinations are integer
// vectors over the base's ordered line slots (slot 0 conventionally "L",
// slot 1 "S"), so one record instantiates over a formal base of any
// dimension or over P^n with concrete assignments. Loading runs
// consistency gates: the resolution tables must push to the expected
// constructible function, and every catalogued equation must homogenize
// to exactly the tower twists and hypersurface classes it claims.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "csm/specialize.hpp"

namespace csm {

// a*slot0 + b*slot1; families that never mention a second slot keep b=0.
struct LineComb {
    int L = 0;
    int S = 0;
    bool operator==(const LineComb&) const = default;
};

struct TowerData {
    std::vector<LineComb> twists; // first entry is the normalized 0
    bool operator==(const TowerData&) const = default;
};

struct HypData {
    int zeta = 0;
    LineComb cls;
    bool operator==(const HypData&) const = default;
};

struct ModelData {
    TowerData tower;
    std::vector<HypData> hyps;
    bool operator==(const ModelData&) const = default;
};

struct TableRowData {
    std::string V;
    std::optional<std::string> W;
    long long chi = 0;
    bool operator==(const TableRowData&) const = default;
};

struct PieceData {
    ModelData model;
    std::vector<TableRowData> table;
    bool operator==(const PieceData&) const = default;
};

struct ComponentData {
    std::string name;
    int multiplicity = 1;
    std::vector<PieceData> pieces;
    bool operator==(const ComponentData&) const = default;
};

struct IntersectionData {
    std::string first, second, name;
    std::vector<PieceData> pieces;
    bool operator==(const IntersectionData&) const = default;
};

// Smooth strata are complete intersections of the listed divisor classes
// inside the base itself; unknown ones get their CSM class solved from a
// stratification table at verification time.
struct StratumData {
    std::string name;
    bool unknown = false;
    std::vector<LineComb> degrees;
    bool operator==(const StratumData&) const = default;
};

// One monomial of a defining equation: exponents over the tower
// coordinates (in tower order) times a product of named sections.
struct TwistMonomial {
    std::vector<int> exponents;
    std::vector<std::string> sections;
    bool operator==(const TwistMonomial&) const = default;
};

// The monomial systems of one model's equations, keyed to where that
// model lives: owner "lhs", or a component/intersection name plus piece
// index. Checked against the stored tower at load time.
struct TwistSystemData {
    std::string owner;
    int piece = 0;
    std::vector<std::vector<TwistMonomial>> equations;
    bool operator==(const TwistSystemData&) const = default;
};

struct SolveStepData {
    std::string unknown;
    std::string owner; // "lhs" or a component/intersection name
    int piece = 0;
    bool operator==(const SolveStepData&) const = default;
};

struct LhsData {
    bool double_cover = false; // model is then the branch divisor
    ModelData model;
    std::vector<TableRowData> table;       // fiber structure over the base, when catalogued
    std::map<std::string, long long> push; // documented pushforward of 1_Y
    bool operator==(const LhsData&) const = default;
};

struct FamilyData {
    std::string name;
    std::vector<std::string> line_symbols;
    std::map<std::string, LineComb> sections;
    LhsData lhs;
    std::vector<StratumData> strata;
    std::vector<ComponentData> components;
    std::vector<IntersectionData> intersections;
    std::map<std::string, long long> expected_pushforward;
    std::vector<TwistSystemData> twist_systems;
    std::vector<SolveStepData> solve_plan;
    bool operator==(const FamilyData&) const = default;
};

const std::vector<std::string>& family_names();
const FamilyData& family_data(const std::string& name); // CatalogError on unknown names

// Bases shaped for a family: formal with the family's own line symbols,
// or P^n with one integer assignment per line symbol.
BasePtr formal_base_for(const FamilyData& fam, int dim);
BasePtr projective_base_for(const FamilyData& fam, int n, const std::vector<int>& line_values);

struct LhsPresentation {
    bool double_cover = false;
    CompleteIntersection model;
    std::optional<StratificationTable> table;
    std::optional<ConstructibleFunction> documented_push;
};

struct SolveStep {
    std::string unknown;
    std::string owner;
    int piece = 0;
};

struct FamilyScenario {
    std::string name;
    BasePtr base;
    LhsPresentation lhs;
    ResolutionDatum rhs;
    ConstructibleFunction expected_pushforward;
    StratumRegistry registry;
    std::vector<SolveStep> solve_plan;
    std::map<std::string, ChowClass> sections;

    // model and table behind a solve-step owner ("lhs" or a component /
    // intersection name); table is null when none is catalogued
    std::pair<const CompleteIntersection*, const StratificationTable*>
    locate(const std::string& owner, int piece) const;
};

// Pushforward to the base of the CSM class of the generic fiber side.
ChowClass lhs_csm(const FamilyScenario& sc);

FamilyScenario instantiate_scenario(const FamilyData& data, const BasePtr& base);
FamilyScenario instantiate_family(const std::string& name, const BasePtr& base);

// Homogenization: given monomials of one equation over tower coordinates
// with section coefficients, solve for coordinate twists making every
// monomial land in one line bundle. First coordinate normalized to twist
// 0; directions the system leaves free are also pinned to 0.
struct TwistSolveResult {
    std::vector<ChowClass> twists; // tower order
    ChowClass equation_class;      // degree-1 part; fiber degree is zeta_degree
    int zeta_degree = 0;
};
TwistSolveResult solve_twists(const BasePtr& base,
                              const std::map<std::string, ChowClass>& sections,
                              size_t coord_count,
                              const std::vector<TwistMonomial>& monomials);

// Several equations sharing one coordinate system (a complete
// intersection model); each gets its own class, twists are common.
struct TwistSystemResult {
    std::vector<ChowClass> twists;
    std::vector<ChowClass> equation_classes;
    std::vector<int> zeta_degrees;
};
TwistSystemResult solve_twist_system(const BasePtr& base,
                                     const std::map<std::string, ChowClass>& sections,
                                     size_t coord_count,
                                     const std::vector<std::vector<TwistMonomial>>& equations);

// Scenario files: the JSON shape of FamilyData. The built-ins round-trip
// through this format byte-identically.
std::string family_to_json(const FamilyData& data);
FamilyData family_from_json(const std::string& text); // ConfigError on malformed input
FamilyData load_scenario_file(const std::string& path);

} // namespace csm
