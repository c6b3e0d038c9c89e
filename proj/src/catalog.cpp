#include "csm/catalog.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace csm {

namespace {

TwistMonomial tm(std::vector<int> e, std::vector<std::string> s = {}) {
    return {std::move(e), std::move(s)};
}

TableRowData row(std::string v, std::string w, long long chi) {
    return {std::move(v), std::move(w), chi};
}

TableRowData bot(std::string v, long long chi) {
    return {std::move(v), std::nullopt, chi};
}

PieceData piece(std::vector<LineComb> twists, std::vector<HypData> hyps, std::vector<TableRowData> rows) {
    return {{{std::move(twists)}, std::move(hyps)}, std::move(rows)};
}

// Every family degenerates to two components glued along the same
// orientifold double cover X: (z_o^2 = h w^2), a conic bundle with smooth
// fibers away from O = {h = 0} and line pairs over it.
IntersectionData standard_x() {
    return {"comp1", "comp2", "X",
            {piece({{0, 0}, {1, 0}}, {{2, {2, 0}}}, {row("B", "O", 2), bot("O", 1)})}};
}

TwistSystemData x_twists() {
    return {"X", 0, {{tm({0, 2}), tm({2, 0}, {"h"})}}};
}

// y^2 z = x^3 + f x z^2 + g z^3 in P(O+L^2+L^3); the central fiber
// degenerates into two conic bundles D1: (X1^2 = h w^2 + X3(eta w + chi X3))
// and D2: (X1^2 = w(X2 + h w)).
FamilyData make_weierstrass() {
    FamilyData f;
    f.name = "weierstrass";
    f.line_symbols = {"L"};
    f.sections = {{"f", {4, 0}}, {"g", {6, 0}}, {"h", {2, 0}}, {"eta", {4, 0}}, {"sec_chi", {6, 0}}};
    f.lhs.model = {{{{0, 0}, {2, 0}, {3, 0}}}, {{3, {6, 0}}}};
    f.lhs.table = {row("B", "Delta", 0), row("Delta", "C", 1), bot("C", 2)};
    f.lhs.push = {{"Delta", 1}, {"C", 1}};
    f.strata = {
        {"O", false, {{2, 0}}},
        {"D", true, {}},
        {"S", false, {{2, 0}, {4, 0}, {6, 0}}},
        {"Delta", true, {}},
        {"C", false, {{4, 0}, {6, 0}}},
    };
    f.components = {
        {"comp1", 1, {piece({{0, 0}, {1, 0}, {-2, 0}}, {{2, {2, 0}}},
                            {row("B", "D", 2), row("D", "S", 3), bot("S", 2)})}},
        {"comp2", 1, {piece({{0, 0}, {1, 0}, {2, 0}}, {{2, {2, 0}}}, {bot("B", 2)})}},
    };
    f.intersections = {standard_x()};
    f.expected_pushforward = {{"O", 2}, {"D", 1}, {"S", -1}};
    f.twist_systems = {
        {"lhs", 0, {{tm({1, 0, 2}), tm({0, 3, 0}), tm({2, 1, 0}, {"f"}), tm({3, 0, 0}, {"g"})}}},
        {"comp1", 0, {{tm({0, 2, 0}), tm({2, 0, 0}, {"h"}), tm({1, 0, 1}, {"eta"}), tm({0, 0, 2}, {"sec_chi"})}}},
        {"comp2", 0, {{tm({0, 2, 0}), tm({1, 0, 1}), tm({2, 0, 0}, {"h"})}}},
        x_twists(),
    };
    f.solve_plan = {{"D", "comp1", 0}, {"Delta", "lhs", 0}};
    return f;
}

// Cubic u^3 + su^2 + ... = 0 in P(O+L+L); one central-fiber component is
// the blowup of a P^1-bundle along the curve pair Gamma: (s^2 = h z^2,
// phi s + chi z = 0), so it contributes two pieces.
FamilyData make_e6() {
    FamilyData f;
    f.name = "e6";
    f.line_symbols = {"L"};
    f.sections = {{"nu", {1, 0}}, {"h", {2, 0}}, {"phi", {2, 0}}, {"sec_chi", {3, 0}}};
    f.lhs.model = {{{{0, 0}, {1, 0}, {1, 0}}}, {{3, {3, 0}}}};
    f.strata = {
        {"O", false, {{2, 0}}},
        {"D1", false, {{2, 0}}},
        {"D2", true, {}},
        {"A2", false, {{2, 0}, {3, 0}}},
        {"S2", false, {{2, 0}, {2, 0}, {3, 0}}},
    };
    f.components = {
        {"comp1", 1,
         {piece({{0, 0}, {1, 0}}, {}, {bot("B", 2)}),
          piece({{0, 0}, {1, 0}}, {{2, {2, 0}}, {1, {3, 0}}},
                {row("D2", "A2", 1), row("A2", "S2", 2), bot("S2", 1)})}},
        {"comp2", 1, {piece({{0, 0}, {1, 0}, {1, 0}}, {{2, {2, 0}}},
                            {row("B", "D1", 2), bot("D1", 3)})}},
    };
    f.intersections = {standard_x()};
    f.expected_pushforward = {{"O", 2}, {"D1", 1}, {"D2", 1}, {"A2", 1}, {"S2", -1}};
    f.twist_systems = {
        {"lhs", 0,
         {{tm({0, 3, 0}), tm({0, 2, 1}), tm({1, 2, 0}, {"nu"}), tm({0, 1, 2}),
           tm({2, 1, 0}, {"h"}), tm({2, 0, 1}, {"phi"}), tm({3, 0, 0}, {"sec_chi"})}}},
        {"comp1", 1, {{tm({0, 2}), tm({2, 0}, {"h"})}, {tm({0, 1}, {"phi"}), tm({1, 0}, {"sec_chi"})}}},
        {"comp2", 0,
         {{tm({0, 2, 0}), tm({0, 1, 1}), tm({1, 1, 0}, {"nu"}), tm({0, 0, 2}), tm({2, 0, 0}, {"h"})}}},
        x_twists(),
    };
    f.solve_plan = {{"D2", "comp1", 1}};
    return f;
}

// Double cover of P(O+L) branched along (x^2 - h z^2)^2 + delta x z^3 +
// gamma z^4 = 0; component 1 is the blowup of a P^1-bundle along
// Gamma3: (x^2 = h z^2, delta x + gamma z = 0).
FamilyData make_e7() {
    FamilyData f;
    f.name = "e7";
    f.line_symbols = {"L"};
    f.sections = {{"h", {2, 0}}, {"delta_s", {3, 0}}, {"gamma", {4, 0}}};
    f.lhs.double_cover = true;
    f.lhs.model = {{{{0, 0}, {1, 0}}}, {{4, {4, 0}}}};
    f.strata = {
        {"O", false, {{2, 0}}},
        {"D3", true, {}},
        {"A3", false, {{3, 0}, {4, 0}}},
        {"S3", false, {{2, 0}, {3, 0}, {4, 0}}},
    };
    f.components = {
        {"comp1", 1,
         {piece({{0, 0}, {1, 0}}, {}, {bot("B", 2)}),
          piece({{0, 0}, {1, 0}}, {{2, {2, 0}}, {1, {4, 0}}},
                {row("D3", "A3", 1), row("A3", "S3", 2), bot("S3", 1)})}},
        {"comp2", 1, {piece({{0, 0}, {1, 0}, {2, 0}}, {{2, {2, 0}}}, {bot("B", 2)})}},
    };
    f.intersections = {standard_x()};
    f.expected_pushforward = {{"O", 2}, {"D3", 1}, {"A3", 1}, {"S3", -1}};
    f.twist_systems = {
        {"lhs", 0,
         {{tm({0, 4}), tm({2, 2}, {"h"}), tm({4, 0}, {"h", "h"}), tm({3, 1}, {"delta_s"}),
           tm({4, 0}, {"gamma"})}}},
        {"comp1", 1, {{tm({0, 2}), tm({2, 0}, {"h"})}, {tm({0, 1}, {"delta_s"}), tm({1, 0}, {"gamma"})}}},
        {"comp2", 0, {{tm({1, 0, 1}), tm({0, 2, 0}), tm({2, 0, 0}, {"h"})}}},
        x_twists(),
    };
    f.solve_plan = {{"D3", "comp1", 1}};
    return f;
}

// Double cover branched along s^4 - 4 eps s^3 z + h s^2 z^2 + 2 zeta s z^3
// + tau z^4; both central-fiber components stay plain conic bundles.
FamilyData make_e7prime() {
    FamilyData f;
    f.name = "e7prime";
    f.line_symbols = {"L"};
    f.sections = {{"epsilon", {1, 0}}, {"h", {2, 0}}, {"zeta_s", {3, 0}}, {"tau", {4, 0}}};
    f.lhs.double_cover = true;
    f.lhs.model = {{{{0, 0}, {1, 0}}}, {{4, {4, 0}}}};
    f.strata = {
        {"O", false, {{2, 0}}},
        {"D4", false, {{2, 0}}},
        {"D6", true, {}},
        {"S6", false, {{2, 0}, {3, 0}, {4, 0}}},
    };
    f.components = {
        {"comp1", 1, {piece({{0, 0}, {1, 0}, {-1, 0}}, {{2, {2, 0}}},
                            {row("B", "D6", 2), row("D6", "S6", 3), bot("S6", 2)})}},
        {"comp2", 1, {piece({{0, 0}, {1, 0}, {1, 0}}, {{2, {2, 0}}},
                            {row("B", "D4", 2), bot("D4", 3)})}},
    };
    f.intersections = {standard_x()};
    f.expected_pushforward = {{"O", 2}, {"D4", 1}, {"D6", 1}, {"S6", -1}};
    f.twist_systems = {
        {"lhs", 0,
         {{tm({0, 4}), tm({1, 3}, {"epsilon"}), tm({2, 2}, {"h"}), tm({3, 1}, {"zeta_s"}),
           tm({4, 0}, {"tau"})}}},
        {"comp1", 0,
         {{tm({0, 2, 0}), tm({2, 0, 0}, {"h"}), tm({1, 0, 1}, {"zeta_s"}), tm({0, 0, 2}, {"tau"})}}},
        {"comp2", 0,
         {{tm({0, 2, 0}), tm({0, 0, 2}), tm({1, 0, 1}, {"epsilon"}), tm({2, 0, 0}, {"h"})}}},
        x_twists(),
    };
    f.solve_plan = {{"D6", "comp1", 0}};
    return f;
}

// Complete intersection of two quadric bundles in a rank-4 tower;
// component 1 is the blowup of a conic bundle Q along Gamma9: (x = 0,
// alpha z + eta w = 0) inside Q.
FamilyData make_d5() {
    FamilyData f;
    f.name = "d5";
    f.line_symbols = {"L"};
    f.sections = {{"alpha", {2, 0}}, {"eta", {1, 0}}, {"h", {2, 0}}, {"psi1", {1, 0}}, {"psi2", {1, 0}}};
    f.lhs.model = {{{{0, 0}, {1, 0}, {1, 0}, {1, 0}}}, {{2, {2, 0}}, {2, {2, 0}}}};
    f.strata = {
        {"O", false, {{2, 0}}},
        {"D7", false, {{2, 0}}},
        {"D8", false, {{2, 0}}},
        {"D9", true, {}},
        {"A9", false, {{2, 0}, {1, 0}}},
        {"S9", false, {{2, 0}, {1, 0}, {2, 0}}},
    };
    f.components = {
        {"comp1", 1,
         {piece({{0, 0}, {1, 0}, {1, 0}}, {{2, {2, 0}}}, {row("B", "D7", 2), bot("D7", 3)}),
          piece({{0, 0}, {1, 0}, {1, 0}}, {{1, {1, 0}}, {1, {2, 0}}, {2, {2, 0}}},
                {row("D9", "A9", 1), row("A9", "S9", 2), bot("S9", 1)})}},
        {"comp2", 1, {piece({{0, 0}, {1, 0}, {1, 0}}, {{2, {2, 0}}},
                            {row("B", "D8", 2), bot("D8", 3)})}},
    };
    f.intersections = {standard_x()};
    f.expected_pushforward = {{"O", 2}, {"D7", 1}, {"D8", 1}, {"D9", 1}, {"A9", 1}, {"S9", -1}};
    f.twist_systems = {
        {"lhs", 0,
         {{tm({0, 2, 0, 0}), tm({0, 0, 2, 0}), tm({2, 0, 0, 0}, {"alpha"}), tm({1, 0, 0, 1}, {"eta"})},
          {tm({0, 0, 0, 2}), tm({0, 2, 0, 0}), tm({2, 0, 0, 0}, {"h"}), tm({1, 1, 0, 0}, {"psi1"}),
           tm({1, 1, 0, 0}, {"psi2"}), tm({1, 0, 1, 0}, {"psi1"}), tm({1, 0, 1, 0}, {"psi2"})}}},
        {"comp1", 0,
         {{tm({0, 0, 2}), tm({0, 2, 0}), tm({1, 1, 0}, {"psi1"}), tm({2, 0, 0}, {"h"})}}},
        {"comp1", 1,
         {{tm({0, 1, 0})},
          {tm({1, 0, 0}, {"alpha"}), tm({0, 0, 1}, {"eta"})},
          {tm({0, 0, 2}), tm({0, 2, 0}), tm({1, 1, 0}, {"psi1"}), tm({2, 0, 0}, {"h"})}}},
        {"comp2", 0,
         {{tm({0, 0, 2}), tm({0, 2, 0}), tm({1, 1, 0}, {"psi2"}), tm({2, 0, 0}, {"h"})}}},
        x_twists(),
    };
    f.solve_plan = {{"D9", "comp1", 1}};
    return f;
}

// Cubic y x^2 + beta y^3 + theta y^2 z + h y z^2 + iota z^3 + rho x z^2
// in P(O+L+S); the only family with two independent twist directions.
// Component 1 blows up a P^1-bundle along Gamma_Q: (iota = 0, x^2 = -h z^2).
FamilyData make_q7() {
    FamilyData f;
    f.name = "q7";
    f.line_symbols = {"L", "S"};
    f.sections = {{"beta", {2, -2}}, {"theta", {2, -1}}, {"rho", {1, 1}}, {"h", {2, 0}}, {"iota", {2, 1}}};
    f.lhs.model = {{{{0, 0}, {1, 0}, {0, 1}}}, {{3, {2, 1}}}};
    f.strata = {
        {"O", false, {{2, 0}}},
        {"D10", false, {{2, 1}}},
        {"D11", true, {}},
        {"S10", false, {{2, 1}, {2, 0}}},
        {"S11", false, {{2, 0}, {2, -1}, {2, -2}}},
    };
    f.components = {
        {"comp1", 1,
         {piece({{0, 0}, {1, 0}}, {}, {bot("B", 2)}),
          piece({{0, 0}, {1, 0}}, {{0, {2, 1}}, {2, {2, 0}}},
                {row("D10", "S10", 2), bot("S10", 1)})}},
        {"comp2", 1, {piece({{0, 0}, {1, 0}, {0, 1}}, {{2, {2, 0}}},
                            {row("B", "D11", 2), row("D11", "S11", 3), bot("S11", 2)})}},
    };
    f.intersections = {standard_x()};
    f.expected_pushforward = {{"O", 2}, {"D10", 2}, {"S10", -1}, {"D11", 1}, {"S11", -1}};
    f.twist_systems = {
        {"lhs", 0,
         {{tm({0, 2, 1}), tm({0, 0, 3}, {"beta"}), tm({1, 0, 2}, {"theta"}), tm({2, 0, 1}, {"h"}),
           tm({3, 0, 0}, {"iota"}), tm({2, 1, 0}, {"rho"})}}},
        {"comp1", 1, {{tm({0, 0}, {"iota"})}, {tm({0, 2}), tm({2, 0}, {"h"})}}},
        {"comp2", 0,
         {{tm({0, 2, 0}), tm({2, 0, 0}, {"h"}), tm({0, 0, 2}, {"beta"}), tm({1, 0, 1}, {"theta"})}}},
        x_twists(),
    };
    f.solve_plan = {{"D11", "comp2", 0}};
    return f;
}

const std::map<std::string, FamilyData>& catalog_map() {
    static const std::map<std::string, FamilyData> families = [] {
        std::map<std::string, FamilyData> out;
        for (FamilyData f : {make_weierstrass(), make_e6(), make_e7(), make_e7prime(),
                             make_d5(), make_q7()})
            out.emplace(f.name, std::move(f));
        return out;
    }();
    return families;
}

ChowClass line_comb_class(const BasePtr& base, const LineComb& c) {
    ChowClass out = base->zero();
    size_t slots = base->line_slots().size();
    if (c.L != 0) {
        if (slots < 1)
            throw ConfigError("base has no line symbol for slot 0");
        out += Rational(c.L) * base->line_class(0);
    }
    if (c.S != 0) {
        if (slots < 2)
            throw ConfigError("base has no line symbol for slot 1");
        out += Rational(c.S) * base->line_class(1);
    }
    return out;
}

CompleteIntersection build_model(const BasePtr& base, const ModelData& m) {
    ProjBundle tower{base, {}};
    for (const auto& t : m.tower.twists)
        tower.summands.push_back(line_comb_class(base, t));
    CompleteIntersection ci{std::move(tower), {}, true};
    for (const auto& h : m.hyps)
        ci.hypersurfaces.push_back({h.zeta, line_comb_class(base, h.cls)});
    return ci;
}

StratificationTable build_table(const std::vector<TableRowData>& rows) {
    StratificationTable t;
    for (const auto& r : rows)
        t.rows.push_back({r.V, r.W, r.chi});
    return t;
}

ConstructibleFunction build_function(const std::map<std::string, long long>& terms) {
    ConstructibleFunction f;
    for (const auto& [name, k] : terms)
        f.add(name, k);
    return f;
}

// Smooth stratum cut out inside the base itself; when there are more
// defining sections than dimensions the general such locus is empty and
// is recorded as the zero class.
void register_stratum(StratumRegistry& reg, const BasePtr& base, const StratumData& s) {
    if (s.unknown) {
        reg.declare_unknown(s.name);
        return;
    }
    if (static_cast<int>(s.degrees.size()) > base->dim()) {
        reg.register_class(s.name, base->zero());
        return;
    }
    ProjBundle trivial{base, {base->zero()}};
    CompleteIntersection ci{std::move(trivial), {}, true};
    for (const auto& d : s.degrees)
        ci.hypersurfaces.push_back({0, line_comb_class(base, d)});
    reg.register_smooth(s.name, std::move(ci));
}

struct Located {
    const CompleteIntersection* model = nullptr;
    const StratificationTable* table = nullptr;
};

Located locate_in(const LhsPresentation& lhs, const ResolutionDatum& rhs,
                  const std::string& owner, int piece) {
    if (owner == "lhs") {
        return {&lhs.model, lhs.table ? &*lhs.table : nullptr};
    }
    auto pick = [&](const std::vector<ComponentPiece>& pieces) -> Located {
        if (piece < 0 || piece >= static_cast<int>(pieces.size()))
            throw CatalogError("piece index " + std::to_string(piece) + " out of range for " + owner);
        const auto& p = pieces[static_cast<size_t>(piece)];
        return {&p.model, &p.table};
    };
    for (const auto& c : rhs.components)
        if (c.name == owner)
            return pick(c.pieces);
    for (const auto& x : rhs.intersections)
        if (x.name == owner)
            return pick(x.pieces);
    throw CatalogError("no component or intersection named " + owner);
}

// One linear system over the degree-1 classes of the base: unknown
// coordinate twists a_1..a_{r-1} (a_0 = 0) and one equation class per
// equation. Solved symbol-by-symbol with exact elimination.
struct LinearSolve {
    std::vector<std::vector<Rational>> rows; // coefficient part
    std::vector<std::vector<Rational>> rhs;  // one column per basis symbol
    size_t unknowns = 0;

    // reduced row echelon form; returns value per unknown per column with
    // free unknowns pinned to zero
    std::vector<std::vector<Rational>> solve(size_t cols) {
        size_t pivot_row = 0;
        std::vector<int> pivot_of(unknowns, -1);
        for (size_t col = 0; col < unknowns && pivot_row < rows.size(); ++col) {
            size_t sel = pivot_row;
            while (sel < rows.size() && rows[sel][col] == 0)
                ++sel;
            if (sel == rows.size())
                continue;
            std::swap(rows[sel], rows[pivot_row]);
            std::swap(rhs[sel], rhs[pivot_row]);
            Rational inv = Rational(1) / rows[pivot_row][col];
            for (auto& v : rows[pivot_row])
                v *= inv;
            for (auto& v : rhs[pivot_row])
                v *= inv;
            for (size_t r = 0; r < rows.size(); ++r) {
                if (r == pivot_row || rows[r][col] == 0)
                    continue;
                Rational factor = rows[r][col];
                for (size_t j = 0; j < unknowns; ++j)
                    rows[r][j] -= factor * rows[pivot_row][j];
                for (size_t j = 0; j < cols; ++j)
                    rhs[r][j] -= factor * rhs[pivot_row][j];
            }
            pivot_of[col] = static_cast<int>(pivot_row);
            ++pivot_row;
        }
        for (size_t r = pivot_row; r < rows.size(); ++r)
            for (size_t j = 0; j < cols; ++j)
                if (rhs[r][j] != 0)
                    throw NonHomogenizableError("inconsistent homogeneity constraints");
        std::vector<std::vector<Rational>> sol(unknowns, std::vector<Rational>(cols, Rational(0)));
        for (size_t col = 0; col < unknowns; ++col)
            if (pivot_of[col] >= 0)
                sol[col] = rhs[static_cast<size_t>(pivot_of[col])];
        return sol;
    }
};

std::vector<Monomial> degree_one_basis(const BasePtr& base) {
    std::vector<Monomial> out;
    const auto& syms = base->symbols();
    for (size_t i = 0; i < syms.size(); ++i) {
        if (base->symbol_degree(static_cast<int>(i)) == 1) {
            Monomial m(syms.size(), 0);
            m[i] = 1;
            out.push_back(std::move(m));
        }
    }
    return out;
}

std::vector<Rational> decompose_degree_one(const ChowClass& a, const std::vector<Monomial>& basis) {
    std::vector<Rational> coords(basis.size(), Rational(0));
    for (const auto& [mono, coeff] : a.terms()) {
        auto it = std::find(basis.begin(), basis.end(), mono);
        if (it == basis.end())
            throw ConfigError("section class is not a combination of degree-1 symbols");
        coords[static_cast<size_t>(it - basis.begin())] = coeff;
    }
    return coords;
}

} // namespace

const std::vector<std::string>& family_names() {
    static const std::vector<std::string> names = {"weierstrass", "e6", "e7",
                                                   "e7prime", "d5", "q7"};
    return names;
}

const FamilyData& family_data(const std::string& name) {
    const auto& m = catalog_map();
    auto it = m.find(name);
    if (it == m.end())
        throw CatalogError("unknown family: " + name);
    return it->second;
}

BasePtr formal_base_for(const FamilyData& fam, int dim) {
    return BaseGeometry::formal(dim, fam.line_symbols);
}

BasePtr projective_base_for(const FamilyData& fam, int n, const std::vector<int>& line_values) {
    if (line_values.size() != fam.line_symbols.size())
        throw ConfigError("family " + fam.name + " needs " + std::to_string(fam.line_symbols.size()) +
                          " line bundle assignment(s), got " + std::to_string(line_values.size()));
    std::vector<std::pair<std::string, int>> assign;
    for (size_t i = 0; i < line_values.size(); ++i)
        assign.emplace_back(fam.line_symbols[i], line_values[i]);
    return BaseGeometry::projective(n, std::move(assign));
}

TwistSystemResult solve_twist_system(const BasePtr& base,
                                     const std::map<std::string, ChowClass>& sections,
                                     size_t coord_count,
                                     const std::vector<std::vector<TwistMonomial>>& equations) {
    if (coord_count == 0)
        throw ConfigError("twist system needs at least one coordinate");
    if (equations.empty())
        throw ConfigError("twist system needs at least one equation");
    auto basis = degree_one_basis(base);
    size_t cols = basis.size();
    size_t unknowns = (coord_count - 1) + equations.size();

    LinearSolve sys;
    sys.unknowns = unknowns;
    std::vector<int> zeta_degrees;
    for (size_t q = 0; q < equations.size(); ++q) {
        const auto& eq = equations[q];
        if (eq.empty())
            throw ConfigError("equation " + std::to_string(q) + " has no monomials");
        int deg = -1;
        for (const auto& mono : eq) {
            if (mono.exponents.size() != coord_count)
                throw ConfigError("monomial exponent count does not match the coordinate count");
            int total = 0;
            for (int e : mono.exponents) {
                if (e < 0)
                    throw ConfigError("negative exponent in a twist monomial");
                total += e;
            }
            if (deg < 0)
                deg = total;
            else if (deg != total)
                throw NonHomogenizableError("monomials of one equation have different fiber degrees");

            std::vector<Rational> coeffs(unknowns, Rational(0));
            for (size_t i = 1; i < coord_count; ++i)
                coeffs[i - 1] = Rational(mono.exponents[i]);
            coeffs[coord_count - 1 + q] = Rational(-1);

            std::vector<Rational> rhs(cols, Rational(0));
            for (const auto& sname : mono.sections) {
                auto it = sections.find(sname);
                if (it == sections.end())
                    throw ConfigError("unknown section name: " + sname);
                auto sc = decompose_degree_one(it->second, basis);
                for (size_t j = 0; j < cols; ++j)
                    rhs[j] -= sc[j];
            }
            sys.rows.push_back(std::move(coeffs));
            sys.rhs.push_back(std::move(rhs));
        }
        zeta_degrees.push_back(deg);
    }

    auto sol = sys.solve(cols);
    auto assemble = [&](size_t unknown_idx) {
        ChowClass out = base->zero();
        for (size_t j = 0; j < cols; ++j) {
            if (sol[unknown_idx][j] != 0) {
                ChowClass term(base);
                term.add_term(basis[j], sol[unknown_idx][j]);
                out += term;
            }
        }
        return out;
    };

    TwistSystemResult res;
    res.twists.push_back(base->zero());
    for (size_t i = 1; i < coord_count; ++i)
        res.twists.push_back(assemble(i - 1));
    for (size_t q = 0; q < equations.size(); ++q)
        res.equation_classes.push_back(assemble(coord_count - 1 + q));
    res.zeta_degrees = std::move(zeta_degrees);
    return res;
}

TwistSolveResult solve_twists(const BasePtr& base,
                              const std::map<std::string, ChowClass>& sections,
                              size_t coord_count,
                              const std::vector<TwistMonomial>& monomials) {
    auto r = solve_twist_system(base, sections, coord_count, {monomials});
    return {std::move(r.twists), std::move(r.equation_classes[0]), r.zeta_degrees[0]};
}

std::pair<const CompleteIntersection*, const StratificationTable*>
FamilyScenario::locate(const std::string& owner, int piece) const {
    Located l = locate_in(lhs, rhs, owner, piece);
    return {l.model, l.table};
}

ChowClass lhs_csm(const FamilyScenario& sc) {
    if (sc.lhs.double_cover)
        return double_cover_csm(sc.lhs.model);
    return csm_smooth_ci(sc.lhs.model);
}

FamilyScenario instantiate_scenario(const FamilyData& data, const BasePtr& base) {
    if (!base)
        throw ConfigError("no base geometry given");
    if (base->line_slots().size() < data.line_symbols.size())
        throw ConfigError("family " + data.name + " needs " + std::to_string(data.line_symbols.size()) +
                          " line symbol(s); the base provides " + std::to_string(base->line_slots().size()));

    std::map<std::string, ChowClass> sections;
    for (const auto& [name, comb] : data.sections)
        sections.emplace(name, line_comb_class(base, comb));

    StratumRegistry registry(base);
    for (const auto& s : data.strata)
        register_stratum(registry, base, s);

    ResolutionDatum rhs;
    for (const auto& c : data.components) {
        ResolutionComponent rc{c.name, c.multiplicity, {}};
        for (const auto& p : c.pieces)
            rc.pieces.push_back({build_model(base, p.model), build_table(p.table)});
        rhs.components.push_back(std::move(rc));
    }
    for (const auto& x : data.intersections) {
        ResolutionIntersection rx{x.first, x.second, x.name, {}};
        for (const auto& p : x.pieces)
            rx.pieces.push_back({build_model(base, p.model), build_table(p.table)});
        rhs.intersections.push_back(std::move(rx));
    }

    LhsPresentation lhs{data.lhs.double_cover, build_model(base, data.lhs.model), std::nullopt,
                        std::nullopt};
    if (!data.lhs.table.empty())
        lhs.table = build_table(data.lhs.table);
    if (!data.lhs.push.empty())
        lhs.documented_push = build_function(data.lhs.push);
    if (data.lhs.double_cover && lhs.model.ambient.rank() != 2)
        throw CatalogError("family " + data.name + ": a double-cover branch lives in a rank-2 tower");

    ConstructibleFunction expected = build_function(data.expected_pushforward);

    // gate: the resolution tables must reproduce the documented pushforward
    ConstructibleFunction actual = specialization_pushforward(rhs, registry);
    if (!(actual == expected))
        throw CatalogError("family " + data.name + ": resolution tables push to " + to_string(actual) +
                           ", catalogued " + to_string(expected));

    // gate: the generic-fiber table, when catalogued, must match its function
    if (lhs.table && lhs.documented_push) {
        ConstructibleFunction lf = push_stratified(*lhs.table, registry);
        if (!(lf == *lhs.documented_push))
            throw CatalogError("family " + data.name + ": generic-fiber table pushes to " + to_string(lf) +
                               ", catalogued " + to_string(*lhs.documented_push));
    }

    // gate: every catalogued equation system must homogenize to exactly the
    // tower twists and hypersurface classes of its model
    for (const auto& ts : data.twist_systems) {
        Located at = locate_in(lhs, rhs, ts.owner, ts.piece);
        const CompleteIntersection& model = *at.model;
        std::string where = "family " + data.name + ", model " + ts.owner + "/" + std::to_string(ts.piece);
        if (ts.equations.size() != model.hypersurfaces.size())
            throw CatalogError(where + ": " + std::to_string(ts.equations.size()) + " equation(s) for " +
                               std::to_string(model.hypersurfaces.size()) + " hypersurface(s)");
        TwistSystemResult solved =
            solve_twist_system(base, sections, model.ambient.summands.size(), ts.equations);
        for (size_t i = 0; i < solved.twists.size(); ++i)
            if (solved.twists[i] != model.ambient.summands[i])
                throw CatalogError(where + ": solved twist " + std::to_string(i) + " is " +
                                   to_string(solved.twists[i]) + ", catalogued " +
                                   to_string(model.ambient.summands[i]));
        for (size_t q = 0; q < ts.equations.size(); ++q) {
            if (solved.zeta_degrees[q] != model.hypersurfaces[q].zeta_coeff)
                throw CatalogError(where + ": equation " + std::to_string(q) + " has fiber degree " +
                                   std::to_string(solved.zeta_degrees[q]) + ", catalogued " +
                                   std::to_string(model.hypersurfaces[q].zeta_coeff));
            if (solved.equation_classes[q] != model.hypersurfaces[q].base_part)
                throw CatalogError(where + ": equation " + std::to_string(q) + " homogenizes to " +
                                   to_string(solved.equation_classes[q]) + ", catalogued " +
                                   to_string(model.hypersurfaces[q].base_part));
        }
    }

    // gate: the solve plan must cover every unknown stratum
    std::set<std::string> planned;
    std::vector<SolveStep> plan;
    for (const auto& s : data.solve_plan) {
        if (!registry.has(s.unknown) || !registry.is_unknown(s.unknown))
            throw CatalogError("family " + data.name + ": solve step for " + s.unknown +
                               ", which is not an unknown stratum");
        locate_in(lhs, rhs, s.owner, s.piece); // existence check
        planned.insert(s.unknown);
        plan.push_back({s.unknown, s.owner, s.piece});
    }
    for (const auto& s : data.strata)
        if (s.unknown && !planned.count(s.name))
            throw CatalogError("family " + data.name + ": unknown stratum " + s.name +
                               " has no solve step");

    return FamilyScenario{data.name, base,    std::move(lhs),      std::move(rhs),
                          expected,  registry, std::move(plan),     std::move(sections)};
}

FamilyScenario instantiate_family(const std::string& name, const BasePtr& base) {
    return instantiate_scenario(family_data(name), base);
}

} // namespace csm
