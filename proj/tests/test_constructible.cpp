#include <doctest.h>

#include <random>

#include "csm/constructible.hpp"

using namespace csm;

namespace {

// Weierstrass geometry over a concrete base, enough for registry tests:
// Y (class 3z+6L in the (0,2L,3L) tower), the limit component D1 (conic
// 2z+2L in the (0,L,-2L) tower), and the base strata O, C, S.
struct WeierstrassPieces {
    BasePtr base;
    CompleteIntersection Y, D1conic;
    StratumRegistry registry;

    explicit WeierstrassPieces(int n, int l)
        : base(BaseGeometry::projective(n, {{"L", l}})), registry(make_registry(n, l)) {
        ChowClass L = base->line_class(0);
        ProjBundle yt{base, {base->zero(), Rational(2) * L, Rational(3) * L}};
        Y = CompleteIntersection{yt, {{3, Rational(6) * L}}, true};
        ProjBundle dt{base, {base->zero(), L, Rational(-2) * L}};
        D1conic = CompleteIntersection{dt, {{2, Rational(2) * L}}, true};
    }

private:
    StratumRegistry make_registry(int n, int l) {
        base = BaseGeometry::projective(n, {{"L", l}});
        StratumRegistry reg(base);
        ChowClass L = base->line_class(0);
        ProjBundle trivial{base, {base->zero()}};
        auto base_ci = [&](std::vector<int> degrees) {
            CompleteIntersection ci{trivial, {}, true};
            for (int d : degrees)
                ci.hypersurfaces.push_back({0, Rational(d) * L});
            return ci;
        };
        reg.register_smooth("O", base_ci({2}));
        // Strata of codimension beyond the base dimension are empty there.
        if (n >= 2)
            reg.register_smooth("C", base_ci({4, 6}));
        else
            reg.register_class("C", base->zero());
        if (n >= 3)
            reg.register_smooth("S", base_ci({2, 4, 6}));
        else
            reg.register_class("S", base->zero());
        reg.declare_unknown("D");
        reg.declare_unknown("Delta");
        return reg;
    }
};

StratificationTable lhs_table() {
    return {{{"B", "Delta", 0}, {"Delta", "C", 1}, {"C", std::nullopt, 2}}};
}

StratificationTable d1_table() {
    return {{{"B", "D", 2}, {"D", "S", 3}, {"S", std::nullopt, 2}}};
}

} // namespace

TEST_CASE("stratified pushforward from fiber data") {
    WeierstrassPieces w(1, 2);
    ConstructibleFunction lhs = push_stratified(lhs_table(), w.registry);
    ConstructibleFunction expect = ConstructibleFunction::indicator("Delta") + ConstructibleFunction::indicator("C");
    CHECK(lhs == expect);

    ConstructibleFunction d1 = push_stratified(d1_table(), w.registry);
    ConstructibleFunction expect2;
    expect2.add("B", 2).add("D", 1).add("S", -1);
    CHECK(d1 == expect2);

    StratificationTable single{{{"B", std::nullopt, 7}}};
    ConstructibleFunction seven;
    seven.add("B", 7);
    CHECK(push_stratified(single, w.registry) == seven);

    StratificationTable bogus{{{"B", "nope", 1}}};
    CHECK_THROWS_AS(push_stratified(bogus, w.registry), RegistryError);
}

TEST_CASE("CSM of functions is the linear extension") {
    WeierstrassPieces w(2, 3);
    CHECK(csm_of_function(ConstructibleFunction::indicator("B"), w.registry) == w.base->tangent_class());

    auto [dcsm, solved] = solve_stratum_csm(d1_table(), csm_smooth_ci(w.D1conic), w.registry);
    ConstructibleFunction f;
    f.add("O", 2).add("D", 1).add("S", -1);
    ChowClass lin = Rational(2) * solved.csm("O") + solved.csm("D") - solved.csm("S");
    CHECK(csm_of_function(f, solved) == lin);

    CHECK_THROWS_AS(csm_of_function(ConstructibleFunction::indicator("D"), w.registry), UnsolvedStratumError);
}

TEST_CASE("Euler characteristics of functions over P1") {
    WeierstrassPieces w(1, 2);
    CHECK(euler_of_function(ConstructibleFunction::indicator("B"), w.registry) == 2);
    CHECK(euler_of_function(ConstructibleFunction(), w.registry) == 0);

    auto [dcsm, reg] = solve_stratum_csm(lhs_table(), csm_smooth_ci(w.Y), w.registry);
    // Delta is 24 reduced points on P1 when L = O(2).
    CHECK(euler_of_function(ConstructibleFunction::indicator("Delta"), reg) == 24);
    ConstructibleFunction lhs = push_stratified(lhs_table(), reg);
    CHECK(euler_of_function(lhs, reg) == 24);
}

TEST_CASE("solving a singular stratum from its resolution table") {
    WeierstrassPieces w(2, 3);
    auto [dcsm, reg] = solve_stratum_csm(d1_table(), csm_smooth_ci(w.D1conic), w.registry);
    // push c(T D1) - 2c(TB) + c_SM(S), by rearranging the table
    ChowClass expect = csm_smooth_ci(w.D1conic) - Rational(2) * w.base->tangent_class() + reg.csm("S");
    CHECK(dcsm == expect);
    // D is a smooth degree-24 plane curve for this scenario: chi = -504
    CHECK(integrate_top(dcsm) == -504);
    CHECK(euler_of_function(ConstructibleFunction::indicator("D"), reg) == -504);
}

TEST_CASE("stratum solving rejects ill-posed tables") {
    WeierstrassPieces w(2, 3);
    StratificationTable no_unknown{{{"B", "O", 2}, {"O", std::nullopt, 1}}};
    CHECK_THROWS_AS(solve_stratum_csm(no_unknown, w.base->tangent_class(), w.registry), UnderdeterminedError);

    StratificationTable two_unknown{{{"D", std::nullopt, 1}, {"Delta", std::nullopt, 1}}};
    CHECK_THROWS_AS(solve_stratum_csm(two_unknown, w.base->tangent_class(), w.registry), UnderdeterminedError);

    StratificationTable non_unit{{{"B", std::nullopt, 1}, {"D", std::nullopt, 2}}};
    CHECK_THROWS_AS(solve_stratum_csm(non_unit, w.base->tangent_class(), w.registry), UnderdeterminedError);
}

TEST_CASE("registry updates are copies, not mutations") {
    WeierstrassPieces w(1, 2);
    auto [dcsm, reg] = solve_stratum_csm(lhs_table(), csm_smooth_ci(w.Y), w.registry);
    CHECK(reg.is_unknown("Delta") == false);
    CHECK(w.registry.is_unknown("Delta") == true);
}

TEST_CASE("pushforward and CSM evaluation are additive") {
    WeierstrassPieces w(2, 3);
    auto [dcsm, reg] = solve_stratum_csm(d1_table(), csm_smooth_ci(w.D1conic), w.registry);

    std::mt19937_64 rng(2201);
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<size_t> pick(0, 3);
    const std::vector<std::string> names = {"B", "O", "D", "S"};
    int failures = 0;
    int cases = 1100;
    for (int i = 0; i < cases; ++i) {
        ConstructibleFunction f, g;
        for (int t = 0; t < 3; ++t) {
            f.add(names[pick(rng)], coeff(rng));
            g.add(names[pick(rng)], coeff(rng));
        }
        if (csm_of_function(f + g, reg) != csm_of_function(f, reg) + csm_of_function(g, reg))
            ++failures;
        // table concatenation pushes to the sum of the pushes
        StratificationTable t1{{{"B", "D", coeff(rng)}, {"D", std::nullopt, coeff(rng)}}};
        StratificationTable t2{{{"O", "S", coeff(rng)}, {"S", std::nullopt, coeff(rng)}}};
        StratificationTable joined;
        joined.rows = t1.rows;
        joined.rows.insert(joined.rows.end(), t2.rows.begin(), t2.rows.end());
        if (push_stratified(joined, reg) != push_stratified(t1, reg) + push_stratified(t2, reg))
            ++failures;
    }
    CHECK(failures == 0);
    CHECK(cases >= 1000);
}
