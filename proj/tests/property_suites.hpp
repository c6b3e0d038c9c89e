#pragma once
// Randomized property suites shared between the unit tests and the
// acceptance runner. Each suite returns the number of failed cases and
// reports how many cases it ran through the out-parameter; seeds are
// fixed so failures reproduce.

#include <random>
#include <vector>

#include "csm/bundles.hpp"
#include "csm/ring.hpp"

namespace csm::props {

inline Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 4);
    return Rational(num(rng), den(rng));
}

inline ChowClass random_class(const BasePtr& base, std::mt19937_64& rng, int max_terms = 5) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> expo(0, 2);
    ChowClass c(base);
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        Monomial m(base->symbols().size(), 0);
        for (auto& e : m)
            e = expo(rng);
        c.add_term(m, random_rational(rng));
    }
    return c;
}

inline ChowClass random_unit_class(const BasePtr& base, std::mt19937_64& rng) {
    ChowClass c = random_class(base, rng);
    Monomial one(base->symbols().size(), 0);
    return c - c.constant_term() * base->one() + base->one();
}

inline BasePtr random_formal_base(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dims(1, 4);
    std::uniform_int_distribution<int> nlines(1, 2);
    int d = dims(rng);
    std::vector<std::string> lines = {"L"};
    if (nlines(rng) == 2)
        lines.push_back("S");
    return BaseGeometry::formal(d, lines);
}

// Associativity, commutativity, distributivity on random classes.
inline int suite_ring_axioms(int cases, int& ran) {
    std::mt19937_64 rng(1001);
    int failures = 0;
    for (ran = 0; ran < cases; ++ran) {
        BasePtr base = random_formal_base(rng);
        ChowClass a = random_class(base, rng);
        ChowClass b = random_class(base, rng);
        ChowClass c = random_class(base, rng);
        if ((a * b) * c != a * (b * c))
            ++failures;
        if (a * b != b * a)
            ++failures;
        if (a * (b + c) != a * b + a * c)
            ++failures;
    }
    return failures;
}

// u * invert(u) == 1 and invert(invert(u)) == u on unit-term classes.
inline int suite_series_inversion(int cases, int& ran) {
    std::mt19937_64 rng(1002);
    int failures = 0;
    for (ran = 0; ran < cases; ++ran) {
        BasePtr base = random_formal_base(rng);
        ChowClass u = random_unit_class(base, rng);
        ChowClass inv = series_invert(u);
        if (u * inv != base->one())
            ++failures;
        if (series_invert(inv) != u)
            ++failures;
    }
    return failures;
}

// component(a*b, k) = sum over i+j=k of component(a,i)*component(b,j),
// and specialize_base is a ring homomorphism.
inline int suite_grading_and_specialization(int cases, int& ran) {
    std::mt19937_64 rng(1003);
    std::uniform_int_distribution<int> ls(1, 5);
    int failures = 0;
    for (ran = 0; ran < cases; ++ran) {
        BasePtr base = random_formal_base(rng);
        ChowClass a = random_class(base, rng);
        ChowClass b = random_class(base, rng);
        ChowClass ab = a * b;
        for (int k = 0; k <= base->dim(); ++k) {
            ChowClass sum(base);
            for (int i = 0; i <= k; ++i)
                sum += degree_component(a, i) * degree_component(b, k - i);
            if (degree_component(ab, k) != sum)
                ++failures;
        }
        std::vector<std::pair<std::string, int>> assign;
        for (auto& name : base->line_slots())
            assign.emplace_back(name, ls(rng));
        BasePtr target = BaseGeometry::projective(base->dim(), assign);
        if (specialize_base(ab, target) != specialize_base(a, target) * specialize_base(b, target))
            ++failures;
    }
    return failures;
}

inline ProjBundle random_tower(const BasePtr& base, std::mt19937_64& rng, int min_rank = 2, int max_rank = 4) {
    std::uniform_int_distribution<int> ranks(min_rank, max_rank);
    std::uniform_int_distribution<int> twist(-2, 3);
    int r = ranks(rng);
    std::vector<ChowClass> summands;
    summands.push_back(base->zero());
    for (int i = 1; i < r; ++i) {
        ChowClass m = Rational(twist(rng)) * base->line_class(0);
        if (base->line_slots().size() > 1)
            m += Rational(twist(rng)) * base->line_class(1);
        summands.push_back(m);
    }
    return ProjBundle{base, summands};
}

// push(pullback(alpha) * beta) == alpha * push(beta).
inline int suite_projection_formula(int cases, int& ran) {
    std::mt19937_64 rng(1004);
    int failures = 0;
    for (ran = 0; ran < cases; ++ran) {
        BasePtr base = random_formal_base(rng);
        ProjBundle P = random_tower(base, rng);
        ChowClass alpha = random_class(base, rng);
        TowerClass beta = TowerClass::zero(P);
        std::uniform_int_distribution<int> zd(0, P.rank());
        for (int t = 0; t < 4; ++t)
            beta.add_zeta_term(zd(rng), random_class(base, rng, 2));
        beta = reduce_zeta(beta, P);
        TowerClass lhs = pullback(alpha, P) * beta;
        if (push_to_base(lhs, P) != alpha * push_to_base(beta, P))
            ++failures;
    }
    return failures;
}

// push(zeta^(r-1)) == 1 across ranks and twists.
inline int suite_pushforward_normalization(int cases, int& ran) {
    std::mt19937_64 rng(1005);
    int failures = 0;
    for (ran = 0; ran < cases; ++ran) {
        BasePtr base = random_formal_base(rng);
        ProjBundle P = random_tower(base, rng, 1, 5);
        TowerClass z = TowerClass::zero(P);
        z.add_zeta_term(P.rank() - 1, base->one());
        if (push_to_base(z, P) != base->one())
            ++failures;
    }
    return failures;
}

} // namespace csm::props
