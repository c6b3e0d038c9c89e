#include "csm/bundles.hpp"

namespace csm {

namespace {

void require_tower(const ProjBundle& P) {
    if (P.rank() < 1)
        throw ConfigError("projective tower needs rank >= 1");
    if (!P.base)
        throw ConfigError("projective tower without a base");
    for (const auto& m : P.summands) {
        if (!m.bound() || *m.base() != *P.base)
            throw BaseMismatchError("tower summand over the wrong base");
        if (!m.is_zero() && (degree_component(m, 1) != m))
            throw ConfigError("tower summands must be degree-1 classes");
    }
}

// Elementary symmetric polynomials e_0..e_r of the summand classes.
std::vector<ChowClass> elementary_symmetric(const ProjBundle& P) {
    std::vector<ChowClass> e(P.summands.size() + 1, P.base->zero());
    e[0] = P.base->one();
    size_t used = 0;
    for (const auto& m : P.summands) {
        ++used;
        for (size_t k = used; k >= 1; --k)
            e[k] += m * e[k - 1];
    }
    return e;
}

} // namespace

bool ProjBundle::operator==(const ProjBundle& o) const {
    return (base == o.base || *base == *o.base) && summands == o.summands;
}

TowerClass TowerClass::zero(const ProjBundle& P) {
    return TowerClass(P.base);
}

TowerClass TowerClass::one(const ProjBundle& P) {
    TowerClass t(P.base);
    t.add_zeta_term(0, P.base->one());
    return t;
}

const ChowClass& TowerClass::coeff(int j) const {
    static const ChowClass unbound;
    if (j < 0 || j > zeta_degree())
        throw ConfigError("zeta power out of range");
    return coeffs_[static_cast<size_t>(j)];
}

bool TowerClass::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero())
            return false;
    return true;
}

TowerClass& TowerClass::add_zeta_term(int zeta_power, const ChowClass& c) {
    if (zeta_power < 0)
        throw ConfigError("negative zeta power");
    if (!c.bound() || *c.base() != *base_)
        throw BaseMismatchError("tower coefficient over the wrong base");
    while (static_cast<int>(coeffs_.size()) <= zeta_power)
        coeffs_.push_back(base_->zero());
    coeffs_[static_cast<size_t>(zeta_power)] += c;
    trim();
    return *this;
}

void TowerClass::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

TowerClass operator+(TowerClass a, const TowerClass& b) {
    for (size_t j = 0; j < b.coeffs_.size(); ++j)
        a.add_zeta_term(static_cast<int>(j), b.coeffs_[j]);
    return a;
}

TowerClass operator-(TowerClass a, const TowerClass& b) {
    for (size_t j = 0; j < b.coeffs_.size(); ++j)
        a.add_zeta_term(static_cast<int>(j), -b.coeffs_[j]);
    return a;
}

TowerClass operator*(const TowerClass& a, const TowerClass& b) {
    if (*a.base_ != *b.base_)
        throw BaseMismatchError("tower product over different bases");
    TowerClass r(a.base_);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero())
            continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            r.add_zeta_term(static_cast<int>(i + j), a.coeffs_[i] * b.coeffs_[j]);
    }
    return r;
}

bool TowerClass::operator==(const TowerClass& o) const {
    if (*base_ != *o.base_)
        throw BaseMismatchError("tower comparison over different bases");
    return coeffs_ == o.coeffs_;
}

TowerClass pullback(const ChowClass& a, const ProjBundle& P) {
    require_tower(P);
    TowerClass t = TowerClass::zero(P);
    t.add_zeta_term(0, a);
    return t;
}

TowerClass reduce_zeta(TowerClass a, const ProjBundle& P) {
    require_tower(P);
    const int r = P.rank();
    auto e = elementary_symmetric(P);
    while (a.zeta_degree() >= r) {
        int top = a.zeta_degree();
        ChowClass lead = a.coeff(top);
        TowerClass reduced = TowerClass::zero(P);
        for (int j = 0; j < top; ++j)
            reduced.add_zeta_term(j, a.coeff(j));
        // zeta^top = zeta^(top-r) * (-e_1 zeta^(r-1) - ... - e_r)
        for (int k = 1; k <= r; ++k)
            reduced.add_zeta_term(top - k, -(e[static_cast<size_t>(k)] * lead));
        a = reduced;
    }
    return a;
}

ChowClass push_to_base(const TowerClass& a, const ProjBundle& P) {
    TowerClass n = reduce_zeta(a, P);
    if (n.zeta_degree() < P.rank() - 1)
        return P.base->zero();
    return n.coeff(P.rank() - 1);
}

TowerClass tower_invert(const TowerClass& a, const ProjBundle& P) {
    require_tower(P);
    TowerClass n = reduce_zeta(a, P);
    if (n.zeta_degree() < 0 || n.coeff(0).constant_term() != 1)
        throw NonUnitError("tower inversion requires constant term 1");
    // x := a - 1 has positive total degree, so the geometric series stops
    // at the total dimension of the tower.
    TowerClass x = n - TowerClass::one(P);
    TowerClass result = TowerClass::one(P);
    TowerClass pow = TowerClass::one(P);
    for (int k = 1; k <= P.total_dim() && !pow.is_zero(); ++k) {
        pow = reduce_zeta(pow * x, P);
        result = (k % 2) ? result - pow : result + pow;
    }
    return result;
}

TowerClass tangent_chern(const ProjBundle& P) {
    require_tower(P);
    TowerClass t = pullback(P.base->tangent_class(), P);
    for (const auto& m : P.summands) {
        TowerClass factor = TowerClass::one(P);
        factor.add_zeta_term(0, m);
        factor.add_zeta_term(1, P.base->one());
        t = reduce_zeta(t * factor, P);
    }
    return t;
}

TowerClass HypersurfaceClass::as_tower(const ProjBundle& P) const {
    if (zeta_coeff < 0)
        throw ConfigError("hypersurface class needs a non-negative zeta coefficient");
    TowerClass t = TowerClass::zero(P);
    if (zeta_coeff != 0)
        t.add_zeta_term(1, Rational(zeta_coeff) * P.base->one());
    t.add_zeta_term(0, base_part);
    return t;
}

bool HypersurfaceClass::operator==(const HypersurfaceClass& o) const {
    return zeta_coeff == o.zeta_coeff && base_part == o.base_part;
}

bool CompleteIntersection::operator==(const CompleteIntersection& o) const {
    return ambient == o.ambient && hypersurfaces == o.hypersurfaces &&
           assumed_smooth == o.assumed_smooth;
}

namespace {

ChowClass adjunction_class(const CompleteIntersection& Z) {
    const ProjBundle& P = Z.ambient;
    require_tower(P);
    if (Z.codim() > P.total_dim())
        throw DegeneratePresentationError("complete intersection codimension exceeds ambient dimension");
    TowerClass numerator = tangent_chern(P);
    TowerClass denominator = TowerClass::one(P);
    TowerClass fundamental = TowerClass::one(P);
    for (const auto& h : Z.hypersurfaces) {
        TowerClass ht = h.as_tower(P);
        fundamental = reduce_zeta(fundamental * ht, P);
        denominator = reduce_zeta(denominator * (TowerClass::one(P) + ht), P);
    }
    TowerClass total = reduce_zeta(numerator * tower_invert(denominator, P), P);
    total = reduce_zeta(total * fundamental, P);
    return push_to_base(total, P);
}

} // namespace

ChowClass csm_smooth_ci(const CompleteIntersection& Z) {
    return adjunction_class(Z);
}

ChowClass chern_fulton_ci(const CompleteIntersection& Z) {
    return adjunction_class(Z);
}

Rational euler_char_ci(const CompleteIntersection& Z) {
    if (!Z.ambient.base || !Z.ambient.base->concrete())
        throw NoIntegrationError("Euler characteristics need a projective base");
    return integrate_top(csm_smooth_ci(Z));
}

ChowClass double_cover_csm(const CompleteIntersection& branch) {
    CompleteIntersection total{branch.ambient, {}, true};
    ChowClass ambient_csm = csm_smooth_ci(total);
    return Rational(2) * ambient_csm - csm_smooth_ci(branch);
}

} // namespace csm
