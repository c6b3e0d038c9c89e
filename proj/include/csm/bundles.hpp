#pragma once
// Split projective bundles P(M_1 + ... + M_r) over a base, their zeta
// calculus, and pushforwards. Convention fixed project-wide: the
// homogeneous coordinate attached to summand i has divisor class
// zeta + m_i, so the Grothendieck relation is prod_i (zeta + m_i) = 0
// and c(T_{P/B}) = prod_i (1 + zeta + m_i).
//
// A rank-1 tower with summand 0 is the base itself; complete
// intersections directly in the base are presented that way.

#include <optional>
#include <vector>

#include "csm/ring.hpp"

namespace csm {

struct ProjBundle {
    BasePtr base;
    std::vector<ChowClass> summands; // degree-1 classes m_1..m_r

    int rank() const { return static_cast<int>(summands.size()); }
    int rel_dim() const { return rank() - 1; }
    int total_dim() const { return base->dim() + rel_dim(); }
    bool operator==(const ProjBundle& o) const;
};

// Polynomial in zeta with ChowClass coefficients. Arithmetic lives in
// free functions that take the tower, since the Grothendieck relation
// depends on it.
class TowerClass {
public:
    static TowerClass zero(const ProjBundle& P);
    static TowerClass one(const ProjBundle& P);

    const std::vector<ChowClass>& coeffs() const { return coeffs_; }
    int zeta_degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const ChowClass& coeff(int j) const;
    bool is_zero() const;

    TowerClass& add_zeta_term(int zeta_power, const ChowClass& c);
    friend TowerClass operator+(TowerClass a, const TowerClass& b);
    friend TowerClass operator-(TowerClass a, const TowerClass& b);
    friend TowerClass operator*(const TowerClass& a, const TowerClass& b);
    bool operator==(const TowerClass& o) const;

private:
    explicit TowerClass(BasePtr base) : base_(std::move(base)) {}
    void trim();
    BasePtr base_;
    std::vector<ChowClass> coeffs_; // coeffs_[j] multiplies zeta^j
};

// Base class viewed upstairs (zeta-degree 0).
TowerClass pullback(const ChowClass& a, const ProjBundle& P);

// Normal form with zeta-degree < rank via zeta^r = -sum e_k zeta^(r-k).
TowerClass reduce_zeta(TowerClass a, const ProjBundle& P);

// pi_*: after reduction only the zeta^(r-1) coefficient survives.
ChowClass push_to_base(const TowerClass& a, const ProjBundle& P);

// Inverse of a tower class with constant term 1 (truncated, exact).
TowerClass tower_invert(const TowerClass& a, const ProjBundle& P);

// c(TB) * prod (1 + zeta + m_i), truncated at total dimension.
TowerClass tangent_chern(const ProjBundle& P);

// A degree-1 hypersurface class a*zeta + (base part); the zeta
// coefficient must be non-negative.
struct HypersurfaceClass {
    int zeta_coeff = 0;
    ChowClass base_part;
    TowerClass as_tower(const ProjBundle& P) const;
    bool operator==(const HypersurfaceClass& o) const;
};

struct CompleteIntersection {
    ProjBundle ambient;
    std::vector<HypersurfaceClass> hypersurfaces;
    bool assumed_smooth = true;

    int codim() const { return static_cast<int>(hypersurfaces.size()); }
    int dim() const { return ambient.total_dim() - codim(); }
    bool operator==(const CompleteIntersection& o) const;
};

// Pushforward to the base of c(TZ) cap [Z] for a smooth complete
// intersection Z: push( c(TB) prod(1+zeta+m_i) * prod h_j / prod(1+h_j) ).
ChowClass csm_smooth_ci(const CompleteIntersection& Z);

// Same formula, virtual flavour: no smoothness flag consulted. For a
// singular member with the same ambient presentation it returns the same
// class as the smooth one, which is the point.
ChowClass chern_fulton_ci(const CompleteIntersection& Z);

// integrate_top of csm_smooth_ci; requires a concrete base.
Rational euler_char_ci(const CompleteIntersection& Z);

// CSM pushforward of the double cover of Z.ambient's total space branched
// along Z: 2 * push(c(T ambient)) - csm_smooth_ci(Z), a class on the base.
ChowClass double_cover_csm(const CompleteIntersection& branch);

} // namespace csm
