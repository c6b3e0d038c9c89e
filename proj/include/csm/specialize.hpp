#pragma once
// Specialization of the indicator function of a one-parameter family to
// its central fiber, computed from a normal-crossing resolution: with
// components D_i of multiplicity m_i and pairwise intersections, the
// specialized function is
//     sum_i m_i 1_{D_i} - sum_{i<j} (m_i + m_j) 1_{D_i * D_j},
// and both its pushforward to the base and its CSM class are assembled
// from smooth presentations only.
//
// A component may be presented in several pieces: when it is a blowup of
// a simpler smooth variety along a smooth center, its pushforward (of
// the indicator function and of the CSM class alike) is the sum of the
// pushforwards of the blown-down variety and of the center, so each
// piece carries its own complete intersection model and stratification
// table and the component contributes the sum over its pieces.

#include <string>
#include <vector>

#include "csm/constructible.hpp"

namespace csm {

struct ComponentPiece {
    CompleteIntersection model;
    StratificationTable table;
};

struct ResolutionComponent {
    std::string name;
    int multiplicity = 1;
    std::vector<ComponentPiece> pieces;
};

struct ResolutionIntersection {
    std::string first, second; // component names
    std::string name;          // its own label, e.g. "X"
    std::vector<ComponentPiece> pieces;
};

struct ResolutionDatum {
    std::vector<ResolutionComponent> components;
    std::vector<ResolutionIntersection> intersections;
};

// The specialized indicator function on the resolution's own strata
// (component and intersection labels; these are upstairs objects, a
// namespace separate from the base strata).
ConstructibleFunction delta_function(const ResolutionDatum& r);

// Pushforward to the base: every delta term mapped through its
// stratification tables. Registry entries are consulted for existence.
ConstructibleFunction specialization_pushforward(const ResolutionDatum& r, const StratumRegistry& reg);

// CSM class on the base, from smooth models only.
ChowClass specialization_csm(const ResolutionDatum& r);

} // namespace csm
