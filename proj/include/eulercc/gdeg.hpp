#pragma once

#include "eulercc/strata.hpp"
#include "eulercc/weyl.hpp"

namespace eulercc {

// Gaussian degree of the adjoint orbit through a torus point: the number of
// intersection points of the orbit with the maximal torus, i.e. the Weyl
// orbit size.
Int gdeg_orbit(const RootSystem& rs, const TorusPoint& t);

// Gaussian degree of a generic torus hypersurface with the given Newton
// polytope: the normalized volume.
Int gdeg_generic_hypersurface(const LatticePolytope& p);

// Gaussian degree of a stratum via the torus reduction rules:
// nonsemisimple strata have degree 0; semisimple strata reduce to their
// torus model (finite sets count points, positive-dimensional subtori and
// open subsets of T carry nowhere-zero generic invariant forms, generic
// hypersurfaces evaluate through their Newton polytope, declared values
// pass through).
Int gdeg_stratum(const Stratum& s);

// Nonnegative degrees per stratum id.
struct GdegAssignment {
    std::map<std::string, Int> values;

    Int at(const std::string& id) const;
};

GdegAssignment gdeg_assignment(const StratPoset& poset);

// Both sides of the Gauss–Bonnet identity. chi_via_integral is the Euler
// integral of f; chi_via_cc is sum_alpha c_alpha * gdeg(X_alpha). Equality is
// reported, never assumed.
struct GaussBonnetResult {
    Int chi_via_integral = 0;
    Int chi_via_cc = 0;
    CharCycle multiplicities;
    GdegAssignment gdegs;

    bool matches() const { return chi_via_integral == chi_via_cc; }
};

GaussBonnetResult gauss_bonnet(const StratPoset& poset, const LinkData& links,
                               const ConstructibleFunction& f);

} // namespace eulercc
