#pragma once

#include "eulercc/gdeg.hpp"

namespace eulercc {

// One expected number with a provenance note saying how it was derived.
struct ExpectedValue {
    std::string key; // "<sheaf>:chi" or "<sheaf>:c:<stratum>"
    Int value = 0;
    std::string note;
};

// A fully populated built-in case: ambient group, stratification, links,
// a battery of sheaves (as chi functions), pinned expected values, and the
// strata whose closures are smooth (for the Hopf-style checks).
struct CaseSpec {
    std::string name;
    RootSystem group;
    StratPoset poset;
    LinkData links;
    std::map<std::string, ConstructibleFunction> sheaves;
    std::vector<ExpectedValue> expected;
    std::vector<std::string> smooth_closed;
};

// chi^c of (C*)^k minus m distinct points; the compact-support Euler
// characteristic of a torus vanishes in positive dimension and removing a
// point subtracts one. This is the localization oracle every catalog chi_c
// value is derived through.
Int chi_c_torus_minus_points(int k, Int m);

const std::vector<std::string>& catalog_names();

// Throws not_found_error listing the available names.
CaseSpec catalog_case(const std::string& name);

} // namespace eulercc
