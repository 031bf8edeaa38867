#pragma once

#include "eulercc/casefile.hpp"

namespace eulercc {

// Outcome of driving the main identity end-to-end on one case + sheaf.
struct ComputeOutcome {
    std::string report;     // full fixed-format text
    bool validation_ok = false;
    bool match = false;     // chi_integral == chi_cc (meaningful when validation_ok)
};

// Renders the fixed-format compute report: validation summary, strata table
// (id, dim, kind, chi_c, gdeg), multiplicity table, both sides of the main
// identity as chi_integral= / chi_cc= lines, and MATCH / MISMATCH.
// When validation fails the report carries the violation list instead of the
// computation. Throws invalid_input_error when the sheaf is unknown.
ComputeOutcome run_compute(const CaseSpec& c, const std::string& sheaf_name);

// Fixed-format report for the Weyl-orbit question: |W|, orbit size,
// stabilizer order, orbit Euler characteristic, orbit Gaussian degree.
std::string orbit_report(const RootSystem& rs, const TorusPoint& t);

} // namespace eulercc
