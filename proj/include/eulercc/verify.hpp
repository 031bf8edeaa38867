#pragma once

#include "eulercc/report.hpp"

namespace eulercc {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail; // filled on failure
};

struct VerifyOptions {
    std::string case_filter;  // run only this case's checks when nonempty
    bool corrupt = false;     // negative-control hook: damages one catalog link
};

struct VerifyOutcome {
    std::vector<CheckResult> checks;
    int passed = 0;
    int failed = 0;
    std::string text; // one PASS/FAIL line per check plus a RESULT line
    int exit_code = 0;
};

// The whole verification battery over the built-in catalog: validation,
// the main identity for every case x sheaf, torus localization and
// multiplicity matching, smooth-closure and Hopf-style consistency, the
// pinned expected values, the Weyl orbit-stabilizer battery, and the
// volume oracle battery. Deterministic output.
VerifyOutcome run_verify(const VerifyOptions& options = {});

// >= 10 deterministic point specs (CLI grammar) per coordinate count,
// mixing generic, repeated, inverse-paired and torsion coordinates.
std::vector<std::string> sample_point_specs(int coordinate_count);

// The classical types of rank <= 3 exercised by the orbit battery.
std::vector<RootSystem> rank_le3_root_systems();

} // namespace eulercc
