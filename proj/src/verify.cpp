#include "eulercc/verify.hpp"

#include <cstdint>
#include <sstream>

namespace eulercc {

namespace {

// Small deterministic generator so verification output is reproducible
// across platforms and standard libraries.
struct Lcg {
    std::uint64_t state;

    std::uint64_t next() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state >> 33;
    }

    Int range(Int lo, Int hi) { // inclusive
        return lo + static_cast<Int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

IntMatrix random_unimodular(Lcg& rng, Eigen::Index d, int ops) {
    IntMatrix u = IntMatrix::Identity(d, d);
    for (int k = 0; k < ops; ++k) {
        switch (rng.range(0, 2)) {
            case 0: { // shear: row_j += c * row_i
                Eigen::Index i = rng.range(0, d - 1), j = rng.range(0, d - 1);
                if (i == j) break;
                Int cmul = rng.range(-2, 2);
                for (Eigen::Index c = 0; c < d; ++c)
                    u(j, c) = checked_add(u(j, c), checked_mul(cmul, u(i, c)));
                break;
            }
            case 1: { // swap two rows
                Eigen::Index i = rng.range(0, d - 1), j = rng.range(0, d - 1);
                u.row(i).swap(u.row(j));
                break;
            }
            default: { // negate a row
                Eigen::Index i = rng.range(0, d - 1);
                u.row(i) = -u.row(i);
                break;
            }
        }
    }
    return u;
}

LatticePolytope transformed(const LatticePolytope& p, const IntMatrix& u, const IntVector& shift) {
    IntMatrix pts = u * p.points();
    for (Eigen::Index j = 0; j < pts.cols(); ++j)
        pts.col(j) += shift;
    return LatticePolytope(std::move(pts));
}

struct Battery {
    std::vector<CheckResult> checks;

    void check(const std::string& name, bool pass, const std::string& detail = "") {
        checks.push_back({name, pass, pass ? "" : detail});
    }

    template <class A, class B>
    void check_eq(const std::string& name, const A& got, const B& want) {
        std::ostringstream detail;
        detail << "got " << got << ", want " << want;
        check(name, got == static_cast<A>(want), detail.str());
    }
};

ConstructibleFunction closure_indicator(const StratPoset& poset, std::size_t top) {
    ConstructibleFunction f;
    for (const auto& s : poset.strata()) f.set(s.id, 0);
    f.set(poset.strata()[top].id, 1);
    for (std::size_t b : poset.down_set(top)) f.set(poset.strata()[b].id, 1);
    return f;
}

void case_checks(Battery& battery, const CaseSpec& c) {
    const std::string prefix = c.name + "/";

    ValidationReport report = validate(c.poset, c.links);
    battery.check(prefix + "validate", report.ok(), report.str());
    if (!report.ok()) return; // nothing downstream is meaningful

    auto [tposet, tlinks] = torus_restriction(c.poset, c.links);

    for (const auto& [sheaf_name, f] : c.sheaves) {
        GaussBonnetResult gb = gauss_bonnet(c.poset, c.links, f);
        {
            std::ostringstream detail;
            detail << "chi_integral=" << gb.chi_via_integral << " chi_cc=" << gb.chi_via_cc;
            battery.check(prefix + "main-identity[" + sheaf_name + "]", gb.matches(), detail.str());
        }

        ConstructibleFunction ft = restrict_function(f, tposet);
        Int chi_g = euler_integral(c.poset, f);
        Int chi_t = euler_integral(tposet, ft);
        {
            std::ostringstream detail;
            detail << "chi(G)=" << chi_g << " chi(T)=" << chi_t;
            battery.check(prefix + "localization[" + sheaf_name + "]", chi_g == chi_t,
                          detail.str());
        }

        CharCycle cc_t = cc_multiplicities(tposet, tlinks, ft);
        bool multiplicities_agree = true;
        std::ostringstream mdetail;
        for (const auto& s : tposet.strata()) {
            Int in_g = gb.multiplicities.at(s.id);
            Int in_t = cc_t.at(s.id);
            if (in_g != in_t) {
                multiplicities_agree = false;
                mdetail << " c[" << s.id << "]: G=" << in_g << " T=" << in_t;
            }
        }
        battery.check(prefix + "multiplicity-matching[" + sheaf_name + "]", multiplicities_agree, mdetail.str());
    }

    // pinned expected values: "<sheaf>:chi", "<sheaf>:c:<id>", "gdeg:<id>"
    GdegAssignment gdegs = gdeg_assignment(c.poset);
    for (const ExpectedValue& ev : c.expected) {
        std::size_t p1 = ev.key.find(':');
        std::string head = ev.key.substr(0, p1);
        std::string rest = ev.key.substr(p1 + 1);
        Int got = 0;
        if (head == "gdeg") {
            got = gdegs.at(rest);
        } else {
            const ConstructibleFunction& f = c.sheaves.at(head);
            if (rest == "chi") {
                got = euler_integral(c.poset, f);
            } else {
                std::string id = rest.substr(rest.find(':') + 1);
                got = cc_multiplicities(c.poset, c.links, f).at(id);
            }
        }
        std::ostringstream detail;
        detail << "got " << got << ", want " << ev.value << " (" << ev.note << ")";
        battery.check(prefix + "expected[" + ev.key + "]", got == ev.value, detail.str());
    }

    // constant sheaf on a smooth closed invariant subvariety: top multiplicity
    // (-1)^dim, zero below; and the Hopf-style sign identity against gdeg
    for (const std::string& id : c.smooth_closed) {
        std::size_t top = c.poset.index_of(id);
        const Stratum& s = c.poset.strata()[top];
        ConstructibleFunction f = closure_indicator(c.poset, top);
        CharCycle cc = cc_multiplicities(c.poset, c.links, f);

        Int want_top = s.dim % 2 == 0 ? 1 : -1;
        bool ok = cc.at(id) == want_top;
        std::ostringstream detail;
        detail << "c[" << id << "]=" << cc.at(id) << ", want " << want_top;
        for (std::size_t b : c.poset.down_set(top)) {
            const std::string& below = c.poset.strata()[b].id;
            if (cc.at(below) != 0) {
                ok = false;
                detail << " c[" << below << "]=" << cc.at(below) << ", want 0";
            }
        }
        battery.check(prefix + "smooth-closed[" + id + "]", ok, detail.str());

        Int chi_closure = euler_integral(c.poset, f);
        Int signed_chi = s.dim % 2 == 0 ? chi_closure : checked_neg(chi_closure);
        std::ostringstream hdetail;
        hdetail << "(-1)^dim * chi = " << signed_chi << ", gdeg = " << gdegs.at(id);
        battery.check(prefix + "hopf[" + id + "]", signed_chi == gdegs.at(id), hdetail.str());
    }
}

void orbit_checks(Battery& battery) {
    for (const RootSystem& rs : rank_le3_root_systems()) {
        Int order = static_cast<Int>(weyl_group(rs).size());
        bool ok = order == rs.classical_order();
        std::ostringstream detail;
        if (!ok) detail << "|W|=" << order << ", classical " << rs.classical_order();
        int points = 0;
        for (const std::string& spec : sample_point_specs(rs.coordinate_count())) {
            TorusPoint t = parse_torus_point(spec);
            Int orb = static_cast<Int>(orbit(rs, t).size());
            Int stab = stabilizer_order(rs, t);
            Int chi = orbit_euler_characteristic(rs, t);
            if (checked_mul(orb, stab) != order || chi != orb) {
                ok = false;
                detail << " point " << spec << ": |orbit|=" << orb << " |stab|=" << stab
                       << " chi=" << chi;
            }
            ++points;
        }
        std::ostringstream name;
        name << "weyl/orbit-stabilizer[" << rs.str() << ", " << points << " points]";
        battery.check(name.str(), ok, detail.str());
    }
}

void volume_checks(Battery& battery) {
    {
        bool ok = true;
        std::ostringstream detail;
        for (Int d = 1; d <= 10; ++d) {
            Int got = polytope_normalized_volume(LatticePolytope::from_points({{0}, {d}}));
            if (got != d) {
                ok = false;
                detail << " [0," << d << "] -> " << got;
            }
        }
        battery.check("volume/segments", ok, detail.str());
    }
    {
        bool ok = true;
        std::ostringstream detail;
        for (int d = 1; d <= 4; ++d) {
            std::vector<std::vector<Int>> pts(static_cast<std::size_t>(d) + 1,
                                              std::vector<Int>(static_cast<std::size_t>(d), 0));
            for (int i = 0; i < d; ++i)
                pts[static_cast<std::size_t>(i) + 1][static_cast<std::size_t>(i)] = 1;
            Int got = polytope_normalized_volume(LatticePolytope::from_points(pts));
            if (got != 1) {
                ok = false;
                detail << " dim " << d << " -> " << got;
            }
        }
        battery.check("volume/unimodular-simplices", ok, detail.str());
    }
    {
        Int got = polytope_normalized_volume(
            LatticePolytope::from_points({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
        std::ostringstream detail;
        detail << "got " << got << ", want 2";
        battery.check("volume/square", got == 2, detail.str());
    }
    {
        // invariance under unimodular maps and translations
        std::vector<LatticePolytope> bases = {
            LatticePolytope::from_points({{0, 0}, {1, 0}, {0, 1}, {1, 1}}),
            LatticePolytope::from_points({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}),
            LatticePolytope::from_points({{0}, {5}}),
        };
        Lcg rng{20240817};
        bool ok = true;
        std::ostringstream detail;
        for (int k = 0; k < 20; ++k) {
            const LatticePolytope& p = bases[static_cast<std::size_t>(k % 3)];
            IntMatrix u = random_unimodular(rng, p.dim(), 6);
            IntVector shift(p.dim());
            for (Eigen::Index i = 0; i < shift.size(); ++i) shift[i] = rng.range(-7, 7);
            Int before = polytope_normalized_volume(p);
            Int after = polytope_normalized_volume(transformed(p, u, shift));
            if (before != after) {
                ok = false;
                detail << " transform " << k << ": " << before << " -> " << after;
            }
        }
        battery.check("volume/unimodular-invariance", ok, detail.str());
    }
    {
        Int square = polytope_normalized_volume(
            LatticePolytope::from_points({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
        Int lower = polytope_normalized_volume(
            LatticePolytope::from_points({{0, 0}, {1, 0}, {1, 1}}));
        Int upper = polytope_normalized_volume(
            LatticePolytope::from_points({{0, 0}, {0, 1}, {1, 1}}));
        std::ostringstream detail;
        detail << lower << " + " << upper << " != " << square;
        battery.check("volume/subdivision-additivity", checked_add(lower, upper) == square,
                      detail.str());
    }
}

} // namespace

std::vector<std::string> sample_point_specs(int coordinate_count) {
    const int c = coordinate_count;
    if (c == 1)
        return {"1",      "g1",        "g1^-1",      "g1^2",  "g1^-2",      "w:1/2",
                "w:1/3",  "w:2/3",     "w:1/4",      "g1*w:1/2", "g1^2*w:1/3", "g2"};

    auto join = [](const std::vector<std::string>& parts) {
        std::string out;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) out += ",";
            out += parts[i];
        }
        return out;
    };
    auto coords = [&](auto&& gen) {
        std::vector<std::string> parts;
        for (int i = 0; i < c; ++i) parts.push_back(gen(i));
        return join(parts);
    };
    auto g = [](int i) { return "g" + std::to_string(i); };

    std::vector<std::string> specs;
    specs.push_back(coords([&](int) { return std::string("1"); }));
    specs.push_back(coords([&](int i) { return g(i + 1); }));
    specs.push_back(coords([&](int) { return g(1); }));
    specs.push_back(coords([&](int i) { return i == 1 ? g(1) : g(i + 1); }));     // repeated pair
    specs.push_back(coords([&](int i) { return i == 1 ? g(1) + "^-1" : g(i + 1); })); // inverse pair
    specs.push_back(coords([&](int) { return std::string("w:1/2"); }));
    specs.push_back(coords([&](int i) { return i % 2 == 0 ? std::string("w:1/3") : std::string("w:2/3"); }));
    specs.push_back(coords([&](int i) { return i == 0 ? std::string("w:1/2") : g(i + 1); }));
    specs.push_back(coords([&](int i) { return g(i + 1) + "^2"; }));
    specs.push_back(coords([&](int i) { return g(i + 1) + "*w:1/2"; }));
    specs.push_back(coords([&](int i) { return g(c - i); }));
    specs.push_back(coords([&](int i) { return i < 2 ? g(i + 1) + "^-1" : g(i + 1); }));
    return specs;
}

std::vector<RootSystem> rank_le3_root_systems() {
    std::vector<RootSystem> out;
    out.push_back(build_root_system(Series::A, 1, Realization::SL));
    for (int r = 1; r <= 3; ++r) out.push_back(build_root_system(Series::A, r, Realization::GL));
    for (int r = 1; r <= 3; ++r) out.push_back(build_root_system(Series::B, r));
    for (int r = 1; r <= 3; ++r) out.push_back(build_root_system(Series::C, r));
    for (int r = 2; r <= 3; ++r) out.push_back(build_root_system(Series::D, r));
    return out;
}

VerifyOutcome run_verify(const VerifyOptions& options) {
    Battery battery;

    for (const std::string& name : catalog_names()) {
        if (!options.case_filter.empty() && options.case_filter != name) continue;
        CaseSpec c = catalog_case(name);
        if (options.corrupt && name == "sl2_adjoint")
            c.links.set("I", "rs", 2); // deliberately wrong link value
        case_checks(battery, c);
    }

    if (options.case_filter.empty()) {
        orbit_checks(battery);
        volume_checks(battery);
    }

    VerifyOutcome out;
    out.checks = std::move(battery.checks);
    std::ostringstream text;
    for (const CheckResult& cr : out.checks) {
        if (cr.pass) {
            ++out.passed;
            text << "PASS " << cr.name << "\n";
        } else {
            ++out.failed;
            text << "FAIL " << cr.name << ":" << (cr.detail.empty() ? "" : " " + cr.detail) << "\n";
        }
    }
    text << "RESULT: " << out.checks.size() << " checks, " << out.passed << " passed, "
         << out.failed << " failed\n";
    out.text = text.str();
    out.exit_code = out.failed == 0 ? 0 : 3;
    return out;
}

} // namespace eulercc
