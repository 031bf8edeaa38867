#include <doctest.h>

#include "eulercc/catalog.hpp"

using namespace eulercc;

namespace {

Stratum make_ss(TorusModel model, int dim = 0, int dit = 0) {
    Stratum s;
    s.id = "s";
    s.dim = dim;
    s.semisimple = SemisimpleData{1, dit, std::move(model)};
    return s;
}

} // namespace

TEST_CASE("orbit Gaussian degrees count torus intersection points") {
    CHECK(gdeg_orbit(build_root_system(Series::A, 1, Realization::SL), parse_torus_point("g1")) == 2);
    CHECK(gdeg_orbit(build_root_system(Series::B, 2), TorusPoint::identity(2)) == 1);
    CHECK(gdeg_orbit(build_root_system(Series::A, 2, Realization::GL),
                     parse_torus_point("g1,g1,g2")) == 3);
}

TEST_CASE("stratum degrees follow the torus reduction rules") {
    Stratum unipotent;
    unipotent.id = "n";
    unipotent.dim = 2;
    CHECK(gdeg_stratum(unipotent) == 0); // nonsemisimple

    CHECK(gdeg_stratum(make_ss(FiniteModel{1})) == 1);
    CHECK(gdeg_stratum(make_ss(FiniteModel{4})) == 4);
    CHECK(gdeg_stratum(make_ss(FullDimensionalModel{}, 3, 1)) == 0);
    CHECK(gdeg_stratum(make_ss(SubtorusModel{2}, 2, 2)) == 0);
    CHECK(gdeg_stratum(make_ss(DeclaredModel{5}, 2, 2)) == 5);
    CHECK(gdeg_stratum(make_ss(
              HypersurfaceModel{LatticePolytope::from_points({{0}, {3}})}, 1, 1)) == 3);
}

TEST_CASE("hypersurface degrees are normalized volumes") {
    CHECK(gdeg_generic_hypersurface(LatticePolytope::from_points({{0}, {3}})) == 3);
    CHECK(gdeg_generic_hypersurface(LatticePolytope::from_points({{2, 5}})) == 0); // monomial
    CHECK(gdeg_generic_hypersurface(LatticePolytope::from_points({{0, 0}, {1, 0}, {0, 1}})) == 1);
}

TEST_CASE("gauss_bonnet reproduces the SL2 hand evaluations") {
    CaseSpec sl2 = catalog_case("sl2_adjoint");

    GaussBonnetResult constant = gauss_bonnet(sl2.poset, sl2.links, sl2.sheaves.at("constant"));
    CHECK(constant.chi_via_integral == 0);
    CHECK(constant.chi_via_cc == 0);
    CHECK(constant.matches());
    CHECK(constant.multiplicities.at("rs") == -1);

    GaussBonnetResult sky = gauss_bonnet(sl2.poset, sl2.links, sl2.sheaves.at("skyscraper_I"));
    CHECK(sky.chi_via_integral == 1);
    CHECK(sky.chi_via_cc == 1);
    CHECK(sky.gdegs.at("I") == 1);

    GaussBonnetResult oc = gauss_bonnet(sl2.poset, sl2.links, sl2.sheaves.at("orbit_closure_u"));
    CHECK(oc.chi_via_integral == 1);
    CHECK(oc.chi_via_cc == 1);
    CHECK(oc.multiplicities.at("I") == 1);
    CHECK(oc.multiplicities.at("Ou") == 1);
    CHECK(oc.gdegs.at("Ou") == 0);
}

TEST_CASE("a wrong link value surfaces as a mismatch, not an assertion") {
    CaseSpec sl2 = catalog_case("sl2_adjoint");
    sl2.links.set("I", "rs", 2); // wrong on purpose; still passes validation
    REQUIRE(validate(sl2.poset, sl2.links).ok());
    GaussBonnetResult gb = gauss_bonnet(sl2.poset, sl2.links, sl2.sheaves.at("constant"));
    CHECK_FALSE(gb.matches());
    CHECK(gb.chi_via_integral == 0);
    CHECK(gb.chi_via_cc == -1);
}

TEST_CASE("the identity holds across the whole catalog battery") {
    for (const auto& name : catalog_names()) {
        CaseSpec c = catalog_case(name);
        CHECK(c.sheaves.size() >= 3);
        for (const auto& [sheaf_name, f] : c.sheaves) {
            INFO(name << " / " << sheaf_name);
            GaussBonnetResult gb = gauss_bonnet(c.poset, c.links, f);
            CHECK(gb.matches());
        }
    }
}

TEST_CASE("degrees are nonnegative and so is chi for effective cycles") {
    for (const auto& name : catalog_names()) {
        CaseSpec c = catalog_case(name);
        GdegAssignment gdegs = gdeg_assignment(c.poset);
        for (const auto& [id, g] : gdegs.values) CHECK(g >= 0);
        for (const auto& [sheaf_name, f] : c.sheaves) {
            GaussBonnetResult gb = gauss_bonnet(c.poset, c.links, f);
            bool effective = true;
            for (const auto& [id, m] : gb.multiplicities.c)
                if (m < 0) effective = false;
            if (effective) {
                INFO(name << " / " << sheaf_name);
                CHECK(gb.chi_via_cc >= 0);
            }
        }
    }
}

TEST_CASE("the curve case pushes volume through the main identity") {
    CaseSpec c = catalog_case("torus2_curve");
    GaussBonnetResult gb = gauss_bonnet(c.poset, c.links, c.sheaves.at("curve"));
    CHECK(gb.gdegs.at("C") == 1);
    CHECK(gb.chi_via_integral == -1);
    CHECK(gb.chi_via_cc == -1);
    CHECK(gb.multiplicities.at("C") == -1);
}
