#include "eulercc/catalog.hpp"

#include <sstream>

namespace eulercc {

Int chi_c_torus_minus_points(int k, Int m) {
    if (k < 0 || m < 0)
        throw invalid_input_error("chi_c_torus_minus_points needs k >= 0, m >= 0");
    if (k == 0) {
        if (m > 1) throw invalid_input_error("a point cannot lose more than one point");
        return 1 - m;
    }
    // chi^c((C*)^k) = 0 in positive dimension; removing a point subtracts 1
    return checked_neg(m);
}

namespace {

ConstructibleFunction sheaf(std::initializer_list<std::pair<const std::string, Int>> values) {
    return ConstructibleFunction(std::map<std::string, Int>(values));
}

Stratum semisimple_stratum(std::string id, int dim, int rank, int dim_in_torus, TorusModel model,
                           Int chi_c) {
    Stratum s;
    s.id = std::move(id);
    s.dim = dim;
    s.semisimple = SemisimpleData{rank, dim_in_torus, std::move(model)};
    s.chi_c = chi_c;
    return s;
}

Stratum nonsemisimple_stratum(std::string id, int dim) {
    Stratum s;
    s.id = std::move(id);
    s.dim = dim;
    s.chi_c = 0; // empty torus intersection, so the localized chi^c contribution is 0
    return s;
}

CaseSpec torus1_two_points() {
    // C* with two marked points (roots of unity, say) and their complement.
    const Int chi_point = chi_c_torus_minus_points(0, 0);
    std::vector<Stratum> strata = {
        semisimple_stratum("p1", 0, 1, 0, FiniteModel{1}, chi_point),
        semisimple_stratum("p2", 0, 1, 0, FiniteModel{1}, chi_point),
        semisimple_stratum("U", 1, 1, 1, FullDimensionalModel{},
                           chi_c_torus_minus_points(1, 2)),
    };
    StratPoset poset(std::move(strata), {{"p1", "U"}, {"p2", "U"}});

    LinkData links;
    links.set("p1", "p1", -1);
    links.set("p2", "p2", -1);
    links.set("U", "U", -1);
    // complex link of a point inside a curve is a single point
    links.set("p1", "U", 1);
    links.set("p2", "U", 1);

    std::map<std::string, ConstructibleFunction> sheaves = {
        {"constant", sheaf({{"p1", 1}, {"p2", 1}, {"U", 1}})},
        {"skyscraper_p1", sheaf({{"p1", 1}, {"p2", 0}, {"U", 0}})},
        {"skyscraper_p2", sheaf({{"p1", 0}, {"p2", 1}, {"U", 0}})},
        {"open_complement", sheaf({{"p1", 0}, {"p2", 0}, {"U", 1}})},
    };

    std::vector<ExpectedValue> expected = {
        {"constant:chi", 0, "point counts: 1 + 1 + chi_c(C* minus 2 points) = 1 + 1 - 2"},
        {"constant:c:p1", 0, "diagonal -1 plus link 1 cancel on the constant sheaf"},
        {"constant:c:p2", 0, "diagonal -1 plus link 1 cancel on the constant sheaf"},
        {"constant:c:U", -1, "smooth whole space: multiplicity (-1)^dim = (-1)^1"},
        {"skyscraper_p1:chi", 1, "single point stratum, chi_c = 1"},
        {"skyscraper_p1:c:p1", 1, "conormal of a point with multiplicity 1"},
        {"skyscraper_p1:c:p2", 0, "sheaf vanishes near p2"},
        {"skyscraper_p1:c:U", 0, "sheaf vanishes on the open stratum"},
        {"skyscraper_p2:chi", 1, "single point stratum, chi_c = 1"},
        {"skyscraper_p2:c:p2", 1, "conormal of a point with multiplicity 1"},
        {"open_complement:chi", -2, "chi_c(C* minus 2 points) = -2"},
        {"open_complement:c:p1", -1, "boundary point of the open stratum: -(e(p1,U)*1)"},
        {"open_complement:c:p2", -1, "boundary point of the open stratum: -(e(p2,U)*1)"},
        {"open_complement:c:U", -1, "(-1)^(1+1) * e(U,U) * 1"},
    };

    return CaseSpec{"torus1_two_points",
                    build_root_system(Series::Torus, 1),
                    std::move(poset),
                    std::move(links),
                    std::move(sheaves),
                    std::move(expected),
                    {"p1", "p2", "U"}};
}

CaseSpec torus2_subtorus() {
    // (C*)^2 stratified by a one-dimensional subtorus and its complement.
    std::vector<Stratum> strata = {
        semisimple_stratum("S", 1, 2, 1, SubtorusModel{1}, chi_c_torus_minus_points(1, 0)),
        semisimple_stratum("U", 2, 2, 2, FullDimensionalModel{},
                           checked_sub(chi_c_torus_minus_points(2, 0),
                                       chi_c_torus_minus_points(1, 0))),
    };
    StratPoset poset(std::move(strata), {{"S", "U"}});

    LinkData links;
    links.set("S", "S", -1);
    links.set("U", "U", -1);
    links.set("S", "U", 1); // transverse slice to the subtorus meets U in one point

    std::map<std::string, ConstructibleFunction> sheaves = {
        {"constant", sheaf({{"S", 1}, {"U", 1}})},
        {"subtorus", sheaf({{"S", 1}, {"U", 0}})},
        {"open_complement", sheaf({{"S", 0}, {"U", 1}})},
    };

    std::vector<ExpectedValue> expected = {
        {"constant:chi", 0, "chi_c of a torus vanishes in positive dimension"},
        {"constant:c:S", 0, "diagonal -1 plus link 1 cancel on the constant sheaf"},
        {"constant:c:U", 1, "smooth whole space: multiplicity (-1)^dim = (-1)^2"},
        {"subtorus:chi", 0, "chi_c(C*) = 0"},
        {"subtorus:c:S", -1, "smooth closed subtorus: multiplicity (-1)^dim = (-1)^1"},
        {"subtorus:c:U", 0, "sheaf vanishes on the open stratum"},
        {"open_complement:chi", 0, "chi_c((C*)^2 minus a subtorus) = 0 - 0"},
        {"open_complement:c:S", 1, "(+1) * e(S,U) * 1"},
        {"open_complement:c:U", 1, "(-1)^(2+1) * e(U,U) * 1"},
    };

    return CaseSpec{"torus2_subtorus",
                    build_root_system(Series::Torus, 2),
                    std::move(poset),
                    std::move(links),
                    std::move(sheaves),
                    std::move(expected),
                    {"S", "U"}};
}

CaseSpec torus2_curve() {
    // (C*)^2 stratified by a smooth generic curve with Newton polytope the
    // unit simplex (a line, e.g. x + y + 1 = 0) and its complement. The
    // curve is a sphere minus three points: chi_c = 2 - 3 = -1.
    LatticePolytope simplex = LatticePolytope::from_points({{0, 0}, {1, 0}, {0, 1}});
    const Int chi_curve = checked_sub(2, 3);
    std::vector<Stratum> strata = {
        semisimple_stratum("C", 1, 2, 1, HypersurfaceModel{simplex}, chi_curve),
        semisimple_stratum("U", 2, 2, 2, FullDimensionalModel{},
                           checked_sub(chi_c_torus_minus_points(2, 0), chi_curve)),
    };
    StratPoset poset(std::move(strata), {{"C", "U"}});

    LinkData links;
    links.set("C", "C", -1);
    links.set("U", "U", -1);
    links.set("C", "U", 1); // transverse slice to the curve meets U in one point

    std::map<std::string, ConstructibleFunction> sheaves = {
        {"constant", sheaf({{"C", 1}, {"U", 1}})},
        {"curve", sheaf({{"C", 1}, {"U", 0}})},
        {"open_complement", sheaf({{"C", 0}, {"U", 1}})},
    };

    std::vector<ExpectedValue> expected = {
        {"constant:chi", 0, "chi_c((C*)^2) = 0 split as -1 + 1"},
        {"constant:c:C", 0, "diagonal -1 plus link 1 cancel on the constant sheaf"},
        {"constant:c:U", 1, "smooth whole space: multiplicity (-1)^dim = (-1)^2"},
        {"curve:chi", -1, "sphere minus three points"},
        {"curve:c:C", -1, "smooth closed curve: multiplicity (-1)^dim = (-1)^1"},
        {"curve:c:U", 0, "sheaf vanishes on the open stratum"},
        {"gdeg:C", 1, "normalized volume of the unit simplex"},
        {"open_complement:chi", 1, "chi_c((C*)^2 minus the curve) = 0 - (-1)"},
        {"open_complement:c:C", 1, "(+1) * e(C,U) * 1"},
        {"open_complement:c:U", 1, "(-1)^(2+1) * e(U,U) * 1"},
    };

    return CaseSpec{"torus2_curve",
                    build_root_system(Series::Torus, 2),
                    std::move(poset),
                    std::move(links),
                    std::move(sheaves),
                    std::move(expected),
                    {"C", "U"}};
}

StratPoset sl2_poset() {
    // SL_2: the central points, the two unipotent-type orbits around them,
    // and the regular semisimple locus.
    const Int chi_point = chi_c_torus_minus_points(0, 0);
    std::vector<Stratum> strata = {
        semisimple_stratum("I", 0, 3, 0, FiniteModel{1}, chi_point),
        semisimple_stratum("negI", 0, 3, 0, FiniteModel{1}, chi_point),
        nonsemisimple_stratum("Ou", 2),
        nonsemisimple_stratum("OnegU", 2),
        semisimple_stratum("rs", 3, 1, 1, FullDimensionalModel{},
                           chi_c_torus_minus_points(1, 2)),
    };
    return StratPoset(std::move(strata),
                      {{"I", "Ou"}, {"negI", "OnegU"}, {"Ou", "rs"}, {"OnegU", "rs"}});
}

LinkData sl2_links() {
    LinkData links;
    for (const char* id : {"I", "negI", "Ou", "OnegU", "rs"})
        links.set(id, id, -1);
    links.set("I", "Ou", 0);       // forced: semisimple under nonsemisimple
    links.set("negI", "OnegU", 0); // forced: semisimple under nonsemisimple
    links.set("I", "rs", 1);
    links.set("negI", "rs", 1);
    links.set("Ou", "rs", 1);
    links.set("OnegU", "rs", 1);
    return links;
}

std::map<std::string, ConstructibleFunction> sl2_sheaves(bool full_battery) {
    std::map<std::string, ConstructibleFunction> sheaves = {
        {"constant", sheaf({{"I", 1}, {"negI", 1}, {"Ou", 1}, {"OnegU", 1}, {"rs", 1}})},
        {"skyscraper_I", sheaf({{"I", 1}, {"negI", 0}, {"Ou", 0}, {"OnegU", 0}, {"rs", 0}})},
        {"orbit_closure_u", sheaf({{"I", 1}, {"negI", 0}, {"Ou", 1}, {"OnegU", 0}, {"rs", 0}})},
    };
    if (full_battery) {
        sheaves.emplace("skyscraper_negI",
                        sheaf({{"I", 0}, {"negI", 1}, {"Ou", 0}, {"OnegU", 0}, {"rs", 0}}));
        sheaves.emplace("unipotent_orbit",
                        sheaf({{"I", 0}, {"negI", 0}, {"Ou", 1}, {"OnegU", 0}, {"rs", 0}}));
        sheaves.emplace("open_rs",
                        sheaf({{"I", 0}, {"negI", 0}, {"Ou", 0}, {"OnegU", 0}, {"rs", 1}}));
    }
    return sheaves;
}

std::vector<ExpectedValue> sl2_core_expected() {
    return {
        {"constant:chi", 0, "1 + 1 + 0 + 0 + chi_c(C* minus {1,-1})"},
        {"constant:c:I", 0, "-(e(I,I) + e(I,Ou) + e(I,rs)) = -(-1 + 0 + 1)"},
        {"constant:c:negI", 0, "-(e(negI,negI) + e(negI,OnegU) + e(negI,rs))"},
        {"constant:c:Ou", 0, "-(e(Ou,Ou) + e(Ou,rs)) = -(-1 + 1)"},
        {"constant:c:OnegU", 0, "-(e(OnegU,OnegU) + e(OnegU,rs))"},
        {"constant:c:rs", -1, "smooth whole space: multiplicity (-1)^dim = (-1)^3"},
        {"skyscraper_I:chi", 1, "single point stratum, chi_c = 1"},
        {"skyscraper_I:c:I", 1, "conormal of a point with multiplicity 1"},
        {"skyscraper_I:c:negI", 0, "sheaf vanishes near negI"},
        {"skyscraper_I:c:Ou", 0, "sheaf vanishes on Ou and above"},
        {"skyscraper_I:c:OnegU", 0, "sheaf vanishes on OnegU and above"},
        {"skyscraper_I:c:rs", 0, "sheaf vanishes on the open stratum"},
        {"orbit_closure_u:chi", 1, "1 * chi_c(I) + 1 * chi_c(Ou) = 1 + 0"},
        {"orbit_closure_u:c:I", 1, "-(e(I,I)*1 + e(I,Ou)*1) = -(-1 + 0); equals chi at the "
                                   "unique semisimple stratum of the support"},
        {"orbit_closure_u:c:negI", 0, "sheaf vanishes near negI"},
        {"orbit_closure_u:c:Ou", 1, "-(e(Ou,Ou)*1 + e(Ou,rs)*0)"},
        {"orbit_closure_u:c:OnegU", 0, "sheaf vanishes near OnegU"},
        {"orbit_closure_u:c:rs", 0, "sheaf vanishes on the open stratum"},
    };
}

CaseSpec sl2_adjoint() {
    std::vector<ExpectedValue> expected = sl2_core_expected();
    std::vector<ExpectedValue> extra = {
        {"skyscraper_negI:chi", 1, "single point stratum, chi_c = 1"},
        {"skyscraper_negI:c:negI", 1, "conormal of a point with multiplicity 1"},
        {"unipotent_orbit:chi", 0, "chi_c(Ou) = 0 (empty torus intersection)"},
        {"unipotent_orbit:c:Ou", 1, "-(e(Ou,Ou)*1)"},
        {"unipotent_orbit:c:I", 0, "e(I,Ou) = 0 kills the only contribution"},
        {"open_rs:chi", -2, "chi_c(C* minus {1,-1}) = -2"},
        {"open_rs:c:I", -1, "-(e(I,rs)*1)"},
        {"open_rs:c:negI", -1, "-(e(negI,rs)*1)"},
        {"open_rs:c:Ou", -1, "-(e(Ou,rs)*1)"},
        {"open_rs:c:OnegU", -1, "-(e(OnegU,rs)*1)"},
        {"open_rs:c:rs", -1, "(+1) * e(rs,rs) * 1"},
    };
    expected.insert(expected.end(), extra.begin(), extra.end());

    return CaseSpec{"sl2_adjoint",
                    build_root_system(Series::A, 1, Realization::SL),
                    sl2_poset(),
                    sl2_links(),
                    sl2_sheaves(true),
                    std::move(expected),
                    {"I", "negI", "rs"}};
}

CaseSpec sl2_orbit_closure() {
    // Same geometry as sl2_adjoint; the headline sheaf is supported on the
    // closure of the unipotent orbit through u.
    return CaseSpec{"sl2_orbit_closure",
                    build_root_system(Series::A, 1, Realization::SL),
                    sl2_poset(),
                    sl2_links(),
                    sl2_sheaves(false),
                    sl2_core_expected(),
                    {"I", "negI", "rs"}};
}

CaseSpec gl2_adjoint() {
    // GL_2: the center (a one-parameter family of central semisimple
    // elements), the nonsemisimple locus (equal eigenvalues, nontrivial
    // Jordan block), and the regular semisimple locus.
    std::vector<Stratum> strata = {
        semisimple_stratum("Z", 1, 4, 1, SubtorusModel{1}, chi_c_torus_minus_points(1, 0)),
        nonsemisimple_stratum("N", 3),
        semisimple_stratum("rs", 4, 2, 2, FullDimensionalModel{},
                           checked_sub(chi_c_torus_minus_points(2, 0),
                                       chi_c_torus_minus_points(1, 0))),
    };
    StratPoset poset(std::move(strata), {{"Z", "N"}, {"N", "rs"}});

    LinkData links;
    for (const char* id : {"Z", "N", "rs"})
        links.set(id, id, -1);
    links.set("Z", "N", 0); // forced: semisimple under nonsemisimple
    links.set("Z", "rs", 1);
    links.set("N", "rs", 1);

    std::map<std::string, ConstructibleFunction> sheaves = {
        {"constant", sheaf({{"Z", 1}, {"N", 1}, {"rs", 1}})},
        {"center", sheaf({{"Z", 1}, {"N", 0}, {"rs", 0}})},
        {"equal_eigenvalues_closure", sheaf({{"Z", 1}, {"N", 1}, {"rs", 0}})},
        {"open_rs", sheaf({{"Z", 0}, {"N", 0}, {"rs", 1}})},
    };

    std::vector<ExpectedValue> expected = {
        {"constant:chi", 0, "0 + 0 + 0: every stratum meets T in a set with chi_c = 0"},
        {"constant:c:Z", 0, "(+1)(e(Z,Z) + e(Z,N) + e(Z,rs)) = -1 + 0 + 1"},
        {"constant:c:N", 0, "(+1)(e(N,N) + e(N,rs)) = -1 + 1"},
        {"constant:c:rs", 1, "smooth whole space: multiplicity (-1)^dim = (-1)^4"},
        {"center:chi", 0, "chi_c(C*) = 0"},
        {"center:c:Z", -1, "smooth closed center: multiplicity (-1)^dim = (-1)^1"},
        {"center:c:N", 0, "sheaf vanishes on N and above"},
        {"center:c:rs", 0, "sheaf vanishes on the open stratum"},
        {"equal_eigenvalues_closure:chi", 0, "0 + 0"},
        {"equal_eigenvalues_closure:c:Z", -1, "(+1)(e(Z,Z)*1 + e(Z,N)*1) = -1 + 0"},
        {"equal_eigenvalues_closure:c:N", -1, "(+1)(e(N,N)*1) = -1"},
        {"equal_eigenvalues_closure:c:rs", 0, "sheaf vanishes on the open stratum"},
        {"open_rs:chi", 0, "chi_c of the regular semisimple part of T is 0"},
        {"open_rs:c:Z", 1, "(+1)(e(Z,rs)*1)"},
        {"open_rs:c:N", 1, "(+1)(e(N,rs)*1)"},
        {"open_rs:c:rs", 1, "(-1)^(4+1) * e(rs,rs) * 1"},
    };

    return CaseSpec{"gl2_adjoint",
                    build_root_system(Series::A, 1, Realization::GL),
                    std::move(poset),
                    std::move(links),
                    std::move(sheaves),
                    std::move(expected),
                    {"Z", "rs"}};
}

} // namespace

const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names = {
        "torus1_two_points", "torus2_subtorus", "torus2_curve",
        "sl2_adjoint",       "sl2_orbit_closure", "gl2_adjoint",
    };
    return names;
}

CaseSpec catalog_case(const std::string& name) {
    if (name == "torus1_two_points") return torus1_two_points();
    if (name == "torus2_subtorus") return torus2_subtorus();
    if (name == "torus2_curve") return torus2_curve();
    if (name == "sl2_adjoint") return sl2_adjoint();
    if (name == "sl2_orbit_closure") return sl2_orbit_closure();
    if (name == "gl2_adjoint") return gl2_adjoint();

    std::ostringstream msg;
    msg << "unknown catalog case '" << name << "'; available:";
    for (const auto& n : catalog_names()) msg << " " << n;
    throw not_found_error(msg.str());
}

} // namespace eulercc
