#include <doctest.h>

#include <algorithm>

#include "eulercc/catalog.hpp"

using namespace eulercc;

namespace {

Stratum ss(std::string id, int dim, int rank, int dit, TorusModel model, Int chi_c) {
    Stratum s;
    s.id = std::move(id);
    s.dim = dim;
    s.semisimple = SemisimpleData{rank, dit, std::move(model)};
    s.chi_c = chi_c;
    return s;
}

Stratum ns(std::string id, int dim, Int chi_c = 0) {
    Stratum s;
    s.id = std::move(id);
    s.dim = dim;
    s.chi_c = chi_c;
    return s;
}

// C* stratified by one marked point and its complement.
struct CStarCase {
    StratPoset poset;
    LinkData links;
};

CStarCase cstar() {
    StratPoset poset({ss("p", 0, 1, 0, FiniteModel{1}, 1),
                      ss("U", 1, 1, 1, FullDimensionalModel{}, -1)},
                     {{"p", "U"}});
    LinkData links;
    links.set("p", "p", -1);
    links.set("U", "U", -1);
    links.set("p", "U", 1);
    return {std::move(poset), std::move(links)};
}

bool has_violation(const ValidationReport& r, const std::string& code) {
    return std::any_of(r.violations.begin(), r.violations.end(),
                       [&](const Violation& v) { return v.code == code; });
}

} // namespace

TEST_CASE("poset construction computes the transitive closure") {
    StratPoset poset({ns("a", 0), ns("b", 1), ns("c", 2)}, {{"a", "b"}, {"b", "c"}});
    CHECK(poset.less(poset.index_of("a"), poset.index_of("c")));
    CHECK_FALSE(poset.less(poset.index_of("c"), poset.index_of("a")));
    CHECK(poset.ambient_dim() == 2);
    CHECK(poset.up_set(poset.index_of("a")).size() == 2);
    CHECK(poset.down_set(poset.index_of("c")).size() == 2);
}

TEST_CASE("poset construction rejects malformed input") {
    CHECK_THROWS_AS(StratPoset({ns("a", 0), ns("a", 1)}, {}), invalid_input_error);
    CHECK_THROWS_AS(StratPoset({ns("a", 0)}, {{"a", "zz"}}), invalid_input_error);
}

TEST_CASE("catalog cases validate cleanly") {
    for (const auto& name : catalog_names()) {
        CaseSpec c = catalog_case(name);
        ValidationReport r = validate(c.poset, c.links);
        INFO(name << ": " << r.str());
        CHECK(r.ok());
    }
}

TEST_CASE("a zero diagonal link is a violation") {
    CStarCase c = cstar();
    c.links.set("p", "p", 0);
    ValidationReport r = validate(c.poset, c.links);
    CHECK_FALSE(r.ok());
    CHECK(has_violation(r, "diagonal-link"));
}

TEST_CASE("odd orbit-direction parity is a violation") {
    StratPoset poset({ss("a", 3, 1, 0, FiniteModel{1}, 1)}, {});
    LinkData links;
    links.set("a", "a", -1);
    ValidationReport r = validate(poset, links);
    CHECK(has_violation(r, "orbit-parity"));
}

TEST_CASE("link table completeness and forced zeros") {
    StratPoset poset({ss("s", 0, 1, 0, FiniteModel{1}, 1), ns("n", 2)}, {{"s", "n"}});
    LinkData links;
    links.set("s", "s", -1);
    links.set("n", "n", -1);
    SUBCASE("missing comparable pair") {
        ValidationReport r = validate(poset, links);
        CHECK(has_violation(r, "link-missing"));
    }
    SUBCASE("nonzero semisimple-to-nonsemisimple link") {
        links.set("s", "n", 2);
        ValidationReport r = validate(poset, links);
        CHECK(has_violation(r, "link-forced-zero"));
    }
    SUBCASE("zero value passes") {
        links.set("s", "n", 0);
        CHECK(validate(poset, links).ok());
    }
}

TEST_CASE("closure order must increase dimension and stay acyclic") {
    {
        StratPoset poset({ns("a", 2), ns("b", 2)}, {{"a", "b"}});
        LinkData links;
        links.set("a", "a", -1);
        links.set("b", "b", -1);
        links.set("a", "b", 0);
        CHECK(has_violation(validate(poset, links), "closure-dim"));
    }
    {
        StratPoset poset({ns("a", 0), ns("b", 1)}, {{"a", "b"}, {"b", "a"}});
        LinkData links;
        links.set("a", "a", -1);
        links.set("b", "b", -1);
        links.set("a", "b", 0);
        links.set("b", "a", 0);
        CHECK(has_violation(validate(poset, links), "closure-cycle"));
    }
}

TEST_CASE("stray and unknown link entries are flagged") {
    StratPoset poset({ns("a", 0), ns("b", 1)}, {});
    LinkData links;
    links.set("a", "a", -1);
    links.set("b", "b", -1);
    links.set("a", "b", 1); // incomparable: no closure relation given
    links.set("a", "ghost", 3);
    ValidationReport r = validate(poset, links);
    CHECK(has_violation(r, "link-incomparable"));
    CHECK(has_violation(r, "link-unknown-stratum"));
}

TEST_CASE("torus model value ranges are validated") {
    StratPoset bad({ss("f", 0, 1, 0, FiniteModel{-1}, 0),
                    ss("s", 1, 1, 1, SubtorusModel{0}, 0),
                    ss("d", 2, 1, 2, DeclaredModel{-3}, 0)},
                   {});
    LinkData links;
    for (const char* id : {"f", "s", "d"}) links.set(id, id, -1);
    ValidationReport r = validate(bad, links);
    CHECK(has_violation(r, "model-finite-count"));
    CHECK(has_violation(r, "model-subtorus-dim"));
    CHECK(has_violation(r, "model-declared-gdeg"));
}

TEST_CASE("euler integral sums chi against chi_c") {
    CaseSpec sl2 = catalog_case("sl2_adjoint");
    CHECK(euler_integral(sl2.poset, sl2.sheaves.at("constant")) == 0);
    CHECK(euler_integral(sl2.poset, sl2.sheaves.at("skyscraper_I")) == 1);

    ConstructibleFunction zero;
    for (const auto& s : sl2.poset.strata()) zero.set(s.id, 0);
    CHECK(euler_integral(sl2.poset, zero) == 0);

    ConstructibleFunction partial;
    partial.set("I", 1);
    CHECK_THROWS_AS(euler_integral(sl2.poset, partial), invalid_input_error);
}

TEST_CASE("integral arithmetic overflows loudly") {
    StratPoset poset({ns("big", 0, Int{1} << 62)}, {});
    ConstructibleFunction f;
    f.set("big", 4);
    CHECK_THROWS_AS(euler_integral(poset, f), arithmetic_overflow_error);
}

TEST_CASE("multiplicities on the two-stratum C* case") {
    CStarCase c = cstar();
    ConstructibleFunction constant;
    constant.set("p", 1);
    constant.set("U", 1);
    CharCycle cc = cc_multiplicities(c.poset, c.links, constant);
    CHECK(cc.at("p") == 0);
    CHECK(cc.at("U") == -1);

    ConstructibleFunction sky;
    sky.set("p", 1);
    sky.set("U", 0);
    cc = cc_multiplicities(c.poset, c.links, sky);
    CHECK(cc.at("p") == 1);
    CHECK(cc.at("U") == 0);
}

TEST_CASE("multiplicities on the orbit-closure sheaf") {
    CaseSpec c = catalog_case("sl2_orbit_closure");
    CharCycle cc = cc_multiplicities(c.poset, c.links, c.sheaves.at("orbit_closure_u"));
    CHECK(cc.at("I") == 1);
    CHECK(cc.at("Ou") == 1);
    CHECK(cc.at("negI") == 0);
    CHECK(cc.at("OnegU") == 0);
    CHECK(cc.at("rs") == 0);
    // the unique semisimple stratum of the support carries c = chi there
    CHECK(cc.at("I") == c.sheaves.at("orbit_closure_u").at("I"));
}

TEST_CASE("cc_multiplicities rejects invalid data") {
    CStarCase c = cstar();
    c.links.set("p", "p", 0);
    ConstructibleFunction constant;
    constant.set("p", 1);
    constant.set("U", 1);
    CHECK_THROWS_AS(cc_multiplicities(c.poset, c.links, constant), invalid_input_error);
}

TEST_CASE("integral and multiplicities are linear in the sheaf") {
    CaseSpec sl2 = catalog_case("sl2_adjoint");
    ConstructibleFunction f, g, combo;
    Int af = 3, ag = -2;
    int i = 0;
    for (const auto& s : sl2.poset.strata()) {
        Int fv = (i * 7 + 3) % 5 - 2;
        Int gv = (i * 11 + 1) % 7 - 3;
        f.set(s.id, fv);
        g.set(s.id, gv);
        combo.set(s.id, af * fv + ag * gv);
        ++i;
    }
    CHECK(euler_integral(sl2.poset, combo) ==
          af * euler_integral(sl2.poset, f) + ag * euler_integral(sl2.poset, g));
    CharCycle ccf = cc_multiplicities(sl2.poset, sl2.links, f);
    CharCycle ccg = cc_multiplicities(sl2.poset, sl2.links, g);
    CharCycle ccc = cc_multiplicities(sl2.poset, sl2.links, combo);
    for (const auto& s : sl2.poset.strata())
        CHECK(ccc.at(s.id) == af * ccf.at(s.id) + ag * ccg.at(s.id));
}

TEST_CASE("results do not depend on stratum input order") {
    CaseSpec base = catalog_case("sl2_adjoint");
    std::vector<Stratum> shuffled = {base.poset.stratum("rs"), base.poset.stratum("Ou"),
                                     base.poset.stratum("I"), base.poset.stratum("OnegU"),
                                     base.poset.stratum("negI")};
    StratPoset reordered(shuffled, {{"I", "Ou"}, {"negI", "OnegU"}, {"Ou", "rs"}, {"OnegU", "rs"}});
    for (const auto& [name, f] : base.sheaves) {
        CHECK(euler_integral(reordered, f) == euler_integral(base.poset, f));
        CharCycle a = cc_multiplicities(reordered, base.links, f);
        CharCycle b = cc_multiplicities(base.poset, base.links, f);
        for (const auto& s : base.poset.strata()) CHECK(a.at(s.id) == b.at(s.id));
    }
}

TEST_CASE("torus restriction keeps semisimple strata with torus dimensions") {
    CaseSpec sl2 = catalog_case("sl2_adjoint");
    auto [tposet, tlinks] = torus_restriction(sl2.poset, sl2.links);
    REQUIRE(tposet.strata().size() == 3);
    CHECK(tposet.stratum("I").dim == 0);
    CHECK(tposet.stratum("negI").dim == 0);
    CHECK(tposet.stratum("rs").dim == 1);
    CHECK(tposet.stratum("rs").chi_c == -2); // chi_c carries over
    CHECK(tposet.ambient_dim() == 1);
    CHECK(tlinks.at("I", "rs") == 1);
    CHECK(tlinks.at("I", "I") == -1);
    CHECK_FALSE(tlinks.has("I", "Ou"));
    CHECK(validate(tposet, tlinks).ok());
}

TEST_CASE("torus restriction of a torus poset is itself") {
    CaseSpec t1 = catalog_case("torus1_two_points");
    auto [tposet, tlinks] = torus_restriction(t1.poset, t1.links);
    REQUIRE(tposet.strata().size() == t1.poset.strata().size());
    for (std::size_t i = 0; i < tposet.strata().size(); ++i) {
        CHECK(tposet.strata()[i].id == t1.poset.strata()[i].id);
        CHECK(tposet.strata()[i].dim == t1.poset.strata()[i].dim);
        CHECK(tposet.strata()[i].chi_c == t1.poset.strata()[i].chi_c);
    }
    CHECK(tposet.ambient_dim() == t1.poset.ambient_dim());
    CHECK(tlinks.entries() == t1.links.entries());
}

TEST_CASE("torus restriction of an all-nonsemisimple poset is empty") {
    StratPoset poset({ns("n", 1)}, {});
    LinkData links;
    links.set("n", "n", -1);
    auto [tposet, tlinks] = torus_restriction(poset, links);
    CHECK(tposet.strata().empty());
    CHECK(tlinks.entries().empty());
}

TEST_CASE("restrict_function keeps values and rejects mismatches") {
    CaseSpec sl2 = catalog_case("sl2_adjoint");
    auto [tposet, tlinks] = torus_restriction(sl2.poset, sl2.links);

    ConstructibleFunction oc = restrict_function(sl2.sheaves.at("orbit_closure_u"), tposet);
    CHECK(oc.at("I") == 1);
    CHECK(oc.at("negI") == 0);
    CHECK(oc.at("rs") == 0);
    CHECK_FALSE(oc.has("Ou"));

    ConstructibleFunction wrong;
    wrong.set("I", 1);
    CHECK_THROWS_AS(restrict_function(wrong, tposet), invalid_input_error);
}

TEST_CASE("localization and multiplicity matching hold on the catalog") {
    for (const auto& name : catalog_names()) {
        CaseSpec c = catalog_case(name);
        auto [tposet, tlinks] = torus_restriction(c.poset, c.links);
        for (const auto& [sheaf_name, f] : c.sheaves) {
            INFO(name << " / " << sheaf_name);
            ConstructibleFunction ft = restrict_function(f, tposet);
            CHECK(euler_integral(c.poset, f) == euler_integral(tposet, ft));
            CharCycle in_g = cc_multiplicities(c.poset, c.links, f);
            CharCycle in_t = cc_multiplicities(tposet, tlinks, ft);
            for (const auto& s : tposet.strata()) CHECK(in_g.at(s.id) == in_t.at(s.id));
        }
    }
}
