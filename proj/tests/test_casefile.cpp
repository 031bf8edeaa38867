#include <doctest.h>

#include <filesystem>

#include "eulercc/casefile.hpp"
#include "eulercc/report.hpp"

using namespace eulercc;

namespace {

int parse_error_line(const std::string& text) {
    try {
        parse_case_text(text, "t");
        return -1;
    } catch (const case_parse_error& e) {
        CHECK(e.column() >= 1);
        return e.line();
    }
}

const char* kMinimalCase = R"(# comment line
[group]
series = A
rank = 1
realization = SL

[strata]
p 0 semisimple 1 0 finite:1 1   # trailing comment
U 1 semisimple 1 1 fulldim -1

[closure]
p < U

[links]
e p p = -1
e U U = -1
e p U = 1

[sheaf constant]
p = 1
U = 1
)";

} // namespace

TEST_CASE("a handwritten case file parses") {
    CaseSpec c = parse_case_text(kMinimalCase, "mini");
    CHECK(c.name == "mini");
    CHECK(c.group.str() == "A1(SL)");
    REQUIRE(c.poset.strata().size() == 2);
    CHECK(c.poset.stratum("p").dim == 0);
    CHECK(c.poset.stratum("U").is_semisimple());
    CHECK(c.links.at("p", "U") == 1);
    CHECK(validate(c.poset, c.links).ok());
    CHECK(euler_integral(c.poset, c.sheaves.at("constant")) == 0);
}

TEST_CASE("catalog cases round-trip through the text format") {
    for (const auto& name : catalog_names()) {
        CaseSpec original = catalog_case(name);
        std::string text = serialize_case(original);
        CaseSpec parsed = parse_case_text(text, name);
        INFO(name);

        CHECK(serialize_case(parsed) == text); // canonical form is a fixed point

        REQUIRE(parsed.poset.strata().size() == original.poset.strata().size());
        for (std::size_t i = 0; i < parsed.poset.strata().size(); ++i) {
            const Stratum &a = parsed.poset.strata()[i], &b = original.poset.strata()[i];
            CHECK(a.id == b.id);
            CHECK(a.dim == b.dim);
            CHECK(a.chi_c == b.chi_c);
            CHECK(a.is_semisimple() == b.is_semisimple());
        }
        CHECK(parsed.links.entries() == original.links.entries());

        for (const auto& [sheaf_name, f] : original.sheaves) {
            INFO(sheaf_name);
            CHECK(euler_integral(parsed.poset, parsed.sheaves.at(sheaf_name)) ==
                  euler_integral(original.poset, f));
            CharCycle a = cc_multiplicities(parsed.poset, parsed.links,
                                            parsed.sheaves.at(sheaf_name));
            CharCycle b = cc_multiplicities(original.poset, original.links, f);
            for (const auto& s : original.poset.strata()) CHECK(a.at(s.id) == b.at(s.id));
        }
    }
}

TEST_CASE("hypersurface models survive the text format") {
    CaseSpec c = catalog_case("torus2_curve");
    CaseSpec parsed = parse_case_text(serialize_case(c), c.name);
    const Stratum& s = parsed.poset.stratum("C");
    REQUIRE(s.is_semisimple());
    REQUIRE(std::holds_alternative<HypersurfaceModel>(s.semisimple->model));
    CHECK(gdeg_stratum(s) == 1);
}

TEST_CASE("parse errors carry line numbers") {
    CHECK(parse_error_line("x = 1\n") == 1); // data before any section
    CHECK(parse_error_line("[group]\nseries = Q\n") == 2);
    CHECK(parse_error_line("[group]\nseries = A\nbogus = 3\n") == 3);
    CHECK(parse_error_line("[group]\nseries = A\nrank = 1\n[strata]\np 0 semisimple 1 0\n") == 5);
    CHECK(parse_error_line("[wat]\n") == 1);
    CHECK(parse_error_line("[group\n") == 1);
    CHECK(parse_error_line("[group]\nseries = A\nrank = x\n") == 3);
}

TEST_CASE("strata lines are checked field by field") {
    std::string header = "[group]\nseries = B\nrank = 2\n[strata]\n";
    CHECK(parse_error_line(header + "p zero semisimple 1 0 finite:1 1\n") == 5);
    CHECK(parse_error_line(header + "p 0 weird 1 0 finite:1 1\n") == 5);
    CHECK(parse_error_line(header + "p 0 nonsemisimple 2 - - 0\n") == 5);
    CHECK(parse_error_line(header + "p 0 semisimple 1 0 finite:x 1\n") == 5);
    CHECK(parse_error_line(header + "p 0 semisimple 1 0 orbit:3 1\n") == 5);
    CHECK(parse_error_line(header + "p 0 semisimple 1 0 finite:1 1\np 1 semisimple 1 1 fulldim 0\n") == 6);
}

TEST_CASE("references to undeclared strata are parse errors") {
    std::string base = "[group]\nseries = T\nrank = 1\n[strata]\np 0 semisimple 1 0 finite:1 1\n";
    CHECK(parse_error_line(base + "[closure]\np < q\n") == 7);
    CHECK(parse_error_line(base + "[links]\ne p q = 0\n") == 7);
    CHECK(parse_error_line(base + "[sheaf f]\nq = 1\n") == 7);
    CHECK(parse_error_line(base + "[closure]\np < p\n") == 7);
    CHECK(parse_error_line(base + "[links]\ne p p = -1\ne p p = -1\n") == 8);
}

TEST_CASE("group section constraints") {
    CHECK(parse_error_line("[group]\nseries = B\nrank = 2\nrealization = GL\n"
                           "[strata]\np 0 semisimple 2 0 finite:1 1\n") > 0);
    CHECK(parse_error_line("[strata]\np 0 semisimple 1 0 finite:1 1\n") > 0); // no group
    CHECK(parse_error_line("[group]\nseries = A\nrank = 1\n") > 0);           // no strata
    CHECK(parse_error_line("[group]\nseries = A\nseries = B\nrank = 1\n") == 3);
    CHECK(parse_error_line("[group]\nseries = D\nrank = 1\n"
                           "[strata]\np 0 semisimple 1 0 finite:1 1\n") > 0);
}

TEST_CASE("duplicate sheaf sections and values are rejected") {
    std::string base = "[group]\nseries = T\nrank = 1\n[strata]\np 0 semisimple 1 0 finite:1 1\n";
    CHECK(parse_error_line(base + "[sheaf f]\np = 1\n[sheaf f]\n") == 8);
    CHECK(parse_error_line(base + "[sheaf f]\np = 1\np = 2\n") == 8);
}

TEST_CASE("declared degrees are trusted but marked in reports") {
    std::string text =
        "[group]\nseries = T\nrank = 2\n"
        "[strata]\n"
        "X 1 semisimple 2 1 declared:5 0\n"
        "U 2 semisimple 2 2 fulldim 0\n"
        "[closure]\nX < U\n"
        "[links]\ne X X = -1\ne U U = -1\ne X U = 1\n"
        "[sheaf constant]\nX = 1\nU = 1\n";
    CaseSpec c = parse_case_text(text, "declared");
    CHECK(gdeg_stratum(c.poset.stratum("X")) == 5);
    ComputeOutcome outcome = run_compute(c, "constant");
    CHECK(outcome.validation_ok);
    CHECK(outcome.report.find("5 (declared)") != std::string::npos);
}

TEST_CASE("committed example case files agree with the catalog") {
    namespace fs = std::filesystem;
    fs::path dir(EULERCC_CASES_DIR);
    REQUIRE(fs::exists(dir));
    int found = 0;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.path().extension() != ".case") continue;
        ++found;
        CaseSpec from_file = load_case_file(entry.path());
        CaseSpec from_catalog = catalog_case(entry.path().stem().string());
        INFO(entry.path().string());
        CHECK(serialize_case(from_file) == serialize_case(from_catalog));
    }
    CHECK(found >= 2);
}
