#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include <sys/wait.h>

#include "eulercc/casefile.hpp"

using namespace eulercc;
namespace fs = std::filesystem;

namespace {

struct CmdResult {
    int exit_code = -1;
    std::string output;
};

CmdResult run_cmd(const std::string& args) {
    std::string full = std::string(EULERCC_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(full.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CmdResult result;
    char buffer[4096];
    std::size_t n;
    while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0)
        result.output.append(buffer, n);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

class TempFile {
public:
    explicit TempFile(const std::string& content, const std::string& name) {
        path_ = fs::temp_directory_path() / ("eulercc_test_" + name);
        std::ofstream out(path_);
        out << content;
    }
    ~TempFile() {
        std::error_code ec;
        fs::remove(path_, ec);
    }
    std::string str() const { return path_.string(); }

private:
    fs::path path_;
};

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("compute reports both sides and MATCH on a catalog export") {
    TempFile file(serialize_case(catalog_case("sl2_adjoint")), "sl2.case");

    CmdResult constant = run_cmd("compute " + file.str() + " --sheaf constant");
    CHECK(constant.exit_code == 0);
    CHECK(contains(constant.output, "validation: OK"));
    CHECK(contains(constant.output, "chi_integral=0"));
    CHECK(contains(constant.output, "chi_cc=0"));
    CHECK(contains(constant.output, "c[rs]=-1"));
    CHECK(contains(constant.output, "MATCH"));
    CHECK_FALSE(contains(constant.output, "MISMATCH"));

    CmdResult sky = run_cmd("compute " + file.str() + " --sheaf skyscraper_I");
    CHECK(sky.exit_code == 0);
    CHECK(contains(sky.output, "chi_integral=1"));
    CHECK(contains(sky.output, "chi_cc=1"));

    // byte-identical reports on identical inputs
    CmdResult again = run_cmd("compute " + file.str() + " --sheaf constant");
    CHECK(again.output == constant.output);
}

TEST_CASE("compute exit codes follow the contract") {
    SUBCASE("parse error is exit 1") {
        TempFile file("[strata]\nbroken line here\n", "broken.case");
        CmdResult r = run_cmd("compute " + file.str());
        CHECK(r.exit_code == 1);
        CHECK(contains(r.output, "line"));
    }
    SUBCASE("validation failure is exit 2") {
        CaseSpec c = catalog_case("sl2_adjoint");
        c.links.set("I", "I", 0);
        TempFile file(serialize_case(c), "diag.case");
        CmdResult r = run_cmd("compute " + file.str());
        CHECK(r.exit_code == 2);
        CHECK(contains(r.output, "validation: FAILED"));
        CHECK(contains(r.output, "diagonal-link"));
    }
    SUBCASE("a wrong link value is exit 3 with MISMATCH") {
        CaseSpec c = catalog_case("sl2_adjoint");
        c.links.set("I", "rs", 2);
        TempFile file(serialize_case(c), "wrong.case");
        CmdResult r = run_cmd("compute " + file.str() + " --sheaf constant");
        CHECK(r.exit_code == 3);
        CHECK(contains(r.output, "MISMATCH"));
    }
    SUBCASE("unknown sheaf is exit 1 and lists the battery") {
        TempFile file(serialize_case(catalog_case("sl2_adjoint")), "sl2b.case");
        CmdResult r = run_cmd("compute " + file.str() + " --sheaf nope");
        CHECK(r.exit_code == 1);
        CHECK(contains(r.output, "constant"));
    }
    SUBCASE("missing file is exit 1") {
        CmdResult r = run_cmd("compute /nonexistent/path.case");
        CHECK(r.exit_code == 1);
    }
}

TEST_CASE("verify passes on the pristine catalog and is deterministic") {
    CmdResult first = run_cmd("verify");
    CHECK(first.exit_code == 0);
    CHECK(contains(first.output, "PASS sl2_adjoint/main-identity[constant]"));
    CHECK(contains(first.output, "0 failed"));
    CHECK_FALSE(contains(first.output, "FAIL"));

    CmdResult second = run_cmd("verify");
    CHECK(second.output == first.output);
}

TEST_CASE("verify --case filters to one case") {
    CmdResult r = run_cmd("verify --case sl2_adjoint");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "sl2_adjoint/"));
    CHECK_FALSE(contains(r.output, "torus1_two_points/"));
    CHECK_FALSE(contains(r.output, "weyl/"));
    CHECK_FALSE(contains(r.output, "volume/"));

    CmdResult unknown = run_cmd("verify --case bogus");
    CHECK(unknown.exit_code == 1);
}

TEST_CASE("verify --corrupt is the negative control") {
    CmdResult r = run_cmd("verify --corrupt");
    CHECK(r.exit_code == 3);
    CHECK(contains(r.output, "FAIL sl2_adjoint/"));
}

TEST_CASE("orbit prints the classical counts") {
    CmdResult r = run_cmd("orbit A 2 g1,g1,g2");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "|W|=6"));
    CHECK(contains(r.output, "|orbit|=3"));
    CHECK(contains(r.output, "|stab|=2"));
    CHECK(contains(r.output, "chi_orbit=3"));
    CHECK(contains(r.output, "gdeg_orbit=3"));

    CmdResult sl = run_cmd("orbit A 1 g1 --realization SL");
    CHECK(contains(sl.output, "chi_orbit=2"));

    CmdResult id = run_cmd("orbit B 2 1,1");
    CHECK(contains(id.output, "chi_orbit=1"));
    CHECK(contains(id.output, "|W|=8"));

    CmdResult bad_point = run_cmd("orbit A 2 q9");
    CHECK(bad_point.exit_code == 1);

    CmdResult bad_count = run_cmd("orbit A 2 g1,g2");
    CHECK(bad_count.exit_code == 1);

    CmdResult bad_series = run_cmd("orbit E 6 g1");
    CHECK(bad_series.exit_code == 1);
}

TEST_CASE("volume reads whitespace-separated vertex files") {
    TempFile file("0 0\n1 0\n0 1\n1 1\n# a comment\n", "square.verts");
    CmdResult r = run_cmd("volume " + file.str());
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "dim=2"));
    CHECK(contains(r.output, "normalized_volume=2"));

    TempFile ragged("0 0\n1\n", "ragged.verts");
    CHECK(run_cmd("volume " + ragged.str()).exit_code == 1);
}
