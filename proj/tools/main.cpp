#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "eulercc/verify.hpp"

namespace {

using namespace eulercc;

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitValidation = 2;
constexpr int kExitMismatch = 3;

int cmd_compute(const std::string& path, const std::string& sheaf) {
    CaseSpec c = load_case_file(path);
    ComputeOutcome outcome = run_compute(c, sheaf);
    std::cout << outcome.report;
    if (!outcome.validation_ok) return kExitValidation;
    return outcome.match ? kExitOk : kExitMismatch;
}

int cmd_verify(const std::string& case_filter, bool corrupt) {
    VerifyOptions options;
    options.case_filter = case_filter;
    options.corrupt = corrupt;
    if (!case_filter.empty()) catalog_case(case_filter); // reject unknown names up front
    VerifyOutcome outcome = run_verify(options);
    std::cout << outcome.text;
    return outcome.exit_code;
}

int cmd_orbit(const std::string& series_str, int rank, const std::string& realization_str,
              const std::string& point_spec) {
    Series series;
    if (series_str == "A") series = Series::A;
    else if (series_str == "B") series = Series::B;
    else if (series_str == "C") series = Series::C;
    else if (series_str == "D") series = Series::D;
    else if (series_str == "T") series = Series::Torus;
    else throw invalid_input_error("unknown series '" + series_str + "' (A/B/C/D/T)");

    Realization realization;
    if (realization_str == "SL") realization = Realization::SL;
    else if (realization_str == "GL") realization = Realization::GL;
    else throw invalid_input_error("unknown realization '" + realization_str + "' (SL/GL)");

    RootSystem rs = build_root_system(series, rank, realization);
    TorusPoint t = parse_torus_point(point_spec);
    if (t.size() != rs.coordinate_count())
        throw invalid_input_error("point has " + std::to_string(t.size()) + " coordinates, " +
                                  rs.str() + " acts on " +
                                  std::to_string(rs.coordinate_count()));
    std::cout << orbit_report(rs, t);
    return kExitOk;
}

int cmd_volume(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input_error("cannot open vertex file '" + path + "'");
    std::vector<std::vector<Int>> points;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = line.substr(0, line.find('#'));
        std::istringstream fields(body);
        std::vector<Int> coords;
        std::string tok;
        while (fields >> tok) {
            try {
                std::size_t used = 0;
                coords.push_back(std::stoll(tok, &used));
                if (used != tok.size()) throw std::invalid_argument(tok);
            } catch (...) {
                throw invalid_input_error("line " + std::to_string(lineno) +
                                          ": expected integer coordinate, got '" + tok + "'");
            }
        }
        if (!coords.empty()) points.push_back(std::move(coords));
    }
    LatticePolytope p = LatticePolytope::from_points(points);
    std::cout << "dim=" << p.dim() << "\n";
    std::cout << "vertices=" << p.point_count() << "\n";
    std::cout << "normalized_volume=" << polytope_normalized_volume(p) << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Euler characteristics of adjoint-equivariant constructible data "
                 "on reductive groups, cross-checked against characteristic cycles"};
    app.require_subcommand(1);

    auto* compute = app.add_subcommand(
        "compute", "evaluate both sides of the Gauss-Bonnet identity on a case file");
    std::string compute_path;
    std::string sheaf = "constant";
    compute->add_option("file", compute_path, "case file")->required();
    compute->add_option("--sheaf", sheaf, "sheaf section to use (default: constant)");

    auto* verify = app.add_subcommand("verify", "run the built-in verification battery");
    std::string case_filter;
    bool corrupt = false;
    verify->add_option("--case", case_filter, "restrict to one catalog case");
    verify->add_flag("--corrupt", corrupt)->group(""); // hidden negative-control hook

    auto* orbit_cmd =
        app.add_subcommand("orbit", "Weyl orbit, stabilizer and Euler characteristic of a torus point");
    std::string series_str, point_spec, realization_str = "GL";
    int rank = 0;
    orbit_cmd->add_option("series", series_str, "A, B, C, D or T")->required();
    orbit_cmd->add_option("rank", rank, "rank (1..6)")->required();
    orbit_cmd->add_option("point", point_spec, "comma list, e.g. g1,g1^-1 or w:1/3,g2")->required();
    orbit_cmd->add_option("--realization", realization_str, "SL or GL for series A (default GL)");

    auto* volume = app.add_subcommand("volume", "normalized volume of a lattice polytope");
    std::string volume_path;
    volume->add_option("file", volume_path, "one vertex per line, whitespace-separated integers")
        ->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute->parsed()) return cmd_compute(compute_path, sheaf);
        if (verify->parsed()) return cmd_verify(case_filter, corrupt);
        if (orbit_cmd->parsed()) return cmd_orbit(series_str, rank, realization_str, point_spec);
        if (volume->parsed()) return cmd_volume(volume_path);
    } catch (const case_parse_error& e) {
        std::cout << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cout << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitOk;
}
