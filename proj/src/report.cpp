#include "eulercc/report.hpp"

#include <iomanip>
#include <sstream>

namespace eulercc {

namespace {

std::string model_note(const Stratum& s) {
    if (s.is_semisimple() && std::holds_alternative<DeclaredModel>(s.semisimple->model))
        return " (declared)";
    return "";
}

} // namespace

ComputeOutcome run_compute(const CaseSpec& c, const std::string& sheaf_name) {
    ComputeOutcome out;
    std::ostringstream r;
    r << "case: " << c.name << "\n";
    r << "group: " << c.group.str() << "\n";

    ValidationReport report = validate(c.poset, c.links);
    if (!report.ok()) {
        r << "validation: FAILED\n" << report.str();
        out.report = r.str();
        out.validation_ok = false;
        return out;
    }
    r << "validation: OK\n";
    out.validation_ok = true;

    auto it = c.sheaves.find(sheaf_name);
    if (it == c.sheaves.end()) {
        std::ostringstream msg;
        msg << "unknown sheaf '" << sheaf_name << "'; available:";
        for (const auto& [n, f] : c.sheaves) msg << " " << n;
        throw invalid_input_error(msg.str());
    }

    GaussBonnetResult gb = gauss_bonnet(c.poset, c.links, it->second);

    std::size_t idw = 2;
    for (const Stratum& s : c.poset.strata()) idw = std::max(idw, s.id.size());

    r << "strata:\n";
    r << "  " << std::left << std::setw(static_cast<int>(idw)) << "id"
      << "  dim  kind           chi_c  gdeg\n";
    for (const Stratum& s : c.poset.strata()) {
        r << "  " << std::left << std::setw(static_cast<int>(idw)) << s.id << "  "
          << std::setw(3) << s.dim << "  "
          << std::setw(13) << (s.is_semisimple() ? "semisimple" : "nonsemisimple") << "  "
          << std::setw(5) << s.chi_c << "  "
          << gb.gdegs.at(s.id) << model_note(s) << "\n";
    }

    r << "sheaf: " << sheaf_name << "\n";
    r << "multiplicities:\n";
    for (const Stratum& s : c.poset.strata())
        r << "  c[" << s.id << "]=" << gb.multiplicities.at(s.id) << "\n";

    r << "chi_integral=" << gb.chi_via_integral << "\n";
    r << "chi_cc=" << gb.chi_via_cc << "\n";
    r << (gb.matches() ? "MATCH" : "MISMATCH") << "\n";

    out.match = gb.matches();
    out.report = r.str();
    return out;
}

std::string orbit_report(const RootSystem& rs, const TorusPoint& t) {
    std::ostringstream r;
    Int order = static_cast<Int>(weyl_group(rs).size());
    Int orbit_size = static_cast<Int>(orbit(rs, t).size());
    Int stab = stabilizer_order(rs, t);
    r << "|W|=" << order << "\n";
    r << "|orbit|=" << orbit_size << "\n";
    r << "|stab|=" << stab << "\n";
    r << "chi_orbit=" << orbit_euler_characteristic(rs, t) << "\n";
    r << "gdeg_orbit=" << gdeg_orbit(rs, t) << "\n";
    return r.str();
}

} // namespace eulercc
