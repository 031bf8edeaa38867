#include "eulercc/gdeg.hpp"

namespace eulercc {

Int gdeg_orbit(const RootSystem& rs, const TorusPoint& t) {
    return static_cast<Int>(orbit(rs, t).size());
}

Int gdeg_generic_hypersurface(const LatticePolytope& p) {
    return polytope_normalized_volume(p);
}

Int gdeg_stratum(const Stratum& s) {
    if (!s.is_semisimple()) return 0;
    const TorusModel& m = s.semisimple->model;
    if (std::holds_alternative<FiniteModel>(m))
        return std::get<FiniteModel>(m).count;
    if (std::holds_alternative<FullDimensionalModel>(m))
        return 0; // a generic invariant form is nowhere zero on an open subset of T
    if (std::holds_alternative<SubtorusModel>(m))
        return 0; // restriction to a positive-dimensional subtorus stays nowhere zero
    if (std::holds_alternative<HypersurfaceModel>(m))
        return gdeg_generic_hypersurface(std::get<HypersurfaceModel>(m).polytope);
    return std::get<DeclaredModel>(m).gdeg;
}

Int GdegAssignment::at(const std::string& id) const {
    auto it = values.find(id);
    if (it == values.end())
        throw invalid_input_error("no Gaussian degree recorded for stratum '" + id + "'");
    return it->second;
}

GdegAssignment gdeg_assignment(const StratPoset& poset) {
    GdegAssignment out;
    for (const auto& s : poset.strata()) {
        Int g = gdeg_stratum(s);
        if (g < 0)
            throw invalid_input_error("negative Gaussian degree for stratum '" + s.id + "'");
        out.values[s.id] = g;
    }
    return out;
}

GaussBonnetResult gauss_bonnet(const StratPoset& poset, const LinkData& links,
                               const ConstructibleFunction& f) {
    GaussBonnetResult r;
    r.chi_via_integral = euler_integral(poset, f);
    r.multiplicities = cc_multiplicities(poset, links, f);
    r.gdegs = gdeg_assignment(poset);
    Int total = 0;
    for (const auto& s : poset.strata())
        total = checked_add(total, checked_mul(r.multiplicities.at(s.id), r.gdegs.at(s.id)));
    r.chi_via_cc = total;
    return r;
}

} // namespace eulercc
