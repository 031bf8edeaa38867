#include "eulercc/strata.hpp"

#include <sstream>

namespace eulercc {

std::string torus_model_str(const TorusModel& m) {
    std::ostringstream out;
    if (std::holds_alternative<FiniteModel>(m)) {
        out << "finite:" << std::get<FiniteModel>(m).count;
    } else if (std::holds_alternative<FullDimensionalModel>(m)) {
        out << "fulldim";
    } else if (std::holds_alternative<SubtorusModel>(m)) {
        out << "subtorus:" << std::get<SubtorusModel>(m).dim;
    } else if (std::holds_alternative<HypersurfaceModel>(m)) {
        const auto& pts = std::get<HypersurfaceModel>(m).polytope.points();
        out << "hypersurface:";
        for (Eigen::Index j = 0; j < pts.cols(); ++j) {
            if (j) out << ";";
            for (Eigen::Index i = 0; i < pts.rows(); ++i) {
                if (i) out << ",";
                out << pts(i, j);
            }
        }
    } else {
        out << "declared:" << std::get<DeclaredModel>(m).gdeg;
    }
    return out.str();
}

StratPoset::StratPoset(std::vector<Stratum> strata,
                       const std::vector<std::pair<std::string, std::string>>& closure_pairs)
    : strata_(std::move(strata)) {
    for (std::size_t i = 0; i < strata_.size(); ++i) {
        if (!index_.emplace(strata_[i].id, i).second)
            throw invalid_input_error("duplicate stratum id '" + strata_[i].id + "'");
    }
    const std::size_t n = strata_.size();
    less_.assign(n, std::vector<bool>(n, false));
    for (const auto& [a, b] : closure_pairs) {
        auto ia = index_.find(a), ib = index_.find(b);
        if (ia == index_.end() || ib == index_.end())
            throw invalid_input_error("closure relation references unknown stratum '" +
                                      (ia == index_.end() ? a : b) + "'");
        less_[ia->second][ib->second] = true;
    }
    // transitive closure
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (less_[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (less_[k][j]) less_[i][j] = true;

    ambient_dim_ = 0;
    for (const auto& s : strata_)
        ambient_dim_ = std::max(ambient_dim_, s.dim);
}

const Stratum& StratPoset::stratum(const std::string& id) const {
    return strata_[index_of(id)];
}

std::size_t StratPoset::index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end())
        throw not_found_error("unknown stratum '" + id + "'");
    return it->second;
}

std::vector<std::size_t> StratPoset::up_set(std::size_t a) const {
    std::vector<std::size_t> out;
    for (std::size_t b = 0; b < strata_.size(); ++b)
        if (less_[a][b]) out.push_back(b);
    return out;
}

std::vector<std::size_t> StratPoset::down_set(std::size_t a) const {
    std::vector<std::size_t> out;
    for (std::size_t b = 0; b < strata_.size(); ++b)
        if (less_[b][a]) out.push_back(b);
    return out;
}

void LinkData::set(const std::string& a, const std::string& b, Int value) {
    e_[{a, b}] = value;
}

bool LinkData::has(const std::string& a, const std::string& b) const {
    return e_.count({a, b}) != 0;
}

Int LinkData::at(const std::string& a, const std::string& b) const {
    auto it = e_.find({a, b});
    if (it == e_.end())
        throw not_found_error("no link value e(" + a + ", " + b + ")");
    return it->second;
}

std::string ValidationReport::str() const {
    std::ostringstream out;
    for (const auto& v : violations)
        out << "violation[" << v.code << "]: " << v.message << "\n";
    return out.str();
}

ValidationReport validate(const StratPoset& poset, const LinkData& links) {
    ValidationReport report;
    auto flag = [&](const std::string& code, const std::string& message) {
        report.violations.push_back({code, message});
    };

    const auto& strata = poset.strata();
    const std::size_t n = strata.size();

    for (const auto& s : strata) {
        if (s.dim < 0)
            flag("dim-negative", "stratum '" + s.id + "' has negative dimension");
        if (!s.is_semisimple()) continue;
        const auto& ss = *s.semisimple;
        if (ss.rank < 0)
            flag("rank-negative", "stratum '" + s.id + "' has negative rank");
        if (ss.dim_in_torus < 0)
            flag("torus-dim-negative", "stratum '" + s.id + "' has negative torus dimension");
        if (ss.dim_in_torus > s.dim)
            flag("torus-dim-exceeds",
                 "stratum '" + s.id + "' has dim_in_torus > dim");
        else if ((s.dim - ss.dim_in_torus) % 2 != 0)
            flag("orbit-parity",
                 "stratum '" + s.id + "': dim - dim_in_torus must be even (orbit directions "
                 "come in complex pairs)");
        if (std::holds_alternative<FiniteModel>(ss.model) &&
            std::get<FiniteModel>(ss.model).count < 0)
            flag("model-finite-count", "stratum '" + s.id + "': finite torus model needs count >= 0");
        if (std::holds_alternative<SubtorusModel>(ss.model) &&
            std::get<SubtorusModel>(ss.model).dim < 1)
            flag("model-subtorus-dim", "stratum '" + s.id + "': subtorus model needs dim >= 1");
        if (std::holds_alternative<DeclaredModel>(ss.model) &&
            std::get<DeclaredModel>(ss.model).gdeg < 0)
            flag("model-declared-gdeg", "stratum '" + s.id + "': declared Gaussian degree must be >= 0");
    }

    for (std::size_t a = 0; a < n; ++a) {
        if (poset.less(a, a))
            flag("closure-cycle", "closure order has a cycle through '" + strata[a].id + "'");
        for (std::size_t b = 0; b < n; ++b) {
            if (a == b || !poset.less(a, b)) continue;
            if (strata[a].dim >= strata[b].dim)
                flag("closure-dim", "'" + strata[a].id + "' < '" + strata[b].id +
                                        "' but dimensions are not increasing");
        }
    }

    // link table: defined exactly on comparable pairs, diagonal -1,
    // forced zeros across the semisimple/nonsemisimple boundary
    for (std::size_t a = 0; a < n; ++a) {
        const std::string& ida = strata[a].id;
        if (!links.has(ida, ida))
            flag("link-missing", "missing diagonal link e(" + ida + ", " + ida + ")");
        else if (links.at(ida, ida) != -1)
            flag("diagonal-link", "e(" + ida + ", " + ida + ") must be -1, got " +
                                      std::to_string(links.at(ida, ida)));
        for (std::size_t b = 0; b < n; ++b) {
            if (!poset.less(a, b)) continue;
            const std::string& idb = strata[b].id;
            if (!links.has(ida, idb)) {
                flag("link-missing", "missing link e(" + ida + ", " + idb + ")");
                continue;
            }
            if (strata[a].is_semisimple() && !strata[b].is_semisimple() &&
                links.at(ida, idb) != 0)
                flag("link-forced-zero",
                     "e(" + ida + ", " + idb + ") must be 0 (semisimple stratum under a "
                     "nonsemisimple one), got " + std::to_string(links.at(ida, idb)));
        }
    }
    for (const auto& [key, value] : links.entries()) {
        const auto& [a, b] = key;
        if (!poset.has(a) || !poset.has(b)) {
            flag("link-unknown-stratum", "link e(" + a + ", " + b + ") references an unknown stratum");
            continue;
        }
        std::size_t ia = poset.index_of(a), ib = poset.index_of(b);
        if (ia != ib && !poset.less(ia, ib))
            flag("link-incomparable", "link e(" + a + ", " + b + ") given for an incomparable pair");
    }

    return report;
}

Int ConstructibleFunction::at(const std::string& id) const {
    auto it = chi_.find(id);
    if (it == chi_.end())
        throw invalid_input_error("constructible function has no value on stratum '" + id + "'");
    return it->second;
}

Int CharCycle::at(const std::string& id) const {
    auto it = c.find(id);
    if (it == c.end())
        throw invalid_input_error("characteristic cycle has no multiplicity for stratum '" + id + "'");
    return it->second;
}

Int euler_integral(const StratPoset& poset, const ConstructibleFunction& f) {
    Int total = 0;
    for (const auto& s : poset.strata())
        total = checked_add(total, checked_mul(f.at(s.id), s.chi_c));
    return total;
}

static void require_valid(const StratPoset& poset, const LinkData& links) {
    ValidationReport report = validate(poset, links);
    if (!report.ok())
        throw invalid_input_error("stratification data fails validation:\n" + report.str());
}

CharCycle cc_multiplicities(const StratPoset& poset, const LinkData& links,
                            const ConstructibleFunction& f) {
    require_valid(poset, links);
    CharCycle cycle;
    const auto& strata = poset.strata();
    for (std::size_t a = 0; a < strata.size(); ++a) {
        Int sum = checked_mul(links.at(strata[a].id, strata[a].id), f.at(strata[a].id));
        for (std::size_t b : poset.up_set(a))
            sum = checked_add(sum, checked_mul(links.at(strata[a].id, strata[b].id),
                                               f.at(strata[b].id)));
        Int sign = (strata[a].dim + 1) % 2 == 0 ? 1 : -1;
        cycle.c[strata[a].id] = checked_mul(sign, sum);
    }
    return cycle;
}

std::pair<StratPoset, LinkData> torus_restriction(const StratPoset& poset, const LinkData& links) {
    require_valid(poset, links);

    std::vector<Stratum> survivors;
    for (const auto& s : poset.strata()) {
        if (!s.is_semisimple()) continue;
        Stratum t = s;
        t.dim = s.semisimple->dim_in_torus;
        survivors.push_back(std::move(t));
    }

    std::vector<std::pair<std::string, std::string>> pairs;
    LinkData restricted;
    const auto& strata = poset.strata();
    for (std::size_t a = 0; a < strata.size(); ++a) {
        if (!strata[a].is_semisimple()) continue;
        restricted.set(strata[a].id, strata[a].id, -1);
        for (std::size_t b = 0; b < strata.size(); ++b) {
            if (!strata[b].is_semisimple() || !poset.less(a, b)) continue;
            pairs.emplace_back(strata[a].id, strata[b].id);
            restricted.set(strata[a].id, strata[b].id, links.at(strata[a].id, strata[b].id));
        }
    }
    return {StratPoset(std::move(survivors), pairs), std::move(restricted)};
}

ConstructibleFunction restrict_function(const ConstructibleFunction& f,
                                        const StratPoset& torus_poset) {
    ConstructibleFunction out;
    for (const auto& s : torus_poset.strata()) {
        if (!f.has(s.id))
            throw invalid_input_error("function is not defined on torus stratum '" + s.id +
                                      "' (id mismatch with the restricted poset)");
        out.set(s.id, f.at(s.id));
    }
    return out;
}

} // namespace eulercc
