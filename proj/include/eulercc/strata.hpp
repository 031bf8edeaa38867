#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "eulercc/polytope.hpp"

namespace eulercc {

// How a semisimple stratum meets the maximal torus; this is all the data the
// Gaussian-degree reduction needs.
struct FiniteModel { Int count = 0; };              // finitely many points
struct FullDimensionalModel {};                     // Zariski-open in T
struct SubtorusModel { int dim = 0; };              // positive-dimensional subtorus
struct HypersurfaceModel { LatticePolytope polytope; }; // generic hypersurface with this Newton polytope
struct DeclaredModel { Int gdeg = 0; };             // trusted externally-supplied degree

using TorusModel = std::variant<FiniteModel, FullDimensionalModel, SubtorusModel,
                                HypersurfaceModel, DeclaredModel>;

std::string torus_model_str(const TorusModel& m);

struct SemisimpleData {
    int rank = 0;         // dimension of the centralizer, constant on the stratum
    int dim_in_torus = 0; // complex dimension of (stratum ∩ T)
    TorusModel model = FullDimensionalModel{};
};

struct Stratum {
    std::string id;
    int dim = 0; // complex dimension in the ambient group
    std::optional<SemisimpleData> semisimple;
    Int chi_c = 0; // Euler characteristic with compact support

    bool is_semisimple() const { return semisimple.has_value(); }
};

// The finite combinatorial shadow of an admissible stratification: strata in
// input order plus the closure partial order (alpha < beta meaning
// X_alpha lies in the closure of X_beta). The transitive closure of the
// supplied pairs is computed up front.
class StratPoset {
public:
    StratPoset(std::vector<Stratum> strata,
               const std::vector<std::pair<std::string, std::string>>& closure_pairs);

    const std::vector<Stratum>& strata() const { return strata_; }
    const Stratum& stratum(const std::string& id) const;
    bool has(const std::string& id) const { return index_.count(id) != 0; }
    std::size_t index_of(const std::string& id) const;

    bool less(std::size_t a, std::size_t b) const { return less_[a][b]; }
    bool comparable(std::size_t a, std::size_t b) const { return a == b || less(a, b) || less(b, a); }

    // ids strictly above / strictly below, in input order
    std::vector<std::size_t> up_set(std::size_t a) const;
    std::vector<std::size_t> down_set(std::size_t a) const;

    int ambient_dim() const { return ambient_dim_; }

private:
    std::vector<Stratum> strata_;
    std::map<std::string, std::size_t> index_;
    std::vector<std::vector<bool>> less_;
    int ambient_dim_ = 0;
};

// Complex-link Euler characteristics e(alpha, beta) for comparable pairs,
// keyed by stratum ids. Diagonal entries are data too (must be -1).
class LinkData {
public:
    void set(const std::string& a, const std::string& b, Int value);
    bool has(const std::string& a, const std::string& b) const;
    Int at(const std::string& a, const std::string& b) const;
    const std::map<std::pair<std::string, std::string>, Int>& entries() const { return e_; }

private:
    std::map<std::pair<std::string, std::string>, Int> e_;
};

struct Violation {
    std::string code;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    std::string str() const;
};

// Checks every structural invariant: closure order sanity, the torus-direction
// parity of semisimple strata, diagonal links equal to -1, the forced zero
// e(semisimple, nonsemisimple) = 0, completeness of the link table, and
// torus-model value ranges. Violations are report entries, not exceptions.
ValidationReport validate(const StratPoset& poset, const LinkData& links);

// chi values of a constructible complex, one per stratum.
class ConstructibleFunction {
public:
    ConstructibleFunction() = default;
    explicit ConstructibleFunction(std::map<std::string, Int> chi) : chi_(std::move(chi)) {}

    void set(const std::string& id, Int v) { chi_[id] = v; }
    bool has(const std::string& id) const { return chi_.count(id) != 0; }
    Int at(const std::string& id) const;
    const std::map<std::string, Int>& values() const { return chi_; }

private:
    std::map<std::string, Int> chi_;
};

// Characteristic-cycle multiplicities c_alpha, one per stratum.
struct CharCycle {
    std::map<std::string, Int> c;

    Int at(const std::string& id) const;
};

// Integral over the Euler characteristic: sum of chi_alpha * chi_c(X_alpha).
Int euler_integral(const StratPoset& poset, const ConstructibleFunction& f);

// Dubson–Kashiwara multiplicities:
//   c_alpha = (-1)^(dim X_alpha + 1) * sum_{beta >= alpha} e(alpha, beta) chi_beta.
// Requires a valid (poset, links) pair.
CharCycle cc_multiplicities(const StratPoset& poset, const LinkData& links,
                            const ConstructibleFunction& f);

// The induced stratification of the maximal torus: semisimple strata survive
// with dim := dim_in_torus and unchanged chi_c, the closure order and link
// values restrict.
std::pair<StratPoset, LinkData> torus_restriction(const StratPoset& poset, const LinkData& links);

// Restriction of a constructible function to the torus poset (same chi values
// on the surviving strata).
ConstructibleFunction restrict_function(const ConstructibleFunction& f,
                                        const StratPoset& torus_poset);

} // namespace eulercc
