#include "eulercc/weyl.hpp"

#include <deque>
#include <set>
#include <sstream>

namespace eulercc {

std::string series_name(Series s) {
    switch (s) {
        case Series::A: return "A";
        case Series::B: return "B";
        case Series::C: return "C";
        case Series::D: return "D";
        case Series::Torus: return "T";
    }
    return "?";
}

WeylElement::WeylElement(Eigen::VectorXi source, Eigen::VectorXi sign)
    : source_(std::move(source)), sign_(std::move(sign)) {
    if (source_.size() != sign_.size() || source_.size() == 0)
        throw invalid_input_error("signed permutation with mismatched lengths");
    std::vector<bool> seen(static_cast<std::size_t>(source_.size()), false);
    for (Eigen::Index i = 0; i < source_.size(); ++i) {
        if (source_[i] < 0 || source_[i] >= source_.size() || seen[static_cast<std::size_t>(source_[i])])
            throw invalid_input_error("source indices are not a permutation");
        seen[static_cast<std::size_t>(source_[i])] = true;
        if (sign_[i] != 1 && sign_[i] != -1)
            throw invalid_input_error("signs must be +1 or -1");
    }
}

WeylElement WeylElement::identity(int n) {
    Eigen::VectorXi src(n), sgn(n);
    for (int i = 0; i < n; ++i) {
        src[i] = i;
        sgn[i] = 1;
    }
    return WeylElement(std::move(src), std::move(sgn));
}

WeylElement WeylElement::transposition(int n, int i, int j) {
    WeylElement w = identity(n);
    std::swap(w.source_[i], w.source_[j]);
    return w;
}

WeylElement WeylElement::sign_flip(int n, int i) {
    WeylElement w = identity(n);
    w.sign_[i] = -1;
    return w;
}

bool WeylElement::is_identity() const {
    for (Eigen::Index i = 0; i < source_.size(); ++i)
        if (source_[i] != i || sign_[i] != 1) return false;
    return true;
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
    if (size() != o.size())
        throw invalid_input_error("composing signed permutations of different sizes");
    // out[i] = this_out over o: t -> o(t) -> this(o(t))
    Eigen::VectorXi src(source_.size()), sgn(sign_.size());
    for (Eigen::Index i = 0; i < source_.size(); ++i) {
        src[i] = o.source_[source_[i]];
        sgn[i] = sign_[i] * o.sign_[source_[i]];
    }
    return WeylElement(std::move(src), std::move(sgn));
}

WeylElement WeylElement::inverse() const {
    Eigen::VectorXi src(source_.size()), sgn(sign_.size());
    for (Eigen::Index i = 0; i < source_.size(); ++i) {
        src[source_[i]] = static_cast<int>(i);
        sgn[source_[i]] = sign_[i];
    }
    return WeylElement(std::move(src), std::move(sgn));
}

int WeylElement::negative_sign_count() const {
    int n = 0;
    for (Eigen::Index i = 0; i < sign_.size(); ++i)
        if (sign_[i] == -1) ++n;
    return n;
}

bool WeylElement::operator==(const WeylElement& o) const {
    return source_ == o.source_ && sign_ == o.sign_;
}

bool WeylElement::operator<(const WeylElement& o) const {
    if (source_.size() != o.source_.size()) return source_.size() < o.source_.size();
    for (Eigen::Index i = 0; i < source_.size(); ++i) {
        if (source_[i] != o.source_[i]) return source_[i] < o.source_[i];
        if (sign_[i] != o.sign_[i]) return sign_[i] < o.sign_[i];
    }
    return false;
}

Int RootSystem::classical_order() const {
    auto factorial = [](int n) {
        Int f = 1;
        for (int i = 2; i <= n; ++i) f = checked_mul(f, i);
        return f;
    };
    switch (series_) {
        case Series::A:
            if (realization_ == Realization::GL) return factorial(rank_ + 1);
            return 2; // SL-type, rank 1
        case Series::B:
        case Series::C:
            return checked_mul(Int{1} << rank_, factorial(rank_));
        case Series::D:
            return checked_mul(Int{1} << (rank_ - 1), factorial(rank_));
        case Series::Torus:
            return 1;
    }
    throw invalid_input_error("unknown series");
}

std::string RootSystem::str() const {
    std::ostringstream out;
    out << series_name(series_) << rank_;
    if (series_ == Series::A)
        out << (realization_ == Realization::SL ? "(SL)" : "(GL)");
    return out.str();
}

RootSystem build_root_system(Series series, int rank, Realization realization) {
    if (rank < 1 || rank > RootSystem::kMaxRank)
        throw invalid_input_error("rank must be between 1 and 6");
    if (series == Series::D && rank < 2)
        throw invalid_input_error("series D requires rank >= 2");
    if (series == Series::A && realization == Realization::SL && rank > 1)
        throw invalid_input_error(
            "SL-type realization of series A is supported for rank 1 only "
            "(higher SL-type torus actions are not signed permutations)");

    RootSystem rs;
    rs.series_ = series;
    rs.rank_ = rank;
    rs.realization_ = series == Series::A ? realization : Realization::GL;

    const int n = [&] {
        if (series == Series::A && realization == Realization::GL) return rank + 1;
        return rank;
    }();
    rs.coordinate_count_ = n;

    auto& gens = rs.simple_reflections_;
    switch (series) {
        case Series::A:
            if (realization == Realization::GL) {
                for (int i = 0; i + 1 < n; ++i)
                    gens.push_back(WeylElement::transposition(n, i, i + 1));
            } else {
                gens.push_back(WeylElement::sign_flip(1, 0)); // x -> x^-1
            }
            break;
        case Series::B:
        case Series::C:
            for (int i = 0; i + 1 < n; ++i)
                gens.push_back(WeylElement::transposition(n, i, i + 1));
            gens.push_back(WeylElement::sign_flip(n, n - 1));
            break;
        case Series::D: {
            for (int i = 0; i + 1 < n; ++i)
                gens.push_back(WeylElement::transposition(n, i, i + 1));
            WeylElement s = WeylElement::transposition(n, n - 2, n - 1);
            WeylElement f1 = WeylElement::sign_flip(n, n - 2);
            WeylElement f2 = WeylElement::sign_flip(n, n - 1);
            gens.push_back(f1 * f2 * s); // swap last two and invert both
            break;
        }
        case Series::Torus:
            break; // trivial group
    }
    return rs;
}

std::vector<WeylElement> weyl_group(const RootSystem& rs, std::size_t order_cap) {
    std::vector<WeylElement> elements;
    std::set<WeylElement> seen;
    std::deque<WeylElement> frontier;

    WeylElement id = WeylElement::identity(rs.coordinate_count());
    elements.push_back(id);
    seen.insert(id);
    frontier.push_back(id);

    while (!frontier.empty()) {
        WeylElement w = frontier.front();
        frontier.pop_front();
        for (const WeylElement& s : rs.simple_reflections()) {
            WeylElement next = w * s;
            if (seen.insert(next).second) {
                if (seen.size() > order_cap)
                    throw resource_limit_error("Weyl group order exceeds the configured cap");
                elements.push_back(next);
                frontier.push_back(next);
            }
        }
    }
    return elements;
}

TorusPoint act(const WeylElement& w, const TorusPoint& t) {
    if (w.size() != t.size())
        throw invalid_input_error("Weyl element and torus point have different coordinate counts");
    std::vector<CoordValue> out;
    out.reserve(static_cast<std::size_t>(t.size()));
    for (int i = 0; i < w.size(); ++i) {
        const CoordValue& c = t.coord(w.source(i));
        out.push_back(w.sign(i) == -1 ? c.inverse() : c);
    }
    return TorusPoint(std::move(out));
}

std::vector<TorusPoint> orbit(const RootSystem& rs, const TorusPoint& t) {
    std::set<TorusPoint> points;
    for (const WeylElement& w : weyl_group(rs))
        points.insert(act(w, t));
    return std::vector<TorusPoint>(points.begin(), points.end());
}

Int stabilizer_order(const RootSystem& rs, const TorusPoint& t) {
    Int n = 0;
    for (const WeylElement& w : weyl_group(rs))
        if (act(w, t) == t) ++n;
    return n;
}

Int orbit_euler_characteristic(const RootSystem& rs, const TorusPoint& t) {
    Int order = static_cast<Int>(weyl_group(rs).size());
    return exact_div(order, stabilizer_order(rs, t));
}

} // namespace eulercc
