#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "eulercc/torus.hpp"

namespace eulercc {

// Classical series, plus a trivial-Weyl torus series for ambient groups
// (C*)^n (needed by the catalog's torus cases).
enum class Series { A, B, C, D, Torus };

enum class Realization { SL, GL }; // meaningful for series A only

std::string series_name(Series s);

// An element of a Weyl group realized as a signed permutation of torus
// coordinates: coordinate i of w(t) is coordinate source(i) of t, inverted
// when sign(i) == -1.
class WeylElement {
public:
    WeylElement(Eigen::VectorXi source, Eigen::VectorXi sign);

    static WeylElement identity(int coordinate_count);
    static WeylElement transposition(int coordinate_count, int i, int j);
    static WeylElement sign_flip(int coordinate_count, int i);

    int size() const { return static_cast<int>(source_.size()); }
    int source(int i) const { return source_[i]; }
    int sign(int i) const { return sign_[i]; }

    bool is_identity() const;

    // Composition: (*this) after `o`, i.e. apply(o, t) first.
    WeylElement operator*(const WeylElement& o) const;
    WeylElement inverse() const;

    // Number of coordinates whose sign is -1; even for every series-D element.
    int negative_sign_count() const;

    bool operator==(const WeylElement& o) const;
    bool operator!=(const WeylElement& o) const { return !(*this == o); }
    bool operator<(const WeylElement& o) const;

private:
    Eigen::VectorXi source_; // source_[i] = preimage coordinate of output slot i
    Eigen::VectorXi sign_;   // +1 or -1 per output slot
};

// A root system of classical type with its Weyl group realized concretely on
// torus coordinates. Rank is capped at 6; the simple reflections are
// installed at construction, the group itself is enumerated on demand.
class RootSystem {
public:
    static constexpr int kMaxRank = 6;

    Series series() const { return series_; }
    int rank() const { return rank_; }
    Realization realization() const { return realization_; }
    int coordinate_count() const { return coordinate_count_; }
    const std::vector<WeylElement>& simple_reflections() const { return simple_reflections_; }

    // |W| by the classical closed formula for the series.
    Int classical_order() const;

    std::string str() const; // e.g. "A1(SL)", "B2", "T2"

private:
    friend RootSystem build_root_system(Series, int, Realization);

    Series series_;
    int rank_;
    Realization realization_;
    int coordinate_count_;
    std::vector<WeylElement> simple_reflections_;
};

// Validates the series/rank/realization combination and installs the simple
// reflections. Series A supports the GL-type realization (S_{rank+1} permuting
// rank+1 coordinates) for every rank and the SL-type realization (x -> x^-1
// on one coordinate) for rank 1 only: higher SL-type actions are not signed
// permutations. D requires rank >= 2.
RootSystem build_root_system(Series series, int rank, Realization realization = Realization::GL);

inline constexpr std::size_t kDefaultWeylOrderCap = std::size_t{1} << 20;

// All group elements by breadth-first closure over the simple reflections.
// Deterministic ordering; throws resource_limit_error past `order_cap`.
std::vector<WeylElement> weyl_group(const RootSystem& rs, std::size_t order_cap = kDefaultWeylOrderCap);

// w acting on a torus point (coordinate counts must match).
TorusPoint act(const WeylElement& w, const TorusPoint& t);

// The orbit {w(t) : w in W}, deduplicated exactly, in sorted order.
std::vector<TorusPoint> orbit(const RootSystem& rs, const TorusPoint& t);

// |{w : w(t) = t}|.
Int stabilizer_order(const RootSystem& rs, const TorusPoint& t);

// chi of the adjoint orbit through a semisimple point: |W| / |Stab t|,
// which equals the orbit size.
Int orbit_euler_characteristic(const RootSystem& rs, const TorusPoint& t);

} // namespace eulercc
