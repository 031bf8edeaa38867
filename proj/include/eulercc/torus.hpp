#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "eulercc/rational.hpp"

namespace eulercc {

using ExponentVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;

// One coordinate of a torus point, written multiplicatively as
//
//     exp(2*pi*i*torsion) * g_1^{e_1} * ... * g_k^{e_k}
//
// where torsion is a rational modulo 1 (a root of unity) and g_1..g_k are
// formal generic generators. Multiplication adds torsions mod 1 and adds
// exponent vectors, inversion negates, and the representation is canonical,
// so equality is exact and decidable. This is what keeps Weyl-group orbits
// and stabilizers computable for "generic" points.
class CoordValue {
public:
    CoordValue(Rational torsion, ExponentVec exponents);

    static CoordValue one(Eigen::Index generic_count);
    static CoordValue generic(int index, Eigen::Index generic_count); // g_{index}, 1-based
    static CoordValue root_of_unity(const Rational& torsion, Eigen::Index generic_count);

    const Rational& torsion() const { return torsion_; }
    const ExponentVec& exponents() const { return exponents_; }
    Eigen::Index generic_count() const { return exponents_.size(); }

    bool is_one() const;

    CoordValue operator*(const CoordValue& o) const;
    CoordValue inverse() const;

    bool operator==(const CoordValue& o) const;
    bool operator!=(const CoordValue& o) const { return !(*this == o); }
    bool operator<(const CoordValue& o) const; // lexicographic; for canonical ordering

    // Canonical text form, compatible with the CLI point grammar:
    // "1", "w:1/2", "g1", "g2^-1", "w:1/3*g1^2".
    std::string str() const;

private:
    Rational torsion_;      // reduced into [0, 1)
    ExponentVec exponents_;
};

// A point of the maximal torus: one CoordValue per coordinate, all sharing
// the same generic-generator count.
class TorusPoint {
public:
    explicit TorusPoint(std::vector<CoordValue> coords);

    Eigen::Index size() const { return static_cast<Eigen::Index>(coords_.size()); }
    const CoordValue& coord(Eigen::Index i) const { return coords_.at(static_cast<std::size_t>(i)); }
    const std::vector<CoordValue>& coords() const { return coords_; }

    bool is_identity() const;

    bool operator==(const TorusPoint& o) const;
    bool operator!=(const TorusPoint& o) const { return !(*this == o); }
    bool operator<(const TorusPoint& o) const;

    std::string str() const; // comma-joined coordinate forms

    static TorusPoint identity(Eigen::Index coordinate_count, Eigen::Index generic_count = 0);

private:
    std::vector<CoordValue> coords_;
};

// Parses the CLI point grammar: comma list of coordinates, each a '*'-product
// of factors "1", "w:p/q" (root of unity exp(2*pi*i*p/q)) and "gN" / "gN^k"
// (formal generics). The generic count is the largest N mentioned.
// Throws invalid_input_error with a description on bad syntax.
TorusPoint parse_torus_point(const std::string& spec);

} // namespace eulercc
