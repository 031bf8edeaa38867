#pragma once

#include <Eigen/Core>
#include <vector>

#include "eulercc/checked.hpp"

namespace eulercc {

using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;

// A lattice polytope given by a finite set of integer points (the convex
// hull is implicit; non-vertex points are allowed and ignored by volume).
// Stored as one column per point.
class LatticePolytope {
public:
    explicit LatticePolytope(IntMatrix points);

    // Validates that every point has the same dimension.
    static LatticePolytope from_points(const std::vector<std::vector<Int>>& points);

    Eigen::Index dim() const { return points_.rows(); }
    Eigen::Index point_count() const { return points_.cols(); }
    const IntMatrix& points() const { return points_; }

    bool operator==(const LatticePolytope& o) const { return points_ == o.points_; }

private:
    IntMatrix points_;
};

// n! times the Euclidean volume of the convex hull, an exact integer;
// 0 when the hull is lower-dimensional. Computed by recursive facet
// decomposition with exact integer elimination.
Int polytope_normalized_volume(const LatticePolytope& p);

// Exact determinant of a square integer matrix (Bareiss fraction-free
// elimination; throws on 64-bit overflow rather than losing exactness).
Int integer_determinant(IntMatrix m);

// Rank of an integer matrix over Q, computed exactly.
Eigen::Index integer_rank(IntMatrix m);

} // namespace eulercc
