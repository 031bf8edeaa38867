#include "eulercc/polytope.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "eulercc/errors.hpp"

namespace eulercc {

LatticePolytope::LatticePolytope(IntMatrix points) : points_(std::move(points)) {
    if (points_.cols() == 0 || points_.rows() == 0)
        throw invalid_input_error("polytope needs at least one point of dimension >= 1");
}

LatticePolytope LatticePolytope::from_points(const std::vector<std::vector<Int>>& points) {
    if (points.empty())
        throw invalid_input_error("polytope needs at least one point of dimension >= 1");
    const std::size_t dim = points.front().size();
    if (dim == 0)
        throw invalid_input_error("polytope needs at least one point of dimension >= 1");
    for (const auto& p : points)
        if (p.size() != dim)
            throw invalid_input_error("dimension mismatch among polytope vertices");
    IntMatrix m(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(points.size()));
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            m(i, j) = points[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    return LatticePolytope(std::move(m));
}

Int integer_determinant(IntMatrix m) {
    if (m.rows() != m.cols())
        throw invalid_input_error("determinant of a non-square matrix");
    const Eigen::Index n = m.rows();
    if (n == 0) return 1;

    // Bareiss fraction-free elimination; every division is exact.
    Int sign = 1;
    Int prev = 1;
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            Eigen::Index pivot = -1;
            for (Eigen::Index r = k + 1; r < n; ++r)
                if (m(r, k) != 0) { pivot = r; break; }
            if (pivot < 0) return 0;
            m.row(k).swap(m.row(pivot));
            sign = -sign;
        }
        for (Eigen::Index i = k + 1; i < n; ++i) {
            for (Eigen::Index j = k + 1; j < n; ++j) {
                Int num = checked_sub(checked_mul(m(k, k), m(i, j)), checked_mul(m(i, k), m(k, j)));
                m(i, j) = exact_div(num, prev);
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return checked_mul(sign, m(n - 1, n - 1));
}

Eigen::Index integer_rank(IntMatrix m) {
    const Eigen::Index rows = m.rows(), cols = m.cols();
    Eigen::Index r = 0;
    Int prev = 1;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index pivot = -1;
        for (Eigen::Index i = r; i < rows; ++i)
            if (m(i, c) != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        m.row(pivot).swap(m.row(r));
        for (Eigen::Index i = r + 1; i < rows; ++i) {
            for (Eigen::Index j = c + 1; j < cols; ++j) {
                Int num = checked_sub(checked_mul(m(r, c), m(i, j)), checked_mul(m(i, c), m(r, j)));
                m(i, j) = exact_div(num, prev);
            }
            m(i, c) = 0;
        }
        prev = m(r, c);
        ++r;
    }
    return r;
}

namespace {

std::vector<IntVector> distinct_points(const IntMatrix& points) {
    std::vector<IntVector> out;
    out.reserve(static_cast<std::size_t>(points.cols()));
    for (Eigen::Index j = 0; j < points.cols(); ++j)
        out.push_back(points.col(j));
    auto lex_less = [](const IntVector& a, const IntVector& b) {
        for (Eigen::Index i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    };
    std::sort(out.begin(), out.end(), lex_less);
    out.erase(std::unique(out.begin(), out.end(),
                          [](const IntVector& a, const IntVector& b) { return a == b; }),
              out.end());
    return out;
}

// Unimodular U with n.U = (1, 0, ..., 0) for primitive n, plus V = U^-1.
// Columns 1..d-1 of U span the kernel lattice of n; rows 1..d-1 of V give
// coordinates in that basis.
struct KernelMap {
    IntMatrix u;
    IntMatrix v;
};

struct ExtGcd {
    Int g, x, y; // x*a + y*b = g, g >= 0
};

ExtGcd ext_gcd(Int a, Int b) {
    Int old_r = a, r = b;
    Int old_s = 1, s = 0;
    Int old_t = 0, t = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = checked_sub(old_r, checked_mul(q, r)); old_r = r; r = tmp;
        tmp = checked_sub(old_s, checked_mul(q, s)); old_s = s; s = tmp;
        tmp = checked_sub(old_t, checked_mul(q, t)); old_t = t; t = tmp;
    }
    if (old_r < 0) {
        old_r = checked_neg(old_r);
        old_s = checked_neg(old_s);
        old_t = checked_neg(old_t);
    }
    return {old_r, old_s, old_t};
}

KernelMap kernel_map(const IntVector& normal) {
    const Eigen::Index d = normal.size();
    IntMatrix u = IntMatrix::Identity(d, d);
    IntMatrix v = IntMatrix::Identity(d, d);
    IntVector r = normal;
    for (Eigen::Index i = 1; i < d; ++i) {
        if (r[i] == 0) continue;
        ExtGcd eg = ext_gcd(r[0], r[i]);
        Int a = exact_div(r[0], eg.g);
        Int b = exact_div(r[i], eg.g);
        // columns 0 and i of U right-multiplied by [[x, -b], [y, a]]
        for (Eigen::Index row = 0; row < d; ++row) {
            Int u0 = u(row, 0), ui = u(row, i);
            u(row, 0) = checked_add(checked_mul(eg.x, u0), checked_mul(eg.y, ui));
            u(row, i) = checked_add(checked_mul(checked_neg(b), u0), checked_mul(a, ui));
        }
        // rows 0 and i of V left-multiplied by the inverse [[a, b], [-y, x]]
        for (Eigen::Index col = 0; col < d; ++col) {
            Int v0 = v(0, col), vi = v(i, col);
            v(0, col) = checked_add(checked_mul(a, v0), checked_mul(b, vi));
            v(i, col) = checked_add(checked_mul(checked_neg(eg.y), v0), checked_mul(eg.x, vi));
        }
        r[0] = eg.g;
        r[i] = 0;
    }
    if (r[0] == -1) { // all-zero tail never visited the gcd sweep
        u.col(0) = -u.col(0);
        v.row(0) = -v.row(0);
        r[0] = 1;
    }
    if (r[0] != 1)
        throw invalid_input_error("kernel map requires a primitive normal");
    return {std::move(u), std::move(v)};
}

Int dot(const IntVector& a, const IntVector& b) {
    Int s = 0;
    for (Eigen::Index i = 0; i < a.size(); ++i)
        s = checked_add(s, checked_mul(a[i], b[i]));
    return s;
}

Int normalized_volume_impl(const std::vector<IntVector>& pts, Eigen::Index d);

// One facet of the hull: outward primitive normal, support value, and the
// points lying on it.
struct Facet {
    IntVector normal;
    Int support;
    std::vector<IntVector> points;
};

std::vector<Facet> enumerate_facets(const std::vector<IntVector>& pts, Eigen::Index d) {
    const std::size_t m = pts.size();
    std::map<std::vector<Int>, Facet> facets; // keyed by (normal, support)

    std::vector<std::size_t> idx(static_cast<std::size_t>(d));
    std::iota(idx.begin(), idx.end(), 0);

    auto consider = [&](const std::vector<std::size_t>& subset) {
        // normal to the affine span of the subset via cofactor expansion
        IntMatrix diffs(d - 1, d);
        for (Eigen::Index i = 0; i + 1 < d; ++i)
            diffs.row(i) = (pts[subset[static_cast<std::size_t>(i) + 1]] - pts[subset[0]]).transpose();
        IntVector normal(d);
        bool nonzero = false;
        for (Eigen::Index j = 0; j < d; ++j) {
            IntMatrix minor(d - 1, d - 1);
            Eigen::Index cc = 0;
            for (Eigen::Index cj = 0; cj < d; ++cj) {
                if (cj == j) continue;
                minor.col(cc++) = diffs.col(cj);
            }
            Int det = integer_determinant(minor);
            normal[j] = (j % 2 == 0) ? det : checked_neg(det);
            nonzero = nonzero || det != 0;
        }
        if (!nonzero) return; // affinely dependent subset

        Int g = 0;
        for (Eigen::Index j = 0; j < d; ++j)
            g = std::gcd(g, normal[j] < 0 ? checked_neg(normal[j]) : normal[j]);
        for (Eigen::Index j = 0; j < d; ++j)
            normal[j] /= g;

        Int support = dot(normal, pts[subset[0]]);
        bool has_above = false, has_below = false;
        for (const auto& p : pts) {
            Int s = dot(normal, p);
            if (s > support) has_above = true;
            if (s < support) has_below = true;
        }
        if (has_above && has_below) return; // not a supporting hyperplane
        if (has_above) {
            for (Eigen::Index j = 0; j < d; ++j) normal[j] = checked_neg(normal[j]);
            support = checked_neg(support);
        }

        std::vector<Int> key(static_cast<std::size_t>(d) + 1);
        for (Eigen::Index j = 0; j < d; ++j) key[static_cast<std::size_t>(j)] = normal[j];
        key.back() = support;
        if (facets.count(key)) return;

        Facet f;
        f.normal = normal;
        f.support = support;
        for (const auto& p : pts)
            if (dot(normal, p) == support) f.points.push_back(p);
        facets.emplace(std::move(key), std::move(f));
    };

    // all d-subsets of the point set
    while (true) {
        consider(idx);
        Eigen::Index i = d - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - static_cast<std::size_t>(d - i))
            --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (Eigen::Index j = i + 1; j < d; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }

    std::vector<Facet> out;
    out.reserve(facets.size());
    for (auto& [key, f] : facets)
        out.push_back(std::move(f));
    return out;
}

Int normalized_volume_impl(const std::vector<IntVector>& pts, Eigen::Index d) {
    if (d == 1) {
        Int lo = pts.front()[0], hi = pts.front()[0];
        for (const auto& p : pts) {
            lo = std::min(lo, p[0]);
            hi = std::max(hi, p[0]);
        }
        return checked_sub(hi, lo);
    }

    if (pts.size() <= static_cast<std::size_t>(d)) return 0;

    IntMatrix diffs(d, static_cast<Eigen::Index>(pts.size()) - 1);
    for (std::size_t j = 1; j < pts.size(); ++j)
        diffs.col(static_cast<Eigen::Index>(j) - 1) = pts[j] - pts[0];
    if (integer_rank(diffs) < d) return 0; // lower-dimensional hull

    const IntVector& base = pts.front(); // lexicographic minimum, a hull vertex

    Int total = 0;
    for (const Facet& facet : enumerate_facets(pts, d)) {
        Int height = checked_sub(facet.support, dot(facet.normal, base));
        if (height == 0) continue; // base lies on this facet
        KernelMap km = kernel_map(facet.normal);
        const IntVector& f0 = facet.points.front();
        std::vector<IntVector> mapped;
        mapped.reserve(facet.points.size());
        for (const auto& p : facet.points) {
            IntVector x = p - f0;
            IntVector c(d - 1);
            for (Eigen::Index i = 1; i < d; ++i)
                c[i - 1] = dot(km.v.row(i).transpose(), x);
            mapped.push_back(std::move(c));
        }
        total = checked_add(total, checked_mul(height, normalized_volume_impl(mapped, d - 1)));
    }
    return total;
}

} // namespace

Int polytope_normalized_volume(const LatticePolytope& p) {
    std::vector<IntVector> pts = distinct_points(p.points());
    return normalized_volume_impl(pts, p.dim());
}

} // namespace eulercc
