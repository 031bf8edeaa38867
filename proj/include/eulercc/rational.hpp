#pragma once

#include <numeric>
#include <string>

#include "eulercc/checked.hpp"

namespace eulercc {

// Exact rational number, always reduced, denominator > 0.
// Used for torsion parts of torus coordinates (values modulo 1).
class Rational {
public:
    Rational() = default;

    Rational(Int num, Int den = 1) : num_(num), den_(den) {
        if (den_ == 0)
            throw invalid_input_error("rational with zero denominator");
        reduce();
    }

    Int num() const { return num_; }
    Int den() const { return den_; }

    bool is_zero() const { return num_ == 0; }

    Rational operator+(const Rational& o) const {
        Int g = std::gcd(den_, o.den_);
        Int lhs_scale = exact_div(o.den_, g);
        Int rhs_scale = exact_div(den_, g);
        Int n = checked_add(checked_mul(num_, lhs_scale), checked_mul(o.num_, rhs_scale));
        Int d = checked_mul(den_, lhs_scale);
        return Rational(n, d);
    }

    Rational operator-() const { return Rational(checked_neg(num_), den_); }

    Rational operator-(const Rational& o) const { return *this + (-o); }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }

    bool operator<(const Rational& o) const {
        // cross-multiplication on reduced forms, denominators positive
        return checked_mul(num_, o.den_) < checked_mul(o.num_, den_);
    }

    // Representative in [0, 1); the canonical form of a torsion value.
    Rational mod1() const {
        Int r = num_ % den_;
        if (r < 0) r = checked_add(r, den_);
        return Rational(r, den_);
    }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    Int num_ = 0;
    Int den_ = 1;

    void reduce() {
        if (den_ < 0) {
            num_ = checked_neg(num_);
            den_ = checked_neg(den_);
        }
        Int g = std::gcd(num_ < 0 ? checked_neg(num_) : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }
};

} // namespace eulercc
