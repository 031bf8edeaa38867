#pragma once

#include <cstdint>

#include "eulercc/errors.hpp"

namespace eulercc {

// All exact quantities (Euler characteristics, multiplicities, volumes,
// exponents) are held in Int. Every arithmetic step that could leave the
// 64-bit range goes through these helpers and throws instead of wrapping.
using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        throw arithmetic_overflow_error("integer overflow in addition");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r))
        throw arithmetic_overflow_error("integer overflow in subtraction");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw arithmetic_overflow_error("integer overflow in multiplication");
    return r;
}

inline Int checked_neg(Int a) { return checked_sub(0, a); }

// Exact quotient; the caller promises divisibility (checked).
inline Int exact_div(Int a, Int b) {
    if (b == 0 || a % b != 0)
        throw arithmetic_overflow_error("non-exact integer division");
    return a / b;
}

} // namespace eulercc
