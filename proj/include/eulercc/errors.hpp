#pragma once

#include <stdexcept>
#include <string>

namespace eulercc {

// Inputs violate an operation's preconditions (mismatched lengths,
// unsupported series/rank, missing sheaf values, failed validation).
class invalid_input_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An enumeration exceeded a configured cap.
class resource_limit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A named entity (catalog case, sheaf, stratum) does not exist.
class not_found_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Exact 64-bit integer arithmetic left the representable range.
// Results are never silently wrapped.
class arithmetic_overflow_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace eulercc
