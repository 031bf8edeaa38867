#pragma once

#include <filesystem>

#include "eulercc/catalog.hpp"

namespace eulercc {

// Syntax error in a case file; positions are 1-based.
class case_parse_error : public std::runtime_error {
public:
    case_parse_error(int line, int column, const std::string& what)
        : std::runtime_error("parse error at line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// Parses the sectioned plain-text case format:
//   [group]    series/rank/realization as key = value lines
//   [strata]   one line per stratum: id dim kind rank dim_in_torus model chi_c
//   [closure]  lines "a < b"
//   [links]    lines "e a b = n"
//   [sheaf N]  lines "id = n"
// Comments start with '#'. Unknown sections, unknown keys and references to
// undeclared strata are rejected. Value-level breaches (wrong diagonal links,
// parity, ...) are left to validate().
CaseSpec parse_case_text(const std::string& text, const std::string& name);

CaseSpec load_case_file(const std::filesystem::path& path);

// Canonical text form; parse_case_text round-trips it.
std::string serialize_case(const CaseSpec& c);

} // namespace eulercc
