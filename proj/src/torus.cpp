#include "eulercc/torus.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace eulercc {

CoordValue::CoordValue(Rational torsion, ExponentVec exponents)
    : torsion_(torsion.mod1()), exponents_(std::move(exponents)) {}

CoordValue CoordValue::one(Eigen::Index generic_count) {
    return CoordValue(Rational(0), ExponentVec::Zero(generic_count));
}

CoordValue CoordValue::generic(int index, Eigen::Index generic_count) {
    if (index < 1 || index > generic_count)
        throw invalid_input_error("generic generator index out of range");
    ExponentVec e = ExponentVec::Zero(generic_count);
    e[index - 1] = 1;
    return CoordValue(Rational(0), std::move(e));
}

CoordValue CoordValue::root_of_unity(const Rational& torsion, Eigen::Index generic_count) {
    return CoordValue(torsion, ExponentVec::Zero(generic_count));
}

bool CoordValue::is_one() const {
    return torsion_.is_zero() && exponents_.isZero();
}

CoordValue CoordValue::operator*(const CoordValue& o) const {
    if (exponents_.size() != o.exponents_.size())
        throw invalid_input_error("coordinate values over different generic-generator counts");
    ExponentVec e(exponents_.size());
    for (Eigen::Index i = 0; i < e.size(); ++i)
        e[i] = checked_add(exponents_[i], o.exponents_[i]);
    return CoordValue(torsion_ + o.torsion_, std::move(e));
}

CoordValue CoordValue::inverse() const {
    ExponentVec e(exponents_.size());
    for (Eigen::Index i = 0; i < e.size(); ++i)
        e[i] = checked_neg(exponents_[i]);
    return CoordValue(-torsion_, std::move(e));
}

bool CoordValue::operator==(const CoordValue& o) const {
    if (exponents_.size() != o.exponents_.size())
        throw invalid_input_error("coordinate values over different generic-generator counts");
    return torsion_ == o.torsion_ && exponents_ == o.exponents_;
}

bool CoordValue::operator<(const CoordValue& o) const {
    if (exponents_.size() != o.exponents_.size())
        throw invalid_input_error("coordinate values over different generic-generator counts");
    if (torsion_ != o.torsion_) return torsion_ < o.torsion_;
    for (Eigen::Index i = 0; i < exponents_.size(); ++i)
        if (exponents_[i] != o.exponents_[i]) return exponents_[i] < o.exponents_[i];
    return false;
}

std::string CoordValue::str() const {
    std::ostringstream out;
    bool first = true;
    if (!torsion_.is_zero()) {
        out << "w:" << torsion_.str();
        first = false;
    }
    for (Eigen::Index i = 0; i < exponents_.size(); ++i) {
        if (exponents_[i] == 0) continue;
        if (!first) out << "*";
        out << "g" << (i + 1);
        if (exponents_[i] != 1) out << "^" << exponents_[i];
        first = false;
    }
    if (first) out << "1";
    return out.str();
}

TorusPoint::TorusPoint(std::vector<CoordValue> coords) : coords_(std::move(coords)) {
    if (coords_.empty())
        throw invalid_input_error("torus point with no coordinates");
    for (const auto& c : coords_)
        if (c.generic_count() != coords_.front().generic_count())
            throw invalid_input_error("torus point coordinates over different generic-generator counts");
}

bool TorusPoint::is_identity() const {
    for (const auto& c : coords_)
        if (!c.is_one()) return false;
    return true;
}

bool TorusPoint::operator==(const TorusPoint& o) const {
    if (coords_.size() != o.coords_.size())
        throw invalid_input_error("torus points of different lengths");
    for (std::size_t i = 0; i < coords_.size(); ++i)
        if (coords_[i] != o.coords_[i]) return false;
    return true;
}

bool TorusPoint::operator<(const TorusPoint& o) const {
    if (coords_.size() != o.coords_.size())
        throw invalid_input_error("torus points of different lengths");
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i] != o.coords_[i]) return coords_[i] < o.coords_[i];
    }
    return false;
}

std::string TorusPoint::str() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) out << ",";
        out << coords_[i].str();
    }
    return out.str();
}

TorusPoint TorusPoint::identity(Eigen::Index coordinate_count, Eigen::Index generic_count) {
    std::vector<CoordValue> cs;
    cs.reserve(static_cast<std::size_t>(coordinate_count));
    for (Eigen::Index i = 0; i < coordinate_count; ++i)
        cs.push_back(CoordValue::one(generic_count));
    return TorusPoint(std::move(cs));
}

namespace {

// Minimal recursive-descent pieces for the point grammar.

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;

    bool done() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }

    [[noreturn]] void fail(const std::string& what) const {
        throw invalid_input_error("bad point spec at offset " + std::to_string(pos) + ": " + what);
    }

    Int integer() {
        std::size_t start = pos;
        if (!done() && (peek() == '-' || peek() == '+')) ++pos;
        std::size_t digits_from = pos;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
        if (pos == digits_from) fail("expected integer");
        try {
            return std::stoll(s.substr(start, pos - start));
        } catch (const std::out_of_range&) {
            fail("integer out of range");
        }
    }
};

struct RawFactor {
    // either a torsion contribution or a generic power
    bool is_torsion = false;
    Rational torsion{0};
    int generic_index = 0; // 1-based
    Int exponent = 0;
};

RawFactor parse_factor(Cursor& c) {
    RawFactor f;
    if (c.done()) c.fail("expected factor");
    if (c.peek() == '1') {
        ++c.pos;
        f.is_torsion = true;
        f.torsion = Rational(0);
        return f;
    }
    if (c.peek() == 'w') {
        ++c.pos;
        if (c.done() || c.peek() != ':') c.fail("expected ':' after 'w'");
        ++c.pos;
        Int num = c.integer();
        Int den = 1;
        if (!c.done() && c.peek() == '/') {
            ++c.pos;
            den = c.integer();
            if (den <= 0) c.fail("torsion denominator must be positive");
        }
        f.is_torsion = true;
        f.torsion = Rational(num, den);
        return f;
    }
    if (c.peek() == 'g') {
        ++c.pos;
        Int idx = c.integer();
        if (idx < 1) c.fail("generic index must be >= 1");
        f.generic_index = static_cast<int>(idx);
        f.exponent = 1;
        if (!c.done() && c.peek() == '^') {
            ++c.pos;
            f.exponent = c.integer();
        }
        return f;
    }
    c.fail("expected '1', 'w:p/q' or 'gN'");
}

struct RawCoord {
    Rational torsion{0};
    std::vector<std::pair<int, Int>> generic_powers; // (index, exponent)
};

RawCoord parse_coord(Cursor& c) {
    RawCoord out;
    while (true) {
        RawFactor f = parse_factor(c);
        if (f.is_torsion)
            out.torsion = (out.torsion + f.torsion).mod1();
        else
            out.generic_powers.emplace_back(f.generic_index, f.exponent);
        if (!c.done() && c.peek() == '*') {
            ++c.pos;
            continue;
        }
        break;
    }
    return out;
}

} // namespace

TorusPoint parse_torus_point(const std::string& spec) {
    // split on commas, parse each coordinate, then size exponent vectors
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : spec) {
        if (ch == ',') {
            parts.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur.push_back(ch);
        }
    }
    parts.push_back(cur);

    std::vector<RawCoord> raws;
    int max_generic = 0;
    for (const auto& p : parts) {
        if (p.empty())
            throw invalid_input_error("bad point spec: empty coordinate");
        Cursor c{p};
        RawCoord rc = parse_coord(c);
        if (!c.done()) c.fail("trailing characters in coordinate");
        for (auto& [idx, exp] : rc.generic_powers)
            if (idx > max_generic) max_generic = idx;
        raws.push_back(std::move(rc));
    }

    std::vector<CoordValue> coords;
    coords.reserve(raws.size());
    for (const auto& rc : raws) {
        ExponentVec e = ExponentVec::Zero(max_generic);
        for (auto& [idx, exp] : rc.generic_powers)
            e[idx - 1] = checked_add(e[idx - 1], exp);
        coords.emplace_back(rc.torsion, std::move(e));
    }
    return TorusPoint(std::move(coords));
}

} // namespace eulercc
