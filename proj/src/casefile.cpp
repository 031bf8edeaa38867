#include "eulercc/casefile.hpp"

#include <fstream>
#include <optional>
#include <sstream>

namespace eulercc {

namespace {

struct Token {
    std::string text;
    int column; // 1-based start position in the raw line
};

std::vector<Token> tokenize(const std::string& raw) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < raw.size()) {
        if (raw[i] == '#') break;
        if (std::isspace(static_cast<unsigned char>(raw[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i])) && raw[i] != '#')
            ++i;
        out.push_back({raw.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return out;
}

Int parse_int(const Token& t, int line, const char* what) {
    try {
        std::size_t used = 0;
        Int v = std::stoll(t.text, &used);
        if (used != t.text.size())
            throw case_parse_error(line, t.column, std::string("expected integer ") + what);
        return v;
    } catch (const case_parse_error&) {
        throw;
    } catch (...) {
        throw case_parse_error(line, t.column, std::string("expected integer ") + what);
    }
}

TorusModel parse_model(const Token& t, int line) {
    const std::string& s = t.text;
    auto tail = [&](std::size_t prefix) { return s.substr(prefix); };
    auto tail_int = [&](std::size_t prefix, const char* what) {
        Token sub{tail(prefix), t.column + static_cast<int>(prefix)};
        return parse_int(sub, line, what);
    };
    if (s == "fulldim") return FullDimensionalModel{};
    if (s.rfind("finite:", 0) == 0) return FiniteModel{tail_int(7, "finite point count")};
    if (s.rfind("subtorus:", 0) == 0)
        return SubtorusModel{static_cast<int>(tail_int(9, "subtorus dimension"))};
    if (s.rfind("declared:", 0) == 0) return DeclaredModel{tail_int(9, "declared degree")};
    if (s.rfind("hypersurface:", 0) == 0) {
        std::vector<std::vector<Int>> points;
        std::string body = tail(13);
        if (body.empty())
            throw case_parse_error(line, t.column, "hypersurface model needs vertices");
        std::size_t pos = 0;
        while (pos <= body.size()) {
            std::size_t end = body.find(';', pos);
            std::string vert = body.substr(pos, end == std::string::npos ? end : end - pos);
            std::vector<Int> coords;
            std::size_t cpos = 0;
            while (cpos <= vert.size()) {
                std::size_t cend = vert.find(',', cpos);
                std::string num = vert.substr(cpos, cend == std::string::npos ? cend : cend - cpos);
                Token sub{num, t.column + 13 + static_cast<int>(pos + cpos)};
                coords.push_back(parse_int(sub, line, "vertex coordinate"));
                if (cend == std::string::npos) break;
                cpos = cend + 1;
            }
            points.push_back(std::move(coords));
            if (end == std::string::npos) break;
            pos = end + 1;
        }
        try {
            return HypersurfaceModel{LatticePolytope::from_points(points)};
        } catch (const invalid_input_error& e) {
            throw case_parse_error(line, t.column, e.what());
        }
    }
    throw case_parse_error(line, t.column,
                           "unknown torus model '" + s +
                               "' (expected finite:N, fulldim, subtorus:N, hypersurface:..., declared:N)");
}

struct GroupSection {
    std::optional<Series> series;
    std::optional<int> rank;
    std::optional<Realization> realization;
    int line = 0;
};

} // namespace

CaseSpec parse_case_text(const std::string& text, const std::string& name) {
    enum class Section { None, Group, Strata, Closure, Links, Sheaf };
    Section section = Section::None;
    std::string sheaf_name;

    GroupSection group;
    std::vector<Stratum> strata;
    std::map<std::string, int> stratum_lines; // id -> declaring line
    std::vector<std::pair<std::string, std::string>> closure_pairs;
    LinkData links;
    std::map<std::pair<std::string, std::string>, int> link_lines;
    std::map<std::string, ConstructibleFunction> sheaves;

    auto known_stratum = [&](const Token& t, int line) {
        if (!stratum_lines.count(t.text))
            throw case_parse_error(line, t.column, "unknown stratum id '" + t.text + "'");
    };

    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::vector<Token> tokens = tokenize(raw);
        if (tokens.empty()) continue;

        // section headers
        if (tokens.front().text.front() == '[') {
            std::string header;
            for (std::size_t i = 0; i < tokens.size(); ++i) {
                if (i) header += " ";
                header += tokens[i].text;
            }
            if (header.back() != ']')
                throw case_parse_error(line, tokens.front().column, "unterminated section header");
            std::string body = header.substr(1, header.size() - 2);
            if (body == "group") {
                section = Section::Group;
                group.line = line;
            } else if (body == "strata") {
                section = Section::Strata;
            } else if (body == "closure") {
                section = Section::Closure;
            } else if (body == "links") {
                section = Section::Links;
            } else if (body.rfind("sheaf ", 0) == 0 && body.size() > 6) {
                section = Section::Sheaf;
                sheaf_name = body.substr(6);
                if (sheaves.count(sheaf_name))
                    throw case_parse_error(line, tokens.front().column,
                                           "duplicate sheaf section '" + sheaf_name + "'");
                sheaves.emplace(sheaf_name, ConstructibleFunction{});
            } else {
                throw case_parse_error(line, tokens.front().column,
                                       "unknown section [" + body + "]");
            }
            continue;
        }

        switch (section) {
            case Section::None:
                throw case_parse_error(line, tokens.front().column,
                                       "data before any section header");

            case Section::Group: {
                if (tokens.size() != 3 || tokens[1].text != "=")
                    throw case_parse_error(line, tokens.front().column,
                                           "expected 'key = value' in [group]");
                const std::string& key = tokens[0].text;
                const Token& value = tokens[2];
                if (key == "series") {
                    if (group.series)
                        throw case_parse_error(line, tokens[0].column, "duplicate key 'series'");
                    if (value.text == "A") group.series = Series::A;
                    else if (value.text == "B") group.series = Series::B;
                    else if (value.text == "C") group.series = Series::C;
                    else if (value.text == "D") group.series = Series::D;
                    else if (value.text == "T") group.series = Series::Torus;
                    else
                        throw case_parse_error(line, value.column,
                                               "unknown series '" + value.text + "' (A/B/C/D/T)");
                } else if (key == "rank") {
                    if (group.rank)
                        throw case_parse_error(line, tokens[0].column, "duplicate key 'rank'");
                    group.rank = static_cast<int>(parse_int(value, line, "rank"));
                } else if (key == "realization") {
                    if (group.realization)
                        throw case_parse_error(line, tokens[0].column, "duplicate key 'realization'");
                    if (value.text == "SL") group.realization = Realization::SL;
                    else if (value.text == "GL") group.realization = Realization::GL;
                    else
                        throw case_parse_error(line, value.column,
                                               "unknown realization '" + value.text + "' (SL/GL)");
                } else {
                    throw case_parse_error(line, tokens[0].column,
                                           "unknown key '" + key + "' in [group]");
                }
                break;
            }

            case Section::Strata: {
                if (tokens.size() != 7)
                    throw case_parse_error(line, tokens.front().column,
                                           "expected 7 fields: id dim kind rank dim_in_torus "
                                           "torus_model chi_c");
                Stratum s;
                s.id = tokens[0].text;
                if (stratum_lines.count(s.id))
                    throw case_parse_error(line, tokens[0].column,
                                           "duplicate stratum id '" + s.id + "'");
                s.dim = static_cast<int>(parse_int(tokens[1], line, "dimension"));
                const std::string& kind = tokens[2].text;
                if (kind == "semisimple") {
                    SemisimpleData ss;
                    ss.rank = static_cast<int>(parse_int(tokens[3], line, "rank"));
                    ss.dim_in_torus = static_cast<int>(parse_int(tokens[4], line, "dim_in_torus"));
                    ss.model = parse_model(tokens[5], line);
                    s.semisimple = std::move(ss);
                } else if (kind == "nonsemisimple") {
                    for (int i : {3, 4, 5})
                        if (tokens[static_cast<std::size_t>(i)].text != "-")
                            throw case_parse_error(line, tokens[static_cast<std::size_t>(i)].column,
                                                   "nonsemisimple strata take '-' here");
                } else {
                    throw case_parse_error(line, tokens[2].column,
                                           "kind must be semisimple or nonsemisimple");
                }
                s.chi_c = parse_int(tokens[6], line, "chi_c");
                stratum_lines.emplace(s.id, line);
                strata.push_back(std::move(s));
                break;
            }

            case Section::Closure: {
                if (tokens.size() != 3 || tokens[1].text != "<")
                    throw case_parse_error(line, tokens.front().column, "expected 'a < b'");
                known_stratum(tokens[0], line);
                known_stratum(tokens[2], line);
                if (tokens[0].text == tokens[2].text)
                    throw case_parse_error(line, tokens[0].column,
                                           "closure relation must be between distinct strata");
                closure_pairs.emplace_back(tokens[0].text, tokens[2].text);
                break;
            }

            case Section::Links: {
                if (tokens.size() != 5 || tokens[0].text != "e" || tokens[3].text != "=")
                    throw case_parse_error(line, tokens.front().column, "expected 'e a b = n'");
                known_stratum(tokens[1], line);
                known_stratum(tokens[2], line);
                auto key = std::make_pair(tokens[1].text, tokens[2].text);
                if (link_lines.count(key))
                    throw case_parse_error(line, tokens[1].column,
                                           "duplicate link e(" + key.first + ", " + key.second + ")");
                link_lines.emplace(key, line);
                links.set(key.first, key.second, parse_int(tokens[4], line, "link value"));
                break;
            }

            case Section::Sheaf: {
                if (tokens.size() != 3 || tokens[1].text != "=")
                    throw case_parse_error(line, tokens.front().column, "expected 'id = n'");
                known_stratum(tokens[0], line);
                ConstructibleFunction& f = sheaves.at(sheaf_name);
                if (f.has(tokens[0].text))
                    throw case_parse_error(line, tokens[0].column,
                                           "duplicate sheaf value for '" + tokens[0].text + "'");
                f.set(tokens[0].text, parse_int(tokens[2], line, "sheaf value"));
                break;
            }
        }
    }

    if (!group.series || !group.rank)
        throw case_parse_error(line + 1, 1, "missing [group] section with series and rank");
    if (group.series != Series::A && group.realization)
        throw case_parse_error(group.line, 1, "realization is only meaningful for series A");
    if (strata.empty())
        throw case_parse_error(line + 1, 1, "missing [strata] section");

    RootSystem rs = [&] {
        try {
            return build_root_system(*group.series, *group.rank,
                                     group.realization.value_or(Realization::GL));
        } catch (const invalid_input_error& e) {
            throw case_parse_error(group.line, 1, e.what());
        }
    }();

    return CaseSpec{name, std::move(rs), StratPoset(std::move(strata), closure_pairs),
                    std::move(links), std::move(sheaves), {}, {}};
}

CaseSpec load_case_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw invalid_input_error("cannot open case file '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_case_text(buffer.str(), path.stem().string());
}

std::string serialize_case(const CaseSpec& c) {
    std::ostringstream out;
    out << "# eulercc case: " << c.name << "\n\n";

    out << "[group]\n";
    out << "series = " << series_name(c.group.series()) << "\n";
    out << "rank = " << c.group.rank() << "\n";
    if (c.group.series() == Series::A)
        out << "realization = " << (c.group.realization() == Realization::SL ? "SL" : "GL") << "\n";
    out << "\n";

    out << "[strata]\n";
    out << "# id dim kind rank dim_in_torus torus_model chi_c\n";
    for (const Stratum& s : c.poset.strata()) {
        out << s.id << " " << s.dim << " ";
        if (s.is_semisimple()) {
            out << "semisimple " << s.semisimple->rank << " " << s.semisimple->dim_in_torus << " "
                << torus_model_str(s.semisimple->model);
        } else {
            out << "nonsemisimple - - -";
        }
        out << " " << s.chi_c << "\n";
    }
    out << "\n";

    out << "[closure]\n";
    const auto& strata = c.poset.strata();
    for (std::size_t a = 0; a < strata.size(); ++a)
        for (std::size_t b = 0; b < strata.size(); ++b)
            if (c.poset.less(a, b))
                out << strata[a].id << " < " << strata[b].id << "\n";
    out << "\n";

    out << "[links]\n";
    auto emit_link = [&](const std::string& a, const std::string& b) {
        if (c.links.has(a, b))
            out << "e " << a << " " << b << " = " << c.links.at(a, b) << "\n";
    };
    for (std::size_t a = 0; a < strata.size(); ++a) {
        emit_link(strata[a].id, strata[a].id);
        for (std::size_t b = 0; b < strata.size(); ++b)
            if (c.poset.less(a, b)) emit_link(strata[a].id, strata[b].id);
    }

    for (const auto& [name, f] : c.sheaves) {
        out << "\n[sheaf " << name << "]\n";
        for (const Stratum& s : c.poset.strata())
            if (f.has(s.id)) out << s.id << " = " << f.at(s.id) << "\n";
    }
    return out.str();
}

} // namespace eulercc
