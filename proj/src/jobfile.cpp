#include "jetcalc/jobfile.hpp"

#include "jetcalc/errors.hpp"
#include "jetcalc/textio.hpp"

#include <cctype>
#include <cstring>
#include <sstream>

namespace jetcalc {

namespace {

bool is_ident(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

// Cursor over one line; columns are 1-based offsets into the raw line.
struct Scan {
    const std::string& s;
    int line;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    int col() {
        skip_ws();
        return static_cast<int>(pos) + 1;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    void expect(char c) {
        skip_ws();
        if (pos >= s.size() || s[pos] != c)
            throw ParseError(std::string("expected '") + c + "'", line, col());
        ++pos;
    }
    std::string word() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && !std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
        return s.substr(start, pos - start);
    }
    std::string ident(const char* what) {
        int c = col();
        std::string w = word();
        if (!is_ident(w)) throw ParseError(std::string("expected ") + what, line, c);
        return w;
    }
    // Text up to (not including) the next occurrence of any stop character.
    std::string until(const char* stops, int* start_col) {
        skip_ws();
        *start_col = static_cast<int>(pos) + 1;
        std::size_t start = pos;
        while (pos < s.size() && !std::strchr(stops, s[pos])) ++pos;
        std::size_t end = pos;
        while (end > start && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
        return s.substr(start, end - start);
    }
    void end_of_line() {
        if (!done()) throw ParseError("unexpected trailing text", line, col());
    }
};

Rational scan_rational(Scan& sc, const char* stops) {
    int c = 0;
    std::string text = sc.until(stops, &c);
    try {
        return rat_parse(text);
    } catch (const Error&) {
        throw ParseError("invalid rational '" + text + "'", sc.line, c);
    }
}

} // namespace

JobFile parse_job(const std::string& text) {
    JobFile job;
    VarNames ring;
    int arity = 0;
    bool header_seen = false;
    std::map<std::string, std::string> kind_of; // declared name -> statement kind

    auto declare = [&](const std::string& name, const std::string& kind, int line, int col) {
        if (!is_ident(name)) throw ParseError("invalid name '" + name + "'", line, col);
        auto it = kind_of.find(name);
        if (it != kind_of.end())
            throw ParseError("name '" + name + "' already declared as a " + it->second, line, col);
        kind_of.emplace(name, kind);
    };
    auto need_ring = [&](Scan& sc) {
        if (!ring) throw ParseError("no variables declared yet", sc.line, 1);
    };
    // Ring objects referenced by later statements must come from the active ring.
    auto check_ring = [&](const VarNames& declared, const std::string& name, Scan& sc, int col) {
        if (*declared != *ring)
            throw ParseError("'" + name + "' was declared under different variables", sc.line, col);
    };

    // Inline "(r, r, ...)" tuple, or a reference to a declared point.
    auto scan_point = [&](Scan& sc) -> std::vector<Rational> {
        if (sc.peek() == '(') {
            sc.expect('(');
            std::vector<Rational> pt;
            if (sc.peek() != ')')
                for (;;) {
                    pt.push_back(scan_rational(sc, ",)"));
                    if (sc.peek() == ',') {
                        sc.expect(',');
                        continue;
                    }
                    break;
                }
            sc.expect(')');
            return pt;
        }
        int c = sc.col();
        std::string name = sc.ident("a point name or '('");
        auto it = job.points.find(name);
        if (it == job.points.end())
            throw ParseError("unknown point '" + name + "'", sc.line, c);
        return it->second;
    };

    // "{ item, ... }" where an item is a declared polynomial name or an
    // inline expression; declared names win over expressions.
    auto scan_gens = [&](Scan& sc) -> std::vector<Polynomial> {
        sc.expect('{');
        std::vector<Polynomial> gens;
        if (sc.peek() != '}')
            for (;;) {
                int c = 0;
                std::string item = sc.until(",}", &c);
                auto it = job.polys.find(item);
                if (it != job.polys.end()) {
                    check_ring(it->second.names(), item, sc, c);
                    gens.push_back(it->second);
                } else {
                    gens.push_back(parse_polynomial(item, ring, sc.line, c));
                }
                if (sc.peek() == ',') {
                    sc.expect(',');
                    continue;
                }
                break;
            }
        sc.expect('}');
        return gens;
    };

    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
        Scan sc{raw, line_no};
        if (sc.done()) continue;

        if (!header_seen) {
            std::string first = sc.word();
            if (first != "jetcalc/1" || !sc.done())
                throw ParseError("expected header 'jetcalc/1'", line_no, 1);
            header_seen = true;
            continue;
        }

        int stmt_col = sc.col();
        std::string stmt = sc.word();

        if (stmt == "vars") {
            std::vector<std::string> names;
            while (!sc.done()) {
                int c = sc.col();
                std::string v = sc.ident("a variable name");
                for (const std::string& seen : names)
                    if (seen == v) throw ParseError("duplicate variable '" + v + "'", line_no, c);
                names.push_back(v);
            }
            if (names.empty()) throw ParseError("vars needs at least one name", line_no, stmt_col);
            arity = static_cast<int>(names.size());
            ring = make_names(std::move(names));
        } else if (stmt == "poly") {
            need_ring(sc);
            int name_col = sc.col();
            std::string name = sc.ident("a name");
            sc.expect('=');
            int c = 0;
            std::string expr = sc.until("", &c);
            declare(name, "poly", line_no, name_col);
            job.polys.emplace(name, parse_polynomial(expr, ring, line_no, c));
        } else if (stmt == "point") {
            int name_col = sc.col();
            std::string name = sc.ident("a name");
            sc.expect('=');
            std::vector<Rational> pt = scan_point(sc);
            sc.end_of_line();
            declare(name, "point", line_no, name_col);
            job.points.emplace(name, std::move(pt));
        } else if (stmt == "map") {
            need_ring(sc);
            int name_col = sc.col();
            std::string name = sc.ident("a name");
            sc.expect('=');
            sc.expect('(');
            std::vector<Polynomial> coords;
            for (;;) {
                int c = 0;
                std::string expr = sc.until(",)", &c);
                coords.push_back(parse_polynomial(expr, ring, line_no, c));
                if (sc.peek() == ',') {
                    sc.expect(',');
                    continue;
                }
                break;
            }
            sc.expect(')');
            sc.end_of_line();
            declare(name, "map", line_no, name_col);
            job.maps.emplace(name, PolyMap(arity, std::move(coords), ring));
        } else if (stmt == "jet") {
            int name_col = sc.col();
            std::string name = sc.ident("a name");
            sc.expect('=');
            sc.expect('(');
            std::vector<std::vector<Rational>> rows(1);
            while (sc.peek() != ')') {
                if (sc.peek() == ';') {
                    sc.expect(';');
                    rows.emplace_back();
                    continue;
                }
                rows.back().push_back(scan_rational(sc, " \t;)"));
            }
            sc.expect(')');
            sc.end_of_line();
            for (const auto& row : rows)
                if (row.empty() || row.size() != rows[0].size())
                    throw ParseError("jet rows must be nonempty and of equal length", line_no,
                                     stmt_col);
            declare(name, "jet", line_no, name_col);
            job.jets.emplace(name, Jet::from_coefficients(rows));
        } else if (stmt == "variety") {
            need_ring(sc);
            int name_col = sc.col();
            std::string name = sc.ident("a name");
            sc.expect('=');
            std::vector<Polynomial> gens = scan_gens(sc);
            int at_col = sc.col();
            if (sc.word() != "at") throw ParseError("expected 'at'", line_no, at_col);
            std::vector<Rational> pt = scan_point(sc);
            sc.end_of_line();
            declare(name, "variety", line_no, name_col);
            try {
                job.varieties.emplace(name,
                                      AffineVariety(Ideal(arity, std::move(gens), ring), pt));
            } catch (const ParseError&) {
                throw;
            } catch (const Error& e) {
                throw ParseError(e.what(), line_no, name_col);
            }
        } else if (stmt == "divisor") {
            need_ring(sc);
            int name_col = sc.col();
            std::string name = sc.ident("a name");
            sc.expect('=');
            std::vector<Polynomial> gens = scan_gens(sc);
            sc.end_of_line();
            if (gens.empty())
                throw ParseError("divisor needs at least one generator", line_no, stmt_col);
            declare(name, "divisor", line_no, name_col);
            job.divisors.emplace(name,
                                 DivisorCandidate{Ideal(arity, std::move(gens), ring), true});
        } else if (stmt == "option") {
            int key_col = sc.col();
            std::string key = sc.word();
            if (key != "s_max" && key != "jet_order")
                throw ParseError("unknown option '" + key + "'", line_no, key_col);
            int val_col = sc.col();
            std::string val = sc.word();
            int parsed = 0;
            try {
                std::size_t used = 0;
                parsed = std::stoi(val, &used);
                if (used != val.size()) throw std::invalid_argument(val);
            } catch (const std::exception&) {
                throw ParseError("option '" + key + "' needs an integer", line_no, val_col);
            }
            if (parsed < 1)
                throw ParseError("option '" + key + "' must be at least 1", line_no, val_col);
            sc.end_of_line();
            job.options[key] = parsed;
        } else if (stmt == "command") {
            if (!job.command.empty())
                throw ParseError("a job holds exactly one command", line_no, stmt_col);
            int cmd_col = sc.col();
            job.command = sc.word();
            if (job.command.empty())
                throw ParseError("command needs a subcommand name", line_no, cmd_col);
            while (!sc.done()) job.args.push_back(sc.word());
        } else {
            throw ParseError("unknown statement '" + stmt + "'", line_no, stmt_col);
        }
    }
    if (!header_seen) throw ParseError("expected header 'jetcalc/1'", 1, 1);
    if (job.command.empty()) throw ParseError("job has no command", line_no + 1, 1);
    return job;
}

} // namespace jetcalc
