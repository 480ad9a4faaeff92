#include "jetcalc/textio.hpp"

#include "jetcalc/errors.hpp"

#include <cctype>
#include <vector>

namespace jetcalc {

std::string poly_str(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : p.terms()) {
        Rational c = t.coeff;
        bool neg = c < 0;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        Rational mag = neg ? Rational(-c) : c;
        std::string mono;
        for (int i = 0; i < t.mon.arity(); ++i) {
            int e = t.mon.exps[i];
            if (e == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += var_name(p.names(), p.arity(), i);
            if (e != 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty()) {
            out += rat_str(mag);
        } else {
            if (mag != 1) out += rat_str(mag) + "*";
            out += mono;
        }
    }
    return out;
}

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;
    int line;
    int col_base;

    void skip_space() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }
    bool done() {
        skip_space();
        return pos >= text.size();
    }
    char peek() {
        skip_space();
        return pos < text.size() ? text[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError("cli: " + msg, line, col_base + static_cast<int>(pos));
    }
    std::string take_integer() {
        skip_space();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected an integer");
        return std::string(text.substr(start, pos - start));
    }
    std::string take_identifier() {
        skip_space();
        std::size_t start = pos;
        auto head = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
        auto tail = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
        if (pos >= text.size() || !head(text[pos])) fail("expected an identifier");
        ++pos;
        while (pos < text.size() && tail(text[pos])) ++pos;
        return std::string(text.substr(start, pos - start));
    }
};

} // namespace

Polynomial parse_polynomial(std::string_view text, const VarNames& names, int line, int col_base) {
    if (!names) throw DomainError("cli: polynomial parser needs a variable context");
    const int arity = static_cast<int>(names->size());
    Cursor cur{text, 0, line, col_base};

    auto var_index = [&](const std::string& id, std::size_t at) -> int {
        for (int i = 0; i < arity; ++i)
            if ((*names)[i] == id) return i;
        throw ParseError("cli: unknown variable '" + id + "'", line,
                         col_base + static_cast<int>(at));
    };

    // factor := integer [ "/" integer ] | identifier [ "^" integer ]
    auto parse_factor = [&](Rational& coeff, Monomial& mono) {
        char c = cur.peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = cur.take_integer();
            if (cur.peek() == '/') {
                ++cur.pos;
                std::string den = cur.take_integer();
                Integer d(den);
                if (d == 0) cur.fail("zero denominator");
                coeff *= rat(Integer(num), d);
            } else {
                coeff *= Rational(Integer(num));
            }
            return;
        }
        std::size_t at = cur.pos;
        std::string id = cur.take_identifier();
        int v = var_index(id, at);
        int e = 1;
        if (cur.peek() == '^') {
            ++cur.pos;
            std::string digits = cur.take_integer();
            if (digits.size() > 6) cur.fail("exponent too large");
            e = std::stoi(digits);
        }
        mono.exps[v] += e;
    };

    std::vector<Term> terms;
    bool first = true;
    while (true) {
        if (cur.done()) {
            if (first) cur.fail("empty polynomial");
            break;
        }
        Rational sign = rat(1);
        char c = cur.peek();
        if (c == '+' || c == '-') {
            if (c == '-') sign = rat(-1);
            ++cur.pos;
        } else if (!first) {
            cur.fail("expected '+' or '-' between terms");
        }
        Rational coeff = sign;
        Monomial mono = Monomial::one(arity);
        parse_factor(coeff, mono);
        while (cur.peek() == '*') {
            ++cur.pos;
            parse_factor(coeff, mono);
        }
        terms.push_back(Term{std::move(mono), coeff});
        first = false;
    }
    return Polynomial::from_terms(arity, std::move(terms), names);
}

} // namespace jetcalc
