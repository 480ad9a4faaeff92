#include "jetcalc/rational.hpp"

#include "jetcalc/errors.hpp"

#include <cctype>

namespace jetcalc {

Rational rat(long num, long den) {
    if (den == 0) throw DomainError("algebra: rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational rat(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("algebra: rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational rat_parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw DomainError("algebra: empty rational literal");
    std::size_t pos = 0;
    auto ok_part = [](const std::string& part, bool sign_ok) {
        if (part.empty()) return false;
        std::size_t i = 0;
        if (sign_ok && (part[0] == '-' || part[0] == '+')) i = 1;
        if (i == part.size()) return false;
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
        return true;
    };
    pos = s.find('/');
    if (pos == std::string::npos) {
        if (!ok_part(s, true)) throw DomainError("algebra: bad rational literal '" + s + "'");
        Rational q(s);
        q.canonicalize();
        return q;
    }
    std::string num = s.substr(0, pos), den = s.substr(pos + 1);
    if (!ok_part(num, true) || !ok_part(den, false))
        throw DomainError("algebra: bad rational literal '" + s + "'");
    Integer n(num), d(den);
    return rat(n, d);
}

std::string rat_str(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string point_str(const std::vector<Rational>& pt) {
    std::string out = "(";
    for (std::size_t i = 0; i < pt.size(); ++i) {
        if (i) out += ", ";
        out += rat_str(pt[i]);
    }
    out += ")";
    return out;
}

} // namespace jetcalc
