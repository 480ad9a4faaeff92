#include "jetcalc/polynomial.hpp"

#include "jetcalc/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace jetcalc {

VarNames make_names(std::vector<std::string> names) {
    return std::make_shared<const std::vector<std::string>>(std::move(names));
}

VarNames default_names(int arity) {
    std::vector<std::string> ns;
    ns.reserve(arity);
    for (int i = 0; i < arity; ++i) ns.push_back("x" + std::to_string(i + 1));
    return make_names(std::move(ns));
}

std::string var_name(const VarNames& names, int arity, int i) {
    if (names && static_cast<int>(names->size()) == arity) return (*names)[i];
    return "x" + std::to_string(i + 1);
}

namespace {

struct DrlGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return MonomialOrder::degrevlex().greater(a, b);
    }
};

using Accum = std::map<Monomial, Rational, DrlGreater>;

void accum_add(Accum& acc, const Monomial& m, const Rational& c) {
    auto [it, fresh] = acc.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) acc.erase(it);
    } else if (it->second == 0) {
        acc.erase(it);
    }
}

Polynomial from_accum(int arity, Accum&& acc, VarNames names) {
    std::vector<Term> ts;
    ts.reserve(acc.size());
    for (auto& [m, c] : acc) ts.push_back(Term{m, c});
    Polynomial p = Polynomial::from_terms(arity, std::move(ts), std::move(names));
    return p;
}

} // namespace

void require_same_ring(const Polynomial& a, const Polynomial& b, const char* where) {
    if (a.arity() != b.arity())
        throw ArityError(std::string("algebra: arity mismatch in ") + where + " (" +
                         std::to_string(a.arity()) + " vs " + std::to_string(b.arity()) + ")");
}

Polynomial Polynomial::zero(int arity, VarNames names) {
    Polynomial p;
    p.arity_ = arity;
    p.names_ = std::move(names);
    return p;
}

Polynomial Polynomial::constant(int arity, const Rational& c, VarNames names) {
    Polynomial p = zero(arity, std::move(names));
    if (c != 0) p.terms_.push_back(Term{Monomial::one(arity), c});
    return p;
}

Polynomial Polynomial::variable(int arity, int i, VarNames names) {
    if (i < 0 || i >= arity) throw ArityError("algebra: variable index out of range");
    Polynomial p = zero(arity, std::move(names));
    p.terms_.push_back(Term{Monomial::var(arity, i), rat(1)});
    return p;
}

Polynomial Polynomial::from_terms(int arity, std::vector<Term> terms, VarNames names) {
    Accum acc;
    for (auto& t : terms) {
        if (t.mon.arity() != arity) throw ArityError("algebra: term arity mismatch");
        for (int e : t.mon.exps)
            if (e < 0) throw DomainError("algebra: negative exponent");
        if (t.coeff != 0) accum_add(acc, t.mon, t.coeff);
    }
    Polynomial p = zero(arity, std::move(names));
    p.terms_.reserve(acc.size());
    for (auto& [m, c] : acc) p.terms_.push_back(Term{m, c});
    return p;
}

Polynomial Polynomial::with_names(VarNames names) const {
    Polynomial p = *this;
    p.names_ = std::move(names);
    return p;
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mon.degree());
    return d;
}

int Polynomial::min_degree() const {
    if (terms_.empty()) return -1;
    // canonical order is degree-first descending, so the last term is minimal
    return terms_.back().mon.degree();
}

Rational Polynomial::coefficient(const Monomial& m) const {
    for (const auto& t : terms_)
        if (t.mon == m) return t.coeff;
    return rat(0);
}

Polynomial Polynomial::operator+(const Polynomial& g) const {
    require_same_ring(*this, g, "addition");
    Accum acc;
    for (const auto& t : terms_) accum_add(acc, t.mon, t.coeff);
    for (const auto& t : g.terms_) accum_add(acc, t.mon, t.coeff);
    return from_accum(arity_, std::move(acc), names_ ? names_ : g.names_);
}

Polynomial Polynomial::operator-(const Polynomial& g) const { return *this + (-g); }

Polynomial Polynomial::operator-() const {
    Polynomial p = *this;
    for (auto& t : p.terms_) t.coeff = -t.coeff;
    return p;
}

Polynomial Polynomial::operator*(const Polynomial& g) const {
    require_same_ring(*this, g, "multiplication");
    Accum acc;
    for (const auto& a : terms_)
        for (const auto& b : g.terms_) accum_add(acc, a.mon * b.mon, a.coeff * b.coeff);
    return from_accum(arity_, std::move(acc), names_ ? names_ : g.names_);
}

Polynomial Polynomial::scaled(const Rational& c) const {
    if (c == 0) return zero(arity_, names_);
    Polynomial p = *this;
    for (auto& t : p.terms_) t.coeff *= c;
    return p;
}

Polynomial Polynomial::times_term(const Monomial& m, const Rational& c) const {
    if (c == 0) return zero(arity_, names_);
    Polynomial p = *this;
    for (auto& t : p.terms_) {
        t.mon = t.mon * m;
        t.coeff *= c;
    }
    std::sort(p.terms_.begin(), p.terms_.end(), [](const Term& a, const Term& b) {
        return MonomialOrder::degrevlex().greater(a.mon, b.mon);
    });
    return p;
}

Polynomial Polynomial::pow(int e) const {
    if (e < 0) throw DomainError("algebra: negative power");
    Polynomial r = constant(arity_, rat(1), names_);
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

Polynomial Polynomial::derivative(int var) const {
    if (var < 0 || var >= arity_) throw ArityError("algebra: derivative index out of range");
    std::vector<Term> ts;
    for (const auto& t : terms_) {
        int e = t.mon.exps[var];
        if (e == 0) continue;
        Term d = t;
        d.coeff *= e;
        d.mon.exps[var] = e - 1;
        ts.push_back(std::move(d));
    }
    return from_terms(arity_, std::move(ts), names_);
}

Rational Polynomial::eval(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != arity_)
        throw ArityError("algebra: evaluation point arity mismatch");
    Rational sum = rat(0);
    for (const auto& t : terms_) {
        Rational v = t.coeff;
        for (int i = 0; i < arity_; ++i) {
            for (int e = 0; e < t.mon.exps[i]; ++e) v *= point[i];
        }
        sum += v;
    }
    return sum;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& args) const {
    if (static_cast<int>(args.size()) != arity_)
        throw ArityError("algebra: substitution needs one argument per variable");
    int out_arity = args.empty() ? 0 : args[0].arity();
    VarNames out_names = args.empty() ? nullptr : args[0].names();
    for (const auto& a : args)
        if (a.arity() != out_arity) throw ArityError("algebra: substitution arguments disagree in arity");

    // power cache per variable, grown on demand
    std::vector<std::vector<Polynomial>> powers(arity_);
    auto power = [&](int i, int e) -> const Polynomial& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(Polynomial::constant(out_arity, rat(1), out_names));
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * args[i]);
        return cache[e];
    };

    Polynomial sum = zero(out_arity, out_names);
    for (const auto& t : terms_) {
        Polynomial prod = constant(out_arity, t.coeff, out_names);
        for (int i = 0; i < arity_; ++i)
            if (t.mon.exps[i] > 0) prod = prod * power(i, t.mon.exps[i]);
        sum = sum + prod;
    }
    return sum;
}

Polynomial Polynomial::translate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != arity_)
        throw ArityError("algebra: translation point arity mismatch");
    std::vector<Polynomial> args;
    args.reserve(arity_);
    for (int i = 0; i < arity_; ++i)
        args.push_back(variable(arity_, i, names_) + constant(arity_, point[i], names_));
    return substitute(args);
}

Polynomial Polynomial::homogeneous_component(int d) const {
    std::vector<Term> ts;
    for (const auto& t : terms_)
        if (t.mon.degree() == d) ts.push_back(t);
    return from_terms(arity_, std::move(ts), names_);
}

const Term& Polynomial::leading_term(const MonomialOrder& order) const {
    if (terms_.empty()) throw DomainError("algebra: leading term of zero polynomial");
    const Term* best = &terms_[0];
    for (const auto& t : terms_)
        if (order.greater(t.mon, best->mon)) best = &t;
    return *best;
}

Polynomial initial_form(const Polynomial& p) {
    if (p.is_zero()) throw DomainError("algebra: initial form of zero polynomial");
    return p.homogeneous_component(p.min_degree());
}

Polynomial partial_eval(const Polynomial& p, const std::vector<std::optional<Rational>>& values) {
    if (static_cast<int>(values.size()) != p.arity())
        throw ArityError("algebra: partial evaluation needs one slot per variable");
    std::vector<Polynomial> args;
    args.reserve(p.arity());
    for (int i = 0; i < p.arity(); ++i) {
        if (values[i])
            args.push_back(Polynomial::constant(p.arity(), *values[i], p.names()));
        else
            args.push_back(Polynomial::variable(p.arity(), i, p.names()));
    }
    return p.substitute(args);
}

Monomial monomial_content(const Polynomial& p) {
    if (p.is_zero()) throw DomainError("algebra: monomial content of zero polynomial");
    Monomial g = p.terms()[0].mon;
    for (const auto& t : p.terms()) g = gcd(g, t.mon);
    return g;
}

Polynomial divide_by_monomial(const Polynomial& p, const Monomial& m) {
    std::vector<Term> ts;
    ts.reserve(p.terms().size());
    for (const auto& t : p.terms()) {
        if (!m.divides(t.mon)) throw DomainError("algebra: monomial division not exact");
        ts.push_back(Term{t.mon.quotient_by(m), t.coeff});
    }
    return Polynomial::from_terms(p.arity(), std::move(ts), p.names());
}

namespace {

// Divisors of an integer by trial division, capped so huge values degrade to
// a partial list (callers stay sound, they just see fewer candidates).
std::vector<Integer> bounded_divisors(const Integer& value) {
    Integer v = abs(value);
    std::vector<Integer> divs;
    if (v == 0) return divs;
    Integer d = 1;
    const Integer cap = 1000000;
    while (d * d <= v && d <= cap) {
        if (v % d == 0) {
            divs.push_back(d);
            divs.push_back(v / d);
        }
        d += 1;
    }
    std::sort(divs.begin(), divs.end());
    divs.erase(std::unique(divs.begin(), divs.end()), divs.end());
    return divs;
}

} // namespace

std::vector<Rational> rational_roots(const std::vector<Rational>& coeffs) {
    // strip to a_low .. a_deg with nonzero ends; x = 0 handled separately
    int deg = static_cast<int>(coeffs.size()) - 1;
    while (deg >= 0 && coeffs[deg] == 0) --deg;
    std::vector<Rational> roots;
    if (deg <= 0) return roots;
    int low = 0;
    while (coeffs[low] == 0) ++low;
    if (low > 0) roots.push_back(rat(0));
    if (low == deg) return roots;

    // clear denominators
    Integer scale = 1;
    for (int i = low; i <= deg; ++i) {
        Integer g;
        mpz_gcd(g.get_mpz_t(), scale.get_mpz_t(), coeffs[i].get_den().get_mpz_t());
        scale = scale / g * coeffs[i].get_den();
    }
    std::vector<Integer> a;
    for (int i = low; i <= deg; ++i) a.push_back(coeffs[i].get_num() * (scale / coeffs[i].get_den()));

    auto value_at = [&](const Rational& r) {
        Rational acc = 0;
        for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) acc = acc * r + Rational(a[i]);
        return acc;
    };

    if (a.size() == 2) {
        roots.push_back(rat(-a[0], a[1]));
        std::sort(roots.begin(), roots.end());
        return roots;
    }
    std::set<Rational> found;
    for (const Integer& p : bounded_divisors(a.front()))
        for (const Integer& q : bounded_divisors(a.back())) {
            Rational cand = rat(p, q);
            if (value_at(cand) == 0) found.insert(cand);
            cand = -cand;
            if (value_at(cand) == 0) found.insert(cand);
        }
    roots.insert(roots.end(), found.begin(), found.end());
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace jetcalc
