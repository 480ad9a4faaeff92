#pragma once

#include "jetcalc/errors.hpp"
#include "jetcalc/polynomial.hpp"
#include "jetcalc/rational.hpp"

#include <vector>

namespace jetcalc {

// Coefficient-ring glue for Series<C>. C is Rational for concrete jets and
// Polynomial for symbolic jets over a coefficient ring.
template <class C>
struct CoeffOps;

template <>
struct CoeffOps<Rational> {
    static Rational zero(const Rational&) { return Rational(0); }
    static Rational from_rational(const Rational&, const Rational& q) { return q; }
    static bool is_zero(const Rational& c) { return c == 0; }
};

template <>
struct CoeffOps<Polynomial> {
    static Polynomial zero(const Polynomial& proto) {
        return Polynomial::zero(proto.arity(), proto.names());
    }
    static Polynomial from_rational(const Polynomial& proto, const Rational& q) {
        return Polynomial::constant(proto.arity(), q, proto.names());
    }
    static bool is_zero(const Polynomial& c) { return c.is_zero(); }
};

// Truncated power series in one parameter t, exact modulo t^{order+1}.
// coeff[d] is the degree-d coefficient; the size is always order+1.
template <class C>
struct Series {
    int order = 0;
    std::vector<C> coeff;

    static Series zeroes(int order, const C& proto) {
        if (order < 0) throw DomainError("jets: negative truncation order");
        Series s;
        s.order = order;
        s.coeff.assign(order + 1, CoeffOps<C>::zero(proto));
        return s;
    }

    bool is_zero() const {
        for (const auto& c : coeff)
            if (!CoeffOps<C>::is_zero(c)) return false;
        return true;
    }

    // smallest degree with nonzero coefficient; -1 when zero
    int t_order() const {
        for (int d = 0; d <= order; ++d)
            if (!CoeffOps<C>::is_zero(coeff[d])) return d;
        return -1;
    }

    bool operator==(const Series&) const = default;
};

template <class C>
Series<C> series_add(const Series<C>& a, const Series<C>& b) {
    if (a.order != b.order) throw DomainError("jets: series order mismatch in addition");
    Series<C> r = a;
    for (int d = 0; d <= r.order; ++d) r.coeff[d] = r.coeff[d] + b.coeff[d];
    return r;
}

template <class C>
Series<C> series_mul(const Series<C>& a, const Series<C>& b) {
    if (a.order != b.order) throw DomainError("jets: series order mismatch in multiplication");
    Series<C> r = Series<C>::zeroes(a.order, a.coeff[0]);
    for (int i = 0; i <= a.order; ++i) {
        if (CoeffOps<C>::is_zero(a.coeff[i])) continue;
        for (int j = 0; i + j <= a.order; ++j)
            r.coeff[i + j] = r.coeff[i + j] + a.coeff[i] * b.coeff[j];
    }
    return r;
}

template <class C>
Series<C> series_scale(const Series<C>& a, const Rational& c) {
    Series<C> r = a;
    for (auto& x : r.coeff) x = x * CoeffOps<C>::from_rational(a.coeff[0], c);
    return r;
}

template <class C>
Series<C> series_truncate(const Series<C>& a, int l) {
    if (l < 0 || l > a.order) throw DomainError("jets: truncation order out of range");
    Series<C> r;
    r.order = l;
    r.coeff.assign(a.coeff.begin(), a.coeff.begin() + l + 1);
    return r;
}

// multiply by t^s; the order grows by s
template <class C>
Series<C> series_shift_up(const Series<C>& a, int s) {
    if (s < 0) throw DomainError("jets: negative shift");
    Series<C> r = Series<C>::zeroes(a.order + s, a.coeff[0]);
    for (int d = 0; d <= a.order; ++d) r.coeff[d + s] = a.coeff[d];
    return r;
}

// divide by t^s; the first s coefficients must vanish
template <class C>
Series<C> series_shift_down(const Series<C>& a, int s) {
    if (s < 0 || s > a.order) throw DomainError("jets: shift out of range");
    for (int d = 0; d < s; ++d)
        if (!CoeffOps<C>::is_zero(a.coeff[d]))
            throw DomainError("jets: series not divisible by requested power of t");
    Series<C> r;
    r.order = a.order - s;
    r.coeff.assign(a.coeff.begin() + s, a.coeff.end());
    return r;
}

// a / b where b has an invertible constant term
inline Series<Rational> series_divide(const Series<Rational>& a, const Series<Rational>& b) {
    if (a.order != b.order) throw DomainError("jets: series order mismatch in division");
    if (b.coeff[0] == 0) throw DomainError("jets: division by a series without unit term");
    Series<Rational> q = Series<Rational>::zeroes(a.order, Rational(0));
    for (int d = 0; d <= a.order; ++d) {
        Rational acc = a.coeff[d];
        for (int e = 1; e <= d; ++e) acc -= b.coeff[e] * q.coeff[d - e];
        q.coeff[d] = acc / b.coeff[0];
    }
    return q;
}

// p(args[0], ..., args[n-1]) with all argument series of one order
template <class C>
Series<C> series_compose(const Polynomial& p, const std::vector<Series<C>>& args) {
    if (static_cast<int>(args.size()) != p.arity())
        throw ArityError("jets: composition needs one series per variable");
    if (args.empty()) {
        Series<C> r = Series<C>::zeroes(0, CoeffOps<C>::from_rational(C{}, rat(0)));
        r.coeff[0] = CoeffOps<C>::from_rational(r.coeff[0], p.coefficient(Monomial::one(0)));
        return r;
    }
    const int order = args[0].order;
    for (const auto& a : args)
        if (a.order != order) throw DomainError("jets: argument series orders disagree");
    const C& proto = args[0].coeff[0];

    std::vector<std::vector<Series<C>>> powers(args.size());
    auto power = [&](int i, int e) -> const Series<C>& {
        auto& cache = powers[i];
        if (cache.empty()) {
            Series<C> one = Series<C>::zeroes(order, proto);
            one.coeff[0] = CoeffOps<C>::from_rational(proto, rat(1));
            cache.push_back(std::move(one));
        }
        while (static_cast<int>(cache.size()) <= e)
            cache.push_back(series_mul(cache.back(), args[i]));
        return cache[e];
    };

    Series<C> sum = Series<C>::zeroes(order, proto);
    for (const auto& t : p.terms()) {
        Series<C> prod = Series<C>::zeroes(order, proto);
        prod.coeff[0] = CoeffOps<C>::from_rational(proto, t.coeff);
        for (int i = 0; i < p.arity(); ++i)
            if (t.mon.exps[i] > 0) prod = series_mul(prod, power(i, t.mon.exps[i]));
        sum = series_add(sum, prod);
    }
    return sum;
}

} // namespace jetcalc
